"""Benchmark rows and their table, csv and svg renderings."""
from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Dict, List, Sequence, Tuple, Union

import numpy as np

from gvn import logs
from gvn.errors import InvalidArgumentException, convert_error
from gvn.generators import Variant
from gvn.typing import THertz, TJoules, TSeconds, TWatts

CSV_HEADER = ("variant", "frequency_hz", "avg_power_w", "worst_delay_s", "pdp_j")
# csv values carry six significant digits
_CSV_REL_TOL = 2e-5
_VARIANT_ORDER: Dict[Variant, int] = {variant: index for index, variant in enumerate(Variant)}
_BY_DISPLAY_NAME: Dict[str, Variant] = {variant.display_name: variant for variant in Variant}

TDestination = Union[str, Path, IO[str]]


class ReportFormat(enum.Enum):
    TABLE = "table"
    CSV = "csv"
    SVG = "svg"


@dataclass(frozen=True)
class BenchRow:
    variant: Variant
    frequency_Hz: THertz
    avg_power_W: TWatts
    worst_delay_s: TSeconds
    pdp_J: TJoules

    def __post_init__(self) -> None:
        if not math.isclose(self.pdp_J, self.avg_power_W * self.worst_delay_s, rel_tol=_CSV_REL_TOL, abs_tol=0.0):
            raise InvalidArgumentException(
                f"pdp_J {self.pdp_J:.5e} is not avg_power_W x worst_delay_s "
                f"({self.avg_power_W * self.worst_delay_s:.5e})"
            )

    @staticmethod
    def measured(variant: Variant, frequency_Hz: THertz, avg_power_W: TWatts, worst_delay_s: TSeconds) -> BenchRow:
        return BenchRow(variant, frequency_Hz, avg_power_W, worst_delay_s, avg_power_W * worst_delay_s)

    @property
    def key(self) -> Tuple[THertz, int]:
        return self.frequency_Hz, _VARIANT_ORDER[self.variant]


@dataclass(frozen=True)
class BenchReport:
    """Rows ordered by frequency, then variant; at most one row per (variant, frequency)."""

    rows: List[BenchRow] = field(default_factory=list)
    params_digest: str = ""

    def __post_init__(self) -> None:
        ordered = sorted(self.rows, key=lambda row: row.key)
        for previous, row in zip(ordered, ordered[1:]):
            if previous.key == row.key:
                raise InvalidArgumentException(
                    f"duplicate row for {row.variant.display_name} at {row.frequency_Hz:.5e} Hz"
                )
        object.__setattr__(self, "rows", ordered)

    def row(self, variant: Variant, frequency_Hz: THertz) -> BenchRow:
        for row in self.rows:
            if row.variant is variant and row.frequency_Hz == frequency_Hz:
                return row
        raise InvalidArgumentException(f"no row for {variant.display_name} at {frequency_Hz:.5e} Hz")

    @property
    def frequencies_Hz(self) -> List[THertz]:
        return sorted({row.frequency_Hz for row in self.rows})

    @property
    def variants(self) -> List[Variant]:
        present = {row.variant for row in self.rows}
        return [variant for variant in Variant if variant in present]


def format_table(report: BenchReport) -> str:
    header = ("Frequency (MHz)", "Design", "Avg power (W)", "Delay (s)", "PDP (J)")
    body = [
        (
            f"{row.frequency_Hz / 1e6:g}",
            row.variant.display_name,
            f"{row.avg_power_W:.5e}",
            f"{row.worst_delay_s:.5e}",
            f"{row.pdp_J:.5e}",
        )
        for row in report.rows
    ]
    widths = [max(len(line[column]) for line in [header, *body]) for column in range(len(header))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in [header, *body]]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"


def format_csv(report: BenchReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow(
            [
                row.variant.display_name,
                f"{row.frequency_Hz:.5e}",
                f"{row.avg_power_W:.5e}",
                f"{row.worst_delay_s:.5e}",
                f"{row.pdp_J:.5e}",
            ]
        )
    return buffer.getvalue()


def read_csv(text: str, params_digest: str = "") -> BenchReport:
    """Parse what `format_csv` writes.

    Raises:
        InvalidArgumentException: wrong header, unknown variant, or a malformed number.
    """
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise InvalidArgumentException(f"csv header must be {','.join(CSV_HEADER)}, got {reader.fieldnames}")
    rows: List[BenchRow] = []
    for line_number, record in enumerate(reader, start=2):
        try:
            rows.append(
                BenchRow(
                    _BY_DISPLAY_NAME[record["variant"]],
                    float(record["frequency_hz"]),
                    float(record["avg_power_w"]),
                    float(record["worst_delay_s"]),
                    float(record["pdp_j"]),
                )
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidArgumentException(f"line {line_number}: malformed row {record}: {e!r}") from None
    return BenchReport(rows, params_digest)


_METRICS: Sequence[Tuple[str, str]] = (
    ("avg_power_W", "Average power (W)"),
    ("worst_delay_s", "Delay (s)"),
    ("pdp_J", "Power-delay product (J)"),
)


def render_svg(report: BenchReport) -> str:
    """One grouped bar chart per metric: a group per frequency, a bar per variant."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    frequencies = report.frequencies_Hz
    variants = report.variants
    positions = np.arange(len(frequencies))
    width = 0.8 / max(len(variants), 1)

    matplotlib.rcParams["svg.hashsalt"] = "gvn"
    fig, axes = plt.subplots(1, len(_METRICS), figsize=(5 * len(_METRICS), 4))
    try:
        for ax, (attribute, label) in zip(axes, _METRICS):
            for index, variant in enumerate(variants):
                heights = [getattr(report.row(variant, frequency), attribute) for frequency in frequencies]
                offset = (index - (len(variants) - 1) / 2) * width
                ax.bar(positions + offset, heights, width, label=variant.display_name)
            ax.set_xticks(positions)
            ax.set_xticklabels([f"{frequency / 1e6:g} MHz" for frequency in frequencies])
            ax.set_ylabel(label)
            ax.ticklabel_format(axis="y", style="sci", scilimits=(0, 0))
        axes[0].legend()
        fig.tight_layout()
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
    return buffer.getvalue()


_RENDERERS = {
    ReportFormat.TABLE: format_table,
    ReportFormat.CSV: format_csv,
    ReportFormat.SVG: render_svg,
}


def emit(report: BenchReport, format: ReportFormat, destination: TDestination) -> None:
    """Render `report` and write it to a path or an open text stream.

    Raises:
        InvalidArgumentException: the report has no rows, or a row is missing for a grouped chart.
        UnwritableDestinationException: the destination cannot be written.
    """
    if not report.rows:
        raise InvalidArgumentException("cannot emit an empty report")
    text = _RENDERERS[format](report)
    if not isinstance(destination, (str, Path)):
        destination.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise convert_error(e) from e
    logs.debug("wrote %s report with %d row(s) to %s", format.value, len(report.rows), destination)
