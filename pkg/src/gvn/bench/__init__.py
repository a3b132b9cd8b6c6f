"""Functional verification against decimal addition, frequency sweeps and report emission."""

from .oracle import bcd_add_oracle
from .stimulus import CycleDriver, drive_settled
from .report import (
    CSV_HEADER,
    BenchReport,
    BenchRow,
    ReportFormat,
    emit,
    format_csv,
    format_table,
    read_csv,
    render_svg,
)
from .verify import WARMUP_VECTOR, gated_clock_config, verify_variant
from .sweep import measure_worst_delay, random_vectors, sweep

__all__ = [
    "bcd_add_oracle",
    "CycleDriver",
    "drive_settled",
    "CSV_HEADER",
    "BenchReport",
    "BenchRow",
    "ReportFormat",
    "emit",
    "format_csv",
    "format_table",
    "read_csv",
    "render_svg",
    "WARMUP_VECTOR",
    "gated_clock_config",
    "verify_variant",
    "measure_worst_delay",
    "random_vectors",
    "sweep",
]
