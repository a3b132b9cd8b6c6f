from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

from gvn import logs
from gvn.errors import InvalidArgumentException, TimingInfeasibleException
from gvn.internal._utilities import (
    _validate_at_least_one,
    _validate_non_negative,
    _validate_positive,
)
from gvn.sim import Event, LogicLevel
from gvn.typing import THertz, TSeconds

DEFAULT_GUARD_MARGIN = 0.1
DEFAULT_RESOLUTION_S = 1e-12


@dataclass(frozen=True)
class ClockConfig:
    """CLK1 and its delayed copy CLK2, plus where in the cycle outputs are read."""

    frequency_Hz: THertz
    duty: float
    """Fraction of the period each clock is high."""
    clk2_offset_s: TSeconds
    """CLK2 rises this long after CLK1."""
    sample_offset_s: TSeconds
    """Outputs are sampled this long after CLK2 rises."""

    def __post_init__(self) -> None:
        _validate_positive(self.frequency_Hz, "frequency_Hz")
        if not 0.0 < self.duty <= 1.0:
            raise InvalidArgumentException(f"duty must be within (0, 1], got {self.duty}")
        _validate_non_negative(self.clk2_offset_s, "clk2_offset_s")
        _validate_non_negative(self.sample_offset_s, "sample_offset_s")
        if self.clk2_offset_s + self.sample_offset_s >= self.period_s:
            raise InvalidArgumentException(
                f"sampling at {self.clk2_offset_s + self.sample_offset_s:.5e} s falls outside "
                f"the {self.period_s:.5e} s period"
            )

    @property
    def period_s(self) -> TSeconds:
        return 1.0 / self.frequency_Hz

    @property
    def high_s(self) -> TSeconds:
        return self.duty * self.period_s

    @property
    def sleep_fraction(self) -> float:
        return 1.0 - self.duty


def _round_up(value: TSeconds, resolution_s: TSeconds) -> TSeconds:
    steps = math.ceil(value / resolution_s - 1e-9)
    return max(steps, 0) * resolution_s


def derive_clock_config(
    freq_Hz: THertz,
    stage1_worst_delay_s: TSeconds,
    stage2_worst_delay_s: TSeconds,
    guard_margin: float = DEFAULT_GUARD_MARGIN,
    resolution_s: TSeconds = DEFAULT_RESOLUTION_S,
) -> ClockConfig:
    """Clocking for the two-cluster gated adder at `freq_Hz`.

    CLK2 rises once stage 1 has settled and outputs are read once stage 2
    has. Each clock stays high for the slower cluster's delay plus
    `guard_margin` of it, so the sleep fraction grows as the frequency drops.

    Raises:
        TimingInfeasibleException: one period cannot hold both stage delays.
    """
    _validate_positive(freq_Hz, "freq_Hz")
    _validate_non_negative(stage1_worst_delay_s, "stage1_worst_delay_s")
    _validate_non_negative(stage2_worst_delay_s, "stage2_worst_delay_s")
    _validate_non_negative(guard_margin, "guard_margin")
    _validate_positive(resolution_s, "resolution_s")

    period = 1.0 / freq_Hz
    clk2_offset = _round_up(stage1_worst_delay_s, resolution_s)
    sample_offset = _round_up(stage2_worst_delay_s, resolution_s)
    if period < stage1_worst_delay_s + stage2_worst_delay_s or clk2_offset + sample_offset >= period:
        raise TimingInfeasibleException(
            f"period {period:.5e} s at {freq_Hz:.5e} Hz is shorter than stage delays "
            f"{stage1_worst_delay_s:.5e} s + {stage2_worst_delay_s:.5e} s"
        )

    awake = max((1.0 + guard_margin) * max(stage1_worst_delay_s, stage2_worst_delay_s), clk2_offset, sample_offset)
    duty = min(1.0, awake / period)
    config = ClockConfig(freq_Hz, duty, clk2_offset, sample_offset)
    logs.debug(
        "clocking at %.5e Hz: duty %.4f, clk2 +%.5e s, sample +%.5e s", freq_Hz, duty, clk2_offset, sample_offset
    )
    return config


def _waveform(cfg: ClockConfig, net: str, n_cycles: int, start_s: TSeconds) -> List[Event]:
    period = cfg.period_s
    if cfg.duty >= 1.0:
        return [Event(start_s, net, LogicLevel.L1), Event(start_s + n_cycles * period, net, LogicLevel.L0)]
    events: List[Event] = []
    for cycle in range(n_cycles):
        rise = start_s + cycle * period
        events.append(Event(rise, net, LogicLevel.L1))
        events.append(Event(rise + cfg.high_s, net, LogicLevel.L0))
    return events


def clock_waveforms(
    cfg: ClockConfig, n_cycles: int, start_s: TSeconds = 0.0, clk1: str = "clk1", clk2: str = "clk2"
) -> Tuple[List[Event], List[Event]]:
    """Time-sorted level changes of CLK1 and CLK2 over `n_cycles` periods."""
    _validate_at_least_one(n_cycles, "n_cycles")
    return (
        _waveform(cfg, clk1, n_cycles, start_s),
        _waveform(cfg, clk2, n_cycles, start_s + cfg.clk2_offset_s),
    )


def output_sample_times(cfg: ClockConfig, n_cycles: int, start_s: TSeconds = 0.0) -> List[TSeconds]:
    _validate_at_least_one(n_cycles, "n_cycles")
    offset = cfg.clk2_offset_s + cfg.sample_offset_s
    return [start_s + cycle * cfg.period_s + offset for cycle in range(n_cycles)]
