from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List

from gvn.config import ProcessParams
from gvn.errors import InvalidArgumentException
from gvn.typing import TFarads, TJoules, TNetId, TSeconds, TWatts

from .models import switching_energy


@dataclass(frozen=True)
class SwitchingEvent:
    time_s: TSeconds
    net: TNetId
    cl_F: TFarads


@dataclass(frozen=True)
class LeakageInterval:
    start_s: TSeconds
    end_s: TSeconds
    leakage_W: TWatts

    @property
    def energy_J(self) -> TJoules:
        return self.leakage_W * (self.end_s - self.start_s)


@dataclass
class PowerTrace:
    """Switching activity and piecewise-constant leakage over one run.

    Leakage intervals are appended in time order and never overlap.
    """

    switching_events: List[SwitchingEvent] = field(default_factory=list)
    leakage_intervals: List[LeakageInterval] = field(default_factory=list)
    duration_s: TSeconds = 0.0

    def record_switch(self, time_s: TSeconds, net: TNetId, cl_F: TFarads) -> None:
        self.switching_events.append(SwitchingEvent(time_s, net, cl_F))

    def record_leakage(self, start_s: TSeconds, end_s: TSeconds, leakage_W: TWatts) -> None:
        if end_s < start_s:
            raise InvalidArgumentException(f"leakage interval ends before it starts: [{start_s}, {end_s}]")
        if self.leakage_intervals and start_s < self.leakage_intervals[-1].end_s:
            raise InvalidArgumentException(
                f"leakage interval starting at {start_s} overlaps the previous one ending at "
                f"{self.leakage_intervals[-1].end_s}"
            )
        if end_s > start_s:
            self.leakage_intervals.append(LeakageInterval(start_s, end_s, leakage_W))
        self.duration_s = max(self.duration_s, end_s)

    def close(self, duration_s: TSeconds) -> None:
        if self.leakage_intervals and duration_s < self.leakage_intervals[-1].end_s:
            raise InvalidArgumentException(f"duration {duration_s} ends inside a recorded leakage interval")
        self.duration_s = duration_s

    def leakage_energy_J(self) -> TJoules:
        return math.fsum(interval.energy_J for interval in self.leakage_intervals)


def dynamic_energy(trace: PowerTrace, pp: ProcessParams) -> TJoules:
    return math.fsum(switching_energy(event.cl_F, pp.vdd_V) for event in trace.switching_events)


def average_power(trace: PowerTrace, pp: ProcessParams) -> TWatts:
    """Total energy over the trace divided by its duration."""
    if trace.duration_s <= 0:
        raise InvalidArgumentException("average power needs a trace with positive duration")
    return (dynamic_energy(trace, pp) + trace.leakage_energy_J()) / trace.duration_s
