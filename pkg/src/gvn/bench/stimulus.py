"""Cycle-by-cycle drive of an adder netlist, with or without the gating clocks."""
from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from gvn import logs
from gvn.errors import InvalidArgumentException
from gvn.gating import ClockConfig, clock_waveforms, output_sample_times
from gvn.generators import CLUSTERS, vector_assignment
from gvn.power import LeakageEstimator
from gvn.sim import LogicLevel, SimState
from gvn.typing import TBcdVector, TNetId, TSeconds, TWatts

# samples sort ahead of input changes at the same instant
_SAMPLE = 0
_DRIVE = 1

_Outputs = Dict[TNetId, LogicLevel]


def _timeline(
    vectors: Sequence[TBcdVector], period_s: TSeconds, clocks: Optional[ClockConfig]
) -> List[Tuple[TSeconds, int, Dict[TNetId, LogicLevel]]]:
    n_cycles = len(vectors)
    drives: Dict[TSeconds, Dict[TNetId, LogicLevel]] = {}
    for cycle, vector in enumerate(vectors):
        drives.setdefault(cycle * period_s, {}).update(vector_assignment(vector))

    if clocks is None:
        samples = [(cycle + 1) * period_s for cycle in range(n_cycles)]
    else:
        clk1, clk2 = clock_waveforms(clocks, n_cycles, clk1=CLUSTERS["1"].clock, clk2=CLUSTERS["2"].clock)
        for event in clk1 + clk2:
            drives.setdefault(event.time_s, {})[event.net] = event.new_value
        samples = output_sample_times(clocks, n_cycles)

    timeline = [(time_s, _DRIVE, assignments) for time_s, assignments in drives.items()]
    timeline.extend((time_s, _SAMPLE, {}) for time_s in samples)
    return sorted(timeline, key=lambda item: (item[0], item[1]))


class CycleDriver:
    """Applies one (a, b, cin) vector per clock period and samples the outputs once per period.

    Without a `ClockConfig` the outputs are read at the end of each period.
    With one, CLK1 and CLK2 follow `clock_waveforms` and outputs are read at
    `output_sample_times`. When a `LeakageEstimator` is given, every stretch
    between two timeline instants is charged the leakage of the state the
    circuit settles into, and the run's trace is closed at the last period.
    """

    def __init__(
        self,
        state: SimState,
        period_s: TSeconds,
        clocks: Optional[ClockConfig] = None,
        leakage: Optional[LeakageEstimator] = None,
    ):
        self._state = state
        self._period_s = period_s
        self._clocks = clocks
        self._leakage = leakage
        self._leakage_W: TWatts = 0.0

    def run(self, vectors: Sequence[TBcdVector]) -> List[_Outputs]:
        """Drive `vectors` from time 0; returns the sampled outputs of each cycle."""
        if self._state.now_s > 0.0:
            raise InvalidArgumentException("a cycle driver needs a fresh simulation state")
        samples: List[_Outputs] = []
        for time_s, kind, assignments in _timeline(vectors, self._period_s, self._clocks):
            self._advance(time_s)
            if kind == _SAMPLE:
                samples.append(self._state.read_outputs())
            else:
                self._state.apply_inputs(assignments, time_s)
        self._advance(len(vectors) * self._period_s)
        if self._leakage is not None:
            self._state.trace.close(len(vectors) * self._period_s)
        logs.logger.log(logs.TRACE, "drove %d cycle(s) of %.5e s", len(vectors), self._period_s)
        return samples

    def _advance(self, until_s: TSeconds) -> None:
        start_s = self._state.now_s
        self._state.settle(until_s)
        if self._leakage is None:
            return
        if self._state.pending_count == 0:
            self._leakage_W = self._leakage(self._state)
        self._state.trace.record_leakage(start_s, until_s, self._leakage_W)


def drive_settled(state: SimState, assignments: Mapping[TNetId, LogicLevel], gap_s: TSeconds) -> TSeconds:
    """Apply `assignments` `gap_s` after the current time and settle; returns when they were applied."""
    at_s = state.now_s + gap_s
    state.apply_inputs(assignments, at_s)
    state.settle()
    return at_s
