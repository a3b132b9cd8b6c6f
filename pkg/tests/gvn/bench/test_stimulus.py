import pytest

from gvn.bench import CycleDriver, drive_settled
from gvn.config import BenchConfiguration, ProcessParams
from gvn.errors import InvalidArgumentException
from gvn.gating import derive_clock_config, measure_cluster_delays
from gvn.generators import read_result, vector_assignment
from gvn.netlist import Netlist
from gvn.power import LeakageEstimator
from gvn.sim import SimState

VECTORS = [(9, 8, 0), (1, 1, 0), (5, 4, 1)]
EXPECTED = [(1, 7), (0, 2), (1, 0)]


def describe_cycle_driver() -> None:
    def samples_each_cycle_at_the_end_of_its_period(conventional: Netlist, params: ProcessParams) -> None:
        samples = CycleDriver(SimState(conventional, params), 1e-8).run(VECTORS)
        assert [read_result(outputs) for outputs in samples] == EXPECTED

    def samples_the_gated_adder_after_both_clusters_wake(
        gated: Netlist, params: ProcessParams, bench: BenchConfiguration
    ) -> None:
        delays = measure_cluster_delays(gated, params, bench)
        clocks = derive_clock_config(100e6, delays.stage1_s, delays.stage2_s)
        samples = CycleDriver(SimState(gated, params), clocks.period_s, clocks).run(VECTORS)
        assert [read_result(outputs) for outputs in samples] == EXPECTED

    def charges_leakage_over_the_whole_run(conventional: Netlist, params: ProcessParams) -> None:
        state = SimState(conventional, params, record_events=False)
        CycleDriver(state, 1e-8, leakage=LeakageEstimator(conventional, params)).run(VECTORS)
        intervals = state.trace.leakage_intervals
        assert state.trace.duration_s == pytest.approx(3e-8, rel=1e-12)
        assert intervals[0].start_s == 0.0
        assert intervals[-1].end_s == pytest.approx(3e-8, rel=1e-12)
        assert all(a.end_s == b.start_s for a, b in zip(intervals, intervals[1:]))
        assert all(interval.leakage_W > 0.0 for interval in intervals)

    def needs_a_fresh_state(conventional: Netlist, params: ProcessParams) -> None:
        state = SimState(conventional, params)
        state.settle(until_s=1e-9)
        with pytest.raises(InvalidArgumentException, match="needs a fresh simulation state"):
            CycleDriver(state, 1e-8).run(VECTORS)


def describe_drive_settled() -> None:
    def applies_after_the_gap_and_settles(conventional: Netlist, params: ProcessParams) -> None:
        state = SimState(conventional, params)
        assert drive_settled(state, vector_assignment((9, 8, 0)), 0.0) == 0.0
        settled_at = state.now_s
        applied_at = drive_settled(state, vector_assignment((2, 3, 0)), 1e-8)
        assert applied_at == settled_at + 1e-8
        assert state.measure_delay(applied_at) > 0.0
        assert state.pending_count == 0
        assert read_result(state.read_outputs()) == (0, 5)
