import pytest

from gvn.config import ProcessParams
from gvn.errors import InvalidArgumentException
from gvn.power import LeakageInterval, PowerTrace, average_power, dynamic_energy


def describe_power_trace() -> None:
    def keeps_intervals_in_order() -> None:
        trace = PowerTrace()
        trace.record_leakage(0.0, 1e-9, 1e-6)
        trace.record_leakage(1e-9, 3e-9, 2e-6)
        assert trace.leakage_intervals == [LeakageInterval(0.0, 1e-9, 1e-6), LeakageInterval(1e-9, 3e-9, 2e-6)]
        assert trace.duration_s == 3e-9

    def skips_empty_intervals_but_extends_the_duration() -> None:
        trace = PowerTrace()
        trace.record_leakage(2e-9, 2e-9, 1e-6)
        assert trace.leakage_intervals == []
        assert trace.duration_s == 2e-9

    def rejects_a_reversed_interval() -> None:
        with pytest.raises(InvalidArgumentException, match="ends before it starts"):
            PowerTrace().record_leakage(2e-9, 1e-9, 1e-6)

    def rejects_overlapping_intervals() -> None:
        trace = PowerTrace()
        trace.record_leakage(0.0, 2e-9, 1e-6)
        with pytest.raises(InvalidArgumentException, match="overlaps the previous one"):
            trace.record_leakage(1e-9, 3e-9, 1e-6)

    def cannot_close_inside_an_interval() -> None:
        trace = PowerTrace()
        trace.record_leakage(0.0, 2e-9, 1e-6)
        with pytest.raises(InvalidArgumentException, match="ends inside a recorded leakage interval"):
            trace.close(1e-9)

    def integrates_leakage_energy() -> None:
        trace = PowerTrace()
        trace.record_leakage(0.0, 1e-9, 1e-6)
        trace.record_leakage(1e-9, 3e-9, 2e-6)
        assert trace.leakage_energy_J() == pytest.approx(5e-15, rel=1e-12)


def describe_dynamic_energy() -> None:
    def charges_rising_and_falling_edges_alike(params: ProcessParams) -> None:
        trace = PowerTrace()
        trace.record_switch(1e-9, "out", 2e-15)
        trace.record_switch(2e-9, "out", 2e-15)
        assert dynamic_energy(trace, params) == pytest.approx(2 * 0.5 * 2e-15 * params.vdd_V**2, rel=1e-12)

    def is_zero_without_switching(params: ProcessParams) -> None:
        assert dynamic_energy(PowerTrace(), params) == 0.0


def describe_average_power() -> None:
    def divides_total_energy_by_the_duration() -> None:
        pp = ProcessParams(vdd_V=1.0)
        trace = PowerTrace()
        trace.record_switch(5e-9, "out", 2e-15)
        trace.record_leakage(0.0, 1e-8, 1e-6)
        trace.close(1e-8)
        assert average_power(trace, pp) == pytest.approx((1e-15 + 1e-14) / 1e-8, rel=1e-12)

    def is_the_leakage_for_a_quiet_circuit(params: ProcessParams) -> None:
        trace = PowerTrace()
        trace.record_leakage(0.0, 4e-9, 3e-7)
        assert average_power(trace, params) == pytest.approx(3e-7, rel=1e-12)

    def needs_a_positive_duration(params: ProcessParams) -> None:
        with pytest.raises(InvalidArgumentException, match="positive duration"):
            average_power(PowerTrace(), params)
