import pytest

from gvn.errors import InvalidArgumentException, TimingInfeasibleException
from gvn.gating import ClockConfig, clock_waveforms, derive_clock_config, output_sample_times
from tests.utils import L0, L1


def describe_derive_clock_config() -> None:
    def delays_clk2_by_the_first_stage() -> None:
        cfg = derive_clock_config(200e6, 1e-10, 8e-11)
        assert cfg.clk2_offset_s == pytest.approx(1e-10, rel=1e-9)
        assert cfg.sample_offset_s == pytest.approx(8e-11, rel=1e-9)
        assert cfg.duty == pytest.approx(1.1e-10 / 5e-9, rel=1e-9)
        assert cfg.sleep_fraction == pytest.approx(1 - cfg.duty)

    def rounds_offsets_up_to_the_resolution() -> None:
        cfg = derive_clock_config(100e6, 1.2345e-10, 5.01e-11, resolution_s=1e-12)
        assert cfg.clk2_offset_s == pytest.approx(1.24e-10, rel=1e-9)
        assert cfg.sample_offset_s == pytest.approx(5.1e-11, rel=1e-9)

    def sleeps_longer_at_lower_frequencies() -> None:
        duties = [derive_clock_config(freq, 1e-10, 1e-10).duty for freq in (50e6, 100e6, 200e6)]
        assert duties[0] < duties[1] < duties[2]

    def scales_the_awake_window_with_the_guard_margin() -> None:
        narrow = derive_clock_config(100e6, 1e-10, 1e-10, guard_margin=0.0)
        wide = derive_clock_config(100e6, 1e-10, 1e-10, guard_margin=0.5)
        assert wide.high_s == pytest.approx(1.5 * narrow.high_s, rel=1e-9)

    def stays_awake_all_cycle_when_the_window_fills_the_period() -> None:
        cfg = derive_clock_config(1e9, 9e-10, 5e-11, guard_margin=0.5)
        assert cfg.duty == 1.0

    def rejects_a_period_shorter_than_both_stages() -> None:
        with pytest.raises(TimingInfeasibleException, match="shorter than stage delays"):
            derive_clock_config(1e9, 6e-10, 6e-10)

    def rejects_a_non_positive_frequency() -> None:
        with pytest.raises(InvalidArgumentException, match="freq_Hz"):
            derive_clock_config(0.0, 1e-10, 1e-10)


def describe_clock_config() -> None:
    def needs_a_duty_within_the_period() -> None:
        with pytest.raises(InvalidArgumentException, match="duty must be within"):
            ClockConfig(100e6, 0.0, 1e-9, 1e-9)

    def needs_sampling_inside_the_period() -> None:
        with pytest.raises(InvalidArgumentException, match="falls outside"):
            ClockConfig(1e9, 0.5, 6e-10, 5e-10)


def describe_clock_waveforms() -> None:
    def toggle_both_clocks_every_period() -> None:
        cfg = ClockConfig(100e6, 0.25, 1e-9, 2e-9)
        clk1, clk2 = clock_waveforms(cfg, 2)
        assert [e.time_s for e in clk1] == pytest.approx([0.0, 2.5e-9, 1e-8, 1.25e-8])
        assert [e.new_value for e in clk1] == [L1, L0, L1, L0]
        assert [e.time_s for e in clk2] == pytest.approx([1e-9, 3.5e-9, 1.1e-8, 1.35e-8])
        assert {e.net for e in clk1} == {"clk1"} and {e.net for e in clk2} == {"clk2"}

    def hold_the_clocks_high_at_full_duty() -> None:
        cfg = ClockConfig(1e9, 1.0, 1e-10, 1e-10)
        clk1, _ = clock_waveforms(cfg, 3, clk1="sleep")
        assert [(e.net, e.new_value) for e in clk1] == [("sleep", L1), ("sleep", L0)]
        assert [e.time_s for e in clk1] == pytest.approx([0.0, 3e-9])

    def sample_outputs_after_the_second_stage() -> None:
        cfg = ClockConfig(100e6, 0.25, 1e-9, 2e-9)
        assert output_sample_times(cfg, 3) == pytest.approx([3e-9, 1.3e-8, 2.3e-8])

    def need_at_least_one_cycle() -> None:
        with pytest.raises(InvalidArgumentException, match="n_cycles must be at least 1"):
            clock_waveforms(ClockConfig(1e9, 0.5, 1e-10, 1e-10), 0)
