from typing import Dict

import pytest

from gvn.bench import BenchReport, format_csv, measure_worst_delay, random_vectors, sweep
from gvn.config import BenchConfiguration, ProcessParams, digest
from gvn.errors import InvalidArgumentException, TimingInfeasibleException
from gvn.generators import Variant
from gvn.netlist import Netlist
from tests.conftest import BENCH_FREQUENCIES_HZ


def describe_random_vectors() -> None:
    def repeat_for_a_seed() -> None:
        assert random_vectors(7, 50) == random_vectors(7, 50)
        assert random_vectors(7, 50) != random_vectors(8, 50)

    def stay_within_legal_digits() -> None:
        vectors = random_vectors(1, 500)
        assert len(vectors) == 500
        assert all(0 <= a <= 9 and 0 <= b <= 9 and cin in (0, 1) for a, b, cin in vectors)
        assert {cin for _, _, cin in vectors} == {0, 1}


def describe_measure_worst_delay() -> None:
    def is_slower_with_high_threshold_side_gates(
        adders: Dict[Variant, Netlist], params: ProcessParams, bench: BenchConfiguration
    ) -> None:
        conventional = measure_worst_delay(adders[Variant.CONVENTIONAL], params, bench)
        dvt = measure_worst_delay(adders[Variant.DVT], params, bench)
        assert 0.0 < conventional < dvt

    def is_in_the_sub_nanosecond_range(conventional: Netlist, params: ProcessParams) -> None:
        assert 1e-12 < measure_worst_delay(conventional, params) < 1e-9


def describe_sweep() -> None:
    def fills_one_row_per_variant_and_frequency(report: BenchReport, params: ProcessParams) -> None:
        assert len(report.rows) == 9
        assert report.frequencies_Hz == BENCH_FREQUENCIES_HZ
        assert report.variants == list(Variant)
        assert report.params_digest == digest(params)

    def keeps_every_product_consistent(report: BenchReport) -> None:
        for row in report.rows:
            assert row.pdp_J == row.avg_power_W * row.worst_delay_s
            assert row.avg_power_W > 0.0

    def measures_delay_once_per_variant(report: BenchReport) -> None:
        for variant in Variant:
            assert len({report.row(variant, freq).worst_delay_s for freq in BENCH_FREQUENCIES_HZ}) == 1

    def spends_more_power_at_higher_frequencies(report: BenchReport) -> None:
        for variant in Variant:
            powers = [report.row(variant, freq).avg_power_W for freq in BENCH_FREQUENCIES_HZ]
            assert powers[0] < powers[1] < powers[2]

    def saves_leakage_with_high_thresholds_and_gating(report: BenchReport) -> None:
        slowest = BENCH_FREQUENCIES_HZ[0]
        conventional = report.row(Variant.CONVENTIONAL, slowest).avg_power_W
        assert report.row(Variant.DVT, slowest).avg_power_W < conventional
        assert report.row(Variant.GATED, slowest).avg_power_W < conventional

    def is_reproducible_to_the_byte(params: ProcessParams, bench: BenchConfiguration) -> None:
        quick = bench.with_cycles(20)
        variants = [Variant.CONVENTIONAL, Variant.GATED]
        first, second = (format_csv(sweep(variants, [100e6], params, quick)).encode("utf-8") for _ in range(2))
        assert first == second

    def rejects_an_empty_frequency_list(params: ProcessParams) -> None:
        with pytest.raises(InvalidArgumentException, match="freqs_Hz must not be empty"):
            sweep([Variant.CONVENTIONAL], [], params)

    def rejects_a_non_positive_frequency(params: ProcessParams) -> None:
        with pytest.raises(InvalidArgumentException, match="freqs_Hz must be positive"):
            sweep([Variant.CONVENTIONAL], [100e6, 0.0], params)

    def fails_when_the_gated_clocks_cannot_fit(params: ProcessParams, bench: BenchConfiguration) -> None:
        with pytest.raises(TimingInfeasibleException):
            sweep([Variant.GATED], [20e9], params, bench.with_cycles(10))


def describe_default_calibration() -> None:
    fastest = BENCH_FREQUENCIES_HZ[-1]

    def orders_power_delay_and_pdp_at_200_mhz(report: BenchReport) -> None:
        conventional, dvt, gated = (report.row(variant, fastest) for variant in Variant)
        assert gated.avg_power_W < dvt.avg_power_W < conventional.avg_power_W
        assert conventional.worst_delay_s < gated.worst_delay_s < dvt.worst_delay_s
        assert gated.pdp_J < dvt.pdp_J < conventional.pdp_J

    def cuts_power_and_pdp_against_the_conventional_adder(report: BenchReport) -> None:
        conventional = report.row(Variant.CONVENTIONAL, fastest)
        gated = report.row(Variant.GATED, fastest)
        power_reduction = 100.0 * (1.0 - gated.avg_power_W / conventional.avg_power_W)
        pdp_reduction = 100.0 * (1.0 - gated.pdp_J / conventional.pdp_J)
        assert power_reduction == pytest.approx(62.8, abs=15.0)
        assert pdp_reduction == pytest.approx(47.41, abs=15.0)

    @pytest.mark.parametrize("freq_Hz", BENCH_FREQUENCIES_HZ)
    def gives_the_gated_adder_the_lowest_pdp(report: BenchReport, freq_Hz: float) -> None:
        gated = report.row(Variant.GATED, freq_Hz).pdp_J
        assert all(gated < report.row(variant, freq_Hz).pdp_J for variant in (Variant.CONVENTIONAL, Variant.DVT))
