from pathlib import Path
from typing import Callable, Dict

import pytest

from gvn.config import (
    DEFAULT_PARAMS_PATH,
    BenchConfiguration,
    BenchConfigurations,
    ProcessParams,
    ProcessParamsConfigurations,
    digest,
    dumps,
    load,
    loads,
)
from gvn.errors import InvalidArgumentException
from gvn.netlist import VthClass


def describe_process_params() -> None:
    def has_a_room_temperature_thermal_voltage(params: ProcessParams) -> None:
        assert params.thermal_voltage_V == pytest.approx(0.0258520, rel=1e-5)

    def maps_threshold_classes_to_voltages(params: ProcessParams) -> None:
        assert params.vth_of(VthClass.LOW) == params.vth_low_V
        assert params.vth_of(VthClass.HIGH) == params.vth_high_V

    def copies_with_a_new_value(params: ProcessParams) -> None:
        raised = params.with_vth_high_V(0.5)
        assert raised.vth_high_V == 0.5
        assert params.vth_high_V == 0.45

    @pytest.mark.parametrize(
        "overrides, message",
        [
            ({"vth_high_V": 0.2}, "vth_low_V < vth_high_V < vdd_V"),
            ({"vdd_V": 0.4}, "vth_low_V < vth_high_V < vdd_V"),
            ({"alpha": 2.5}, "alpha must be within"),
            ({"stack_factor": 1.5}, "stack_factor must be within"),
            ({"k_drive": 0.0}, "k_drive must be positive"),
        ],
    )
    def rejects_inconsistent_values(overrides: Dict[str, float], message: str) -> None:
        with pytest.raises(InvalidArgumentException, match=message):
            ProcessParams(**overrides)


def describe_param_file() -> None:
    def ships_the_default_calibration() -> None:
        text = DEFAULT_PARAMS_PATH.read_text(encoding="utf-8")
        assert text == dumps(ProcessParamsConfigurations.Default.v1())
        assert loads(text) == ProcessParamsConfigurations.Default.latest()

    def round_trips_exactly(params: ProcessParams) -> None:
        tweaked = params.with_k_drive(7.123456789e-5).with_wire_cap_F(1.1e-16)
        assert loads(dumps(tweaked)) == tweaked

    def defaults_missing_keys() -> None:
        params = loads("# partial\nvth_high_V = 0.5\n")
        assert params.vth_high_V == 0.5
        assert params.vdd_V == ProcessParams().vdd_V

    @pytest.mark.parametrize(
        "text, message",
        [
            ("vdd_V\n", "line 1: expected key=value"),
            ("\nflux=1\n", "line 2: unknown parameter 'flux'"),
            ("vdd_V=1\nvdd_V=1.1\n", "line 2: parameter 'vdd_V' given twice"),
            ("vdd_V=one\n", "vdd_V is not a real number"),
            ("vdd_V=nan\n", "vdd_V must be finite"),
        ],
    )
    def rejects_malformed_files(text: str, message: str) -> None:
        with pytest.raises(InvalidArgumentException, match=message):
            loads(text)

    def loads_from_a_path(tmp_path: Path, params: ProcessParams) -> None:
        path = tmp_path / "fast.params"
        path.write_text(dumps(params.with_vth_low_V(0.2)), encoding="utf-8")
        assert load(path).vth_low_V == 0.2
        assert ProcessParamsConfigurations.from_file(path) == load(path)

    def reports_a_missing_file(tmp_path: Path) -> None:
        with pytest.raises(InvalidArgumentException, match="cannot read parameter file"):
            load(tmp_path / "absent.params")

    def digests_content_not_formatting(params: ProcessParams) -> None:
        reformatted = loads("# same values, other layout\n" + dumps(params).replace("=", " = "))
        assert digest(reformatted) == digest(params)
        assert digest(params.with_vdd_V(1.1)) != digest(params)
        assert len(digest(params)) == 64


def describe_bench_configuration() -> None:
    def has_documented_presets() -> None:
        default = BenchConfigurations.Default.latest()
        assert default.get_seed() == 1
        assert default.get_cycles() == 1000
        assert default.get_guard_margin() == 0.1
        assert default.get_resolution_s() == 1e-12
        assert BenchConfigurations.Quick.latest().get_cycles() == 200

    def copies_on_write(bench: BenchConfiguration) -> None:
        reseeded = bench.with_seed(7).with_wake_cap_F(0.0)
        assert reseeded.get_seed() == 7
        assert reseeded.get_wake_cap_F() == 0.0
        assert bench.get_seed() == 1
        assert reseeded.get_cycles() == bench.get_cycles()

    @pytest.mark.parametrize(
        "change, message",
        [
            (lambda b: b.with_cycles(0), "cycles must be at least 1"),
            (lambda b: b.with_guard_margin(-0.1), "guard_margin must not be negative"),
            (lambda b: b.with_resolution_s(0.0), "resolution_s must be positive"),
            (lambda b: b.with_max_stack_depth(0), "max_stack_depth must be at least 1"),
        ],
    )
    def rejects_out_of_range_settings(
        bench: BenchConfiguration, change: Callable[[BenchConfiguration], BenchConfiguration], message: str
    ) -> None:
        with pytest.raises(InvalidArgumentException, match=message):
            change(bench)
