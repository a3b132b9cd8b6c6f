import math
from typing import Tuple

import mpmath
import numpy as np
import pytest

from gvn.config import ProcessParams
from gvn.errors import InvalidArgumentException
from gvn.generators import BASE_GEOMETRY
from gvn.netlist import ChannelGeometry, DeviceType, VthClass
from gvn.power import gate_delay, leakage_prefactor, off_current, pdp, subthreshold_current, switching_energy
from tests.asserts import assert_relative_close
from tests.utils import pairs, transistor

ORACLE_DRAWS = 1000
ORACLE_REL_TOL = 1e-12


def _oracle_current(
    pp: ProcessParams, width: float, length: float, overdrive: float, vth: float, vds: float
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Extended-precision prefactor and subthreshold current."""
    with mpmath.workdps(40):
        vt = mpmath.mpf(pp.boltzmann_J_per_K) * pp.temperature_K / mpmath.mpf(pp.charge_C)
        prefactor = mpmath.mpf(pp.mu0_m2_per_Vs) * pp.cox_F_per_m2 * (mpmath.mpf(width) / length) * vt**2
        prefactor *= mpmath.e ** mpmath.mpf("1.8")
        current = prefactor * mpmath.exp(pp.gamma * (mpmath.mpf(overdrive) - vth) / (pp.n_prime * vt))
        current *= 1 - mpmath.exp(-mpmath.mpf(vds) / vt)
        return prefactor, current


def describe_leakage_prefactor() -> None:
    def matches_the_hand_evaluated_example() -> None:
        pp = ProcessParams(mu0_m2_per_Vs=0.02, cox_F_per_m2=0.012)
        assert leakage_prefactor(ChannelGeometry(2e-7, 1e-7), pp) == pytest.approx(1.9404e-6, rel=1e-3)

    def is_linear_in_width(params: ProcessParams) -> None:
        single = leakage_prefactor(BASE_GEOMETRY, params)
        double = leakage_prefactor(BASE_GEOMETRY.scaled(width_factor=2.0), params)
        assert_relative_close(double, 2 * single, 1e-15)

    def depends_only_on_the_aspect_ratio(params: ProcessParams) -> None:
        assert_relative_close(
            leakage_prefactor(ChannelGeometry(1e-7, 1e-7), params),
            leakage_prefactor(ChannelGeometry(3e-7, 3e-7), params),
            1e-15,
        )


def describe_subthreshold_current() -> None:
    def is_zero_without_drain_bias(params: ProcessParams) -> None:
        device = transistor("m", DeviceType.NMOS, "g", "s", "d")
        assert subthreshold_current(device, 0.0, 0.0, 0.0, params) == 0.0

    def is_zero_once_the_device_conducts(params: ProcessParams) -> None:
        device = transistor("m", DeviceType.NMOS, "g", "s", "d")
        assert subthreshold_current(device, params.vdd_V, 0.0, 0.5, params) == 0.0

    def mirrors_the_overdrive_for_pmos(params: ProcessParams) -> None:
        nmos = transistor("n", DeviceType.NMOS, "g", "s", "d")
        pmos = transistor("p", DeviceType.PMOS, "g", "s", "d")
        assert subthreshold_current(nmos, 0.1, 0.0, 1.0, params) == pytest.approx(
            subthreshold_current(pmos, 0.9, 1.0, 1.0, params), rel=1e-12
        )

    def rejects_negative_drain_bias(params: ProcessParams) -> None:
        device = transistor("m", DeviceType.NMOS, "g", "s", "d")
        with pytest.raises(InvalidArgumentException, match="vds_V must be non-negative"):
            subthreshold_current(device, 0.0, 0.0, -0.1, params)

    def drops_by_the_threshold_ratio() -> None:
        pp = ProcessParams(vth_low_V=0.3, vth_high_V=0.4, n_prime=1.5, gamma=1.0, temperature_K=300.0)
        low = transistor("m", DeviceType.NMOS, "g", "s", "d", VthClass.LOW)
        high = low.with_vth_class(VthClass.HIGH)
        ratio = off_current(high, pp) / off_current(low, pp)
        assert_relative_close(ratio, math.exp(-0.1 / (1.5 * pp.thermal_voltage_V)), 1e-9)
        assert ratio == pytest.approx(0.07615, rel=5e-3)

    def matches_the_hand_evaluated_off_current() -> None:
        pp = ProcessParams(vth_low_V=0.3, n_prime=1.5, gamma=1.0, vdd_V=1.0)
        device = transistor("m", DeviceType.NMOS, "g", "s", "d")
        ratio = off_current(device, pp) / leakage_prefactor(device.geometry, pp)
        assert ratio == pytest.approx(4.3706e-4, rel=2e-3)

    def is_monotonic_in_threshold_and_gate_drive(params: ProcessParams) -> None:
        rng = np.random.default_rng(7)
        device = transistor("m", DeviceType.NMOS, "g", "s", "d")
        for _ in range(10):
            vth_low = float(rng.uniform(0.1, 0.4))
            vgs = float(rng.uniform(-0.2, 0.05))
            currents = [
                subthreshold_current(device, vgs, 0.0, 1.0, params.with_vth_low_V(vth_low + step))
                for step in (0.0, 0.01, 0.02)
            ]
            assert all(a > b for a, b in pairs(currents))
            driven = [
                subthreshold_current(device, vgs + step, 0.0, 1.0, params.with_vth_low_V(vth_low))
                for step in (0.0, 0.01, 0.02)
            ]
            assert all(a < b for a, b in pairs(driven))

    def matches_an_extended_precision_oracle() -> None:
        rng = np.random.default_rng(2024)
        for _ in range(ORACLE_DRAWS):
            vth_low = float(rng.uniform(0.1, 0.5))
            pp = ProcessParams(
                temperature_K=float(rng.uniform(250.0, 400.0)),
                n_prime=float(rng.uniform(1.0, 2.0)),
                gamma=float(rng.uniform(0.5, 1.5)),
                mu0_m2_per_Vs=float(rng.uniform(0.01, 0.06)),
                cox_F_per_m2=float(rng.uniform(0.01, 0.05)),
                vth_low_V=vth_low,
                vth_high_V=vth_low + 0.1,
            )
            geometry = ChannelGeometry(float(rng.uniform(5e-8, 5e-7)), float(rng.uniform(4e-8, 2e-7)))
            device = transistor("m", DeviceType.NMOS, "g", "s", "d").with_geometry(geometry)
            overdrive = float(rng.uniform(-0.3, vth_low - 1e-3))
            vds = float(rng.uniform(1e-3, 1.0))

            prefactor, current = _oracle_current(pp, geometry.width_m, geometry.length_m, overdrive, vth_low, vds)
            assert_relative_close(leakage_prefactor(geometry, pp), float(prefactor), ORACLE_REL_TOL)
            assert_relative_close(
                subthreshold_current(device, overdrive, 0.0, vds, pp), float(current), ORACLE_REL_TOL
            )


def describe_gate_delay() -> None:
    def matches_the_hand_evaluated_example() -> None:
        assert gate_delay(1e-15, 1.0, 1e-3, 0.3, 1.0) == pytest.approx(1.42857e-12, rel=1e-5)

    def is_zero_without_load() -> None:
        assert gate_delay(0.0, 1.0, 1e-3, 0.3, 1.3) == 0.0

    def is_exactly_linear_in_load() -> None:
        assert gate_delay(2e-15, 1.0, 6e-5, 0.22, 1.3) == 2 * gate_delay(1e-15, 1.0, 6e-5, 0.22, 1.3)

    def grows_with_threshold() -> None:
        delays = [gate_delay(1e-15, 1.0, 6e-5, vth, 1.3) for vth in (0.2, 0.3, 0.4, 0.5)]
        assert all(a < b for a, b in pairs(delays))

    def rejects_a_threshold_at_the_supply() -> None:
        with pytest.raises(InvalidArgumentException, match="vth_V must be below vdd_V"):
            gate_delay(1e-15, 1.0, 1e-3, 1.0, 1.3)

    def matches_an_extended_precision_oracle() -> None:
        rng = np.random.default_rng(99)
        for _ in range(ORACLE_DRAWS):
            cl, vdd = float(rng.uniform(1e-17, 1e-14)), float(rng.uniform(0.6, 1.2))
            k, vth, alpha = float(rng.uniform(1e-5, 1e-3)), float(rng.uniform(0.1, 0.5)), float(rng.uniform(1, 2))
            with mpmath.workdps(40):
                expected = mpmath.mpf(cl) * vdd / (mpmath.mpf(k) * (mpmath.mpf(vdd) - vth) ** alpha)
            assert_relative_close(gate_delay(cl, vdd, k, vth, alpha), float(expected), ORACLE_REL_TOL)


def describe_energy() -> None:
    def charges_half_cv_squared() -> None:
        assert switching_energy(2e-15, 1.0) == pytest.approx(1e-15, rel=1e-15)

    @pytest.mark.parametrize(
        "power, delay, expected",
        [
            (3.722e-6, 11.440e-11, 42.58e-17),
            (1.384e-6, 16.181e-11, 22.39e-17),
            (1.0e-6, 0.0, 0.0),
        ],
    )
    def multiplies_power_and_delay(power: float, delay: float, expected: float) -> None:
        assert pdp(power, delay) == pytest.approx(expected, rel=1e-3)

    def rejects_negative_power() -> None:
        with pytest.raises(InvalidArgumentException, match="avg_power_W must not be negative"):
            pdp(-1.0, 1e-9)
