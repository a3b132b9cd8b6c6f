"""Closed-form device models.

Subthreshold leakage::

    A     = mu0 * Cox * (W/L) * (kT/q)^2 * e^1.8
    I_sub = A * exp(gamma * (Vgs - Vth) / (n' * kT/q)) * (1 - exp(-Vds / (kT/q)))

Alpha-power propagation delay::

    T = C_L * Vdd / (K * (Vdd - Vth)^alpha)
"""
from __future__ import annotations

import math

from gvn.config import ProcessParams
from gvn.errors import InvalidArgumentException
from gvn.internal._utilities import _validate_non_negative
from gvn.netlist import ChannelGeometry, DeviceType, Transistor
from gvn.typing import TAmperes, TFarads, TJoules, TSeconds, TVolts, TWatts

_PREFACTOR_EXPONENT = 1.8


def leakage_prefactor(geometry: ChannelGeometry, pp: ProcessParams) -> TAmperes:
    vt = pp.thermal_voltage_V
    return pp.mu0_m2_per_Vs * pp.cox_F_per_m2 * geometry.aspect_ratio * vt * vt * math.exp(_PREFACTOR_EXPONENT)


def subthreshold_current(device: Transistor, vg_V: TVolts, vs_V: TVolts, vds_V: TVolts, pp: ProcessParams) -> TAmperes:
    """Subthreshold drain current of `device`.

    Voltages are node potentials. For a PMOS the gate overdrive is mirrored
    (Vs - Vg); `vds_V` is always the magnitude across the channel.

    Returns:
        float: the leakage in amperes, or 0 when the device conducts (overdrive at or above threshold).
    """
    if vds_V < 0:
        raise InvalidArgumentException(f"vds_V must be non-negative after polarity normalization, got {vds_V}")
    overdrive = vg_V - vs_V if device.device_type is DeviceType.NMOS else vs_V - vg_V
    vth = pp.vth_of(device.vth_class)
    if overdrive >= vth:
        return 0.0
    vt = pp.thermal_voltage_V
    gate_term = math.exp(pp.gamma * (overdrive - vth) / (pp.n_prime * vt))
    drain_term = -math.expm1(-vds_V / vt)
    return leakage_prefactor(device.geometry, pp) * gate_term * drain_term


def off_current(device: Transistor, pp: ProcessParams) -> TAmperes:
    """Leakage of an OFF device (Vgs = 0) with the full supply across it."""
    return subthreshold_current(device, 0.0, 0.0, pp.vdd_V, pp)


def gate_delay(cl_F: TFarads, vdd_V: TVolts, k_drive: float, vth_V: TVolts, alpha: float) -> TSeconds:
    _validate_non_negative(cl_F, "cl_F")
    if vth_V >= vdd_V:
        raise InvalidArgumentException(f"vth_V must be below vdd_V, got vth_V={vth_V} vdd_V={vdd_V}")
    return cl_F * vdd_V / (k_drive * (vdd_V - vth_V) ** alpha)


def switching_energy(cl_F: TFarads, vdd_V: TVolts) -> TJoules:
    """Energy of one transition: half of C V^2, charged on rising and falling edges alike."""
    return 0.5 * cl_F * vdd_V * vdd_V


def pdp(avg_power_W: TWatts, delay_s: TSeconds) -> TJoules:
    _validate_non_negative(avg_power_W, "avg_power_W")
    _validate_non_negative(delay_s, "delay_s")
    return avg_power_W * delay_s
