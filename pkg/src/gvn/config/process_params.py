from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Dict

from gvn.errors import InvalidArgumentException
from gvn.internal._utilities import _validate_positive
from gvn.netlist import VthClass


@dataclass(frozen=True)
class ProcessParams:
    """Physical constants and calibration knobs for the leakage and delay models.

    Field names double as parameter-file keys. All values are SI.
    """

    temperature_K: float = 300.0
    boltzmann_J_per_K: float = 1.380649e-23
    charge_C: float = 1.602176634e-19
    n_prime: float = 1.5
    """Subthreshold swing coefficient."""
    mu0_m2_per_Vs: float = 0.045
    cox_F_per_m2: float = 0.036
    gamma: float = 1.0
    """Scales the gate overdrive inside the subthreshold exponent."""
    vth_low_V: float = 0.22
    vth_high_V: float = 0.45
    vdd_V: float = 1.0
    alpha: float = 1.3
    """Velocity-saturation exponent of the delay model."""
    k_drive: float = 6e-05
    """Drive factor of a base-width device, in A/V^alpha."""
    stack_factor: float = 0.2
    """Leakage attenuation per extra OFF device in series."""
    wire_cap_F: float = 1e-16
    base_width_m: float = 9e-08
    """Reference width: a device of this width drives with exactly `k_drive`."""
    base_length_m: float = 4.5e-08

    def __post_init__(self) -> None:
        for f in fields(self):
            _validate_positive(getattr(self, f.name), f.name)
        if not self.vth_low_V < self.vth_high_V < self.vdd_V:
            raise InvalidArgumentException(
                f"thresholds must satisfy vth_low_V < vth_high_V < vdd_V, got "
                f"{self.vth_low_V} / {self.vth_high_V} / {self.vdd_V}"
            )
        if not 1.0 <= self.alpha <= 2.0:
            raise InvalidArgumentException(f"alpha must be within [1, 2], got {self.alpha}")
        if self.stack_factor > 1.0:
            raise InvalidArgumentException(f"stack_factor must be within (0, 1], got {self.stack_factor}")

    @property
    def thermal_voltage_V(self) -> float:
        """kT/q."""
        return self.boltzmann_J_per_K * self.temperature_K / self.charge_C

    def vth_of(self, vth_class: VthClass) -> float:
        return self.vth_low_V if vth_class is VthClass.LOW else self.vth_high_V

    def as_dict(self) -> Dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def with_vth_low_V(self, vth_low_V: float) -> ProcessParams:
        return replace(self, vth_low_V=vth_low_V)

    def with_vth_high_V(self, vth_high_V: float) -> ProcessParams:
        return replace(self, vth_high_V=vth_high_V)

    def with_vdd_V(self, vdd_V: float) -> ProcessParams:
        return replace(self, vdd_V=vdd_V)

    def with_k_drive(self, k_drive: float) -> ProcessParams:
        return replace(self, k_drive=k_drive)

    def with_stack_factor(self, stack_factor: float) -> ProcessParams:
        return replace(self, stack_factor=stack_factor)

    def with_wire_cap_F(self, wire_cap_F: float) -> ProcessParams:
        return replace(self, wire_cap_F=wire_cap_F)

    def with_temperature_K(self, temperature_K: float) -> ProcessParams:
        return replace(self, temperature_K=temperature_K)
