from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Tuple

from gvn.errors import InvalidArgumentException
from gvn.internal._utilities import _validate_at_least_one
from gvn.netlist import ChannelGeometry, Netlist, VthClass
from gvn.typing import TGateInstance

from .critical_path import critical_path_gates

BASE_GEOMETRY = ChannelGeometry(width_m=9e-08, length_m=4.5e-08)
DEFAULT_LOAD_CAP_F = 1e-16


class VthPolicy(enum.Enum):
    ALL_LOW = "all-low"
    ALL_HIGH = "all-high"
    CRITICAL_PATH_LOW = "critical-path-low"


@dataclass(frozen=True)
class VthAssignment:
    """Which gates get the low threshold. Overrides are keyed by full gate-instance name."""

    policy: VthPolicy = VthPolicy.ALL_LOW
    overrides: Mapping[TGateInstance, VthClass] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "overrides", MappingProxyType(dict(self.overrides)))

    @staticmethod
    def all_low() -> VthAssignment:
        return VthAssignment(VthPolicy.ALL_LOW)

    @staticmethod
    def all_high() -> VthAssignment:
        return VthAssignment(VthPolicy.ALL_HIGH)

    @staticmethod
    def critical_path_low() -> VthAssignment:
        return VthAssignment(VthPolicy.CRITICAL_PATH_LOW)

    def with_override(self, gate_instance: TGateInstance, vth_class: VthClass) -> VthAssignment:
        overrides = dict(self.overrides)
        overrides[gate_instance] = vth_class
        return VthAssignment(self.policy, overrides)

    def apply(self, netlist: Netlist) -> Netlist:
        """Set every non-sleep device's class from the policy, then the overrides.

        Raises:
            InvalidArgumentException: an override names a gate instance the netlist does not have.
        """
        gates = set(netlist.gate_instances())
        unknown = sorted(set(self.overrides) - gates)
        if unknown:
            raise InvalidArgumentException(f"Vth overrides reference unknown gate instance(s): {', '.join(unknown)}")

        if self.policy is VthPolicy.CRITICAL_PATH_LOW:
            low = set(critical_path_gates(netlist))
        elif self.policy is VthPolicy.ALL_LOW:
            low = gates
        else:
            low = set()

        def class_of(gate: TGateInstance) -> VthClass:
            if gate in self.overrides:
                return self.overrides[gate]
            return VthClass.LOW if gate in low else VthClass.HIGH

        return netlist.with_devices(
            device if device.is_sleep else device.with_vth_class(class_of(device.gate_instance))
            for device in netlist.devices
        )


@dataclass(frozen=True)
class SizingPolicy:
    """Multiple-channel-length sizing of sleep devices and transmission gates.

    Multipliers are powers of two by default so sized dimensions survive a text round trip exactly.
    """

    sleep_length_multiplier: float = 2.0
    sleep_width_multiplier: float = 4.0
    tg_width_multiplier: float = 2.0
    base_geometry: ChannelGeometry = BASE_GEOMETRY
    widened_pass_gates: Tuple[str, ...] = ("tgs",)
    """Leaf names of the pass-gate instances that get `tg_width_multiplier`."""

    def __post_init__(self) -> None:
        _validate_at_least_one(self.sleep_length_multiplier, "sleep_length_multiplier")
        _validate_at_least_one(self.sleep_width_multiplier, "sleep_width_multiplier")
        _validate_at_least_one(self.tg_width_multiplier, "tg_width_multiplier")

    @staticmethod
    def identity() -> SizingPolicy:
        return SizingPolicy(1.0, 1.0, 1.0)

    def with_widened_pass_gates(self, leaves: Iterable[str]) -> SizingPolicy:
        return SizingPolicy(
            self.sleep_length_multiplier,
            self.sleep_width_multiplier,
            self.tg_width_multiplier,
            self.base_geometry,
            tuple(leaves),
        )
