from __future__ import annotations

import enum
from typing import Optional

from gvn.netlist import DeviceType, Transistor


class LogicLevel(enum.Enum):
    """Four-valued net level. LX is unknown or contending, LZ undriven."""

    L0 = "0"
    L1 = "1"
    LX = "X"
    LZ = "Z"

    @property
    def is_definite(self) -> bool:
        return self in (LogicLevel.L0, LogicLevel.L1)

    @property
    def bit(self) -> int:
        if not self.is_definite:
            raise ValueError(f"{self.name} has no bit value")
        return 1 if self is LogicLevel.L1 else 0

    @staticmethod
    def of_bit(bit: int) -> LogicLevel:
        return LogicLevel.L1 if bit else LogicLevel.L0

    def __str__(self) -> str:
        return self.value


def conduction(device: Transistor, gate_level: LogicLevel) -> Optional[bool]:
    """True when the device is ON, False when OFF, None when its gate is not definite."""
    if not gate_level.is_definite:
        return None
    on_level = LogicLevel.L1 if device.device_type is DeviceType.NMOS else LogicLevel.L0
    return gate_level is on_level
