from __future__ import annotations

import math
from typing import Sequence

from gvn.errors import InvalidArgumentException


def _validate_name(name: str, field_name: str) -> None:
    if not isinstance(name, str):
        raise InvalidArgumentException(f"{field_name} must be a string")
    if name == "":
        raise InvalidArgumentException(f"{field_name} must not be empty")
    if any(c.isspace() for c in name) or "#" in name:
        raise InvalidArgumentException(f"{field_name} must not contain whitespace or '#': {name!r}")


def _validate_net_id(net_id: str) -> None:
    _validate_name(net_id, "Net id")


def _validate_device_name(device_name: str) -> None:
    _validate_name(device_name, "Device name")


def _validate_finite(value: float, field_name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidArgumentException(f"{field_name} must be a number. Given type: {type(value)}")
    if not math.isfinite(value):
        raise InvalidArgumentException(f"{field_name} must be finite")


def _validate_positive(value: float, field_name: str) -> None:
    _validate_finite(value, field_name)
    if value <= 0:
        raise InvalidArgumentException(f"{field_name} must be positive, got {value}")


def _validate_non_negative(value: float, field_name: str) -> None:
    _validate_finite(value, field_name)
    if value < 0:
        raise InvalidArgumentException(f"{field_name} must not be negative, got {value}")


def _validate_at_least_one(value: float, field_name: str) -> None:
    _validate_finite(value, field_name)
    if value < 1:
        raise InvalidArgumentException(f"{field_name} must be at least 1, got {value}")


def _validate_fraction(value: float, field_name: str) -> None:
    """Check `value` lies in (0, 1]."""
    _validate_finite(value, field_name)
    if not 0 < value <= 1:
        raise InvalidArgumentException(f"{field_name} must be in (0, 1], got {value}")


def _validate_digit(value: int, field_name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidArgumentException(f"{field_name} must be an int. Given type: {type(value)}")
    if not 0 <= value <= 9:
        raise InvalidArgumentException(f"{field_name} must be a decimal digit 0-9, got {value}")


def _validate_bit(value: int, field_name: str) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidArgumentException(f"{field_name} must be an int. Given type: {type(value)}")
    if value not in (0, 1):
        raise InvalidArgumentException(f"{field_name} must be 0 or 1, got {value}")


def _validate_non_empty(values: Sequence[object], field_name: str) -> None:
    if len(values) == 0:
        raise InvalidArgumentException(f"{field_name} must not be empty")
