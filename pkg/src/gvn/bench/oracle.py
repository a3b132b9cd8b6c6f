from __future__ import annotations

from gvn.internal._utilities import _validate_bit, _validate_digit
from gvn.typing import TBcdResult


def bcd_add_oracle(a: int, b: int, cin: int) -> TBcdResult:
    """Decimal digit addition: (carry, digit) of a + b + cin."""
    _validate_digit(a, "a")
    _validate_digit(b, "b")
    _validate_bit(cin, "cin")
    total = a + b + cin
    return (1, total - 10) if total >= 10 else (0, total)
