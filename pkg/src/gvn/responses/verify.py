from __future__ import annotations

from abc import ABC
from dataclasses import dataclass
from typing import List, Optional

from gvn.typing import TBcdResult, TBcdVector

from .mixins import ErrorResponseMixin
from .response import Response


@dataclass(frozen=True)
class Counterexample:
    """One vector whose sampled outputs disagree with decimal addition.

    `actual` is None when an output was not a definite level at the sampling instant.
    """

    vector: TBcdVector
    expected: TBcdResult
    actual: Optional[TBcdResult]

    def __str__(self) -> str:
        a, b, cin = self.vector
        got = "undefined" if self.actual is None else f"carry={self.actual[0]} digit={self.actual[1]}"
        return f"{a}+{b}+{cin}: expected carry={self.expected[0]} digit={self.expected[1]}, got {got}"


class VerifyVariantResponse(Response):
    """Parent response type for `verify_variant`.

    Its subtypes are:
    - `VerifyVariant.Pass`
    - `VerifyVariant.Fail`
    - `VerifyVariant.Error`

    Use `isinstance` (or `match`) on the concrete types.
    """


class VerifyVariant(ABC):
    """Groups all `VerifyVariantResponse` derived types under a common namespace."""

    @dataclass
    class Pass(VerifyVariantResponse):
        """Every vector matched the oracle."""

        vectors_checked: int

    @dataclass
    class Fail(VerifyVariantResponse):
        """At least one vector disagreed with the oracle."""

        vectors_checked: int
        counterexamples: List[Counterexample]

        @property
        def failing_vectors(self) -> List[TBcdVector]:
            return [counterexample.vector for counterexample in self.counterexamples]

    class Error(VerifyVariantResponse, ErrorResponseMixin):
        """The variant could not be run at all, e.g. timing is infeasible at the requested frequency.

        This includes:
        - `error_code`: `GvnErrorCode` value for the error.
        - `message`: a detailed error message.
        """
