"""gvn result types.

An operation whose outcome is data returns a type with a name ending in
"Response", whose concrete types live in the namespace of the name, eg:

- `verify_variant` returns `VerifyVariantResponse`, which is one of
  `VerifyVariant.Pass`, `VerifyVariant.Fail`, `VerifyVariant.Error`
"""

from .mixins import ErrorResponseMixin
from .response import Response
from .verify import Counterexample, VerifyVariant, VerifyVariantResponse

__all__ = [
    "ErrorResponseMixin",
    "Response",
    "Counterexample",
    "VerifyVariant",
    "VerifyVariantResponse",
]
