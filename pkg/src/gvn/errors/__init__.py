"""gvn error handling.

All library errors derive from `GvnException`. Operations whose failures
are data (validation findings, verification counterexamples) return them
instead of raising.
"""

from .error_details import GvnErrorCode, ParseError
from .exceptions import (
    GvnException,
    InvalidArgumentException,
    NameCollisionException,
    NetlistParseException,
    NetlistValidationException,
    OscillationException,
    TimingInfeasibleException,
    UnboundPortException,
    UnknownException,
    UnsettledStateException,
    UnwritableDestinationException,
)

# NB: since this module imports from sibling modules, it must be at the bottom
# to avoid circular imports
from .error_converter import convert_error

__all__ = [
    "GvnErrorCode",
    "ParseError",
    "GvnException",
    "InvalidArgumentException",
    "NameCollisionException",
    "NetlistParseException",
    "NetlistValidationException",
    "OscillationException",
    "TimingInfeasibleException",
    "UnboundPortException",
    "UnknownException",
    "UnsettledStateException",
    "UnwritableDestinationException",
    "convert_error",
]
