from __future__ import annotations

from typing import TYPE_CHECKING, List, Sequence

from gvn.errors import GvnErrorCode, ParseError

if TYPE_CHECKING:
    from gvn.netlist.validation import ValidationReport


class GvnException(Exception):
    """Base class for all gvn exceptions."""

    message: str
    """Exception message"""
    error_code: GvnErrorCode
    """Which failure family this is. Prefer it over message matching."""
    message_wrapper: str
    """Prefix describing the error class; the instance message is appended at render time."""

    def __init__(self, message: str, error_code: GvnErrorCode, message_wrapper: str = ""):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.message_wrapper = message_wrapper

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"message={self.message!r}, "
            f"error_code={self.error_code!r}, "
            f"message_wrapper={self.message_wrapper!r})"
        )

    def __str__(self) -> str:
        if self.message_wrapper:
            return f"{self.message_wrapper}: {self.message}"
        return self.message


class InvalidArgumentException(GvnException):
    """Client-side validation failed."""

    def __init__(self, message: str):
        super().__init__(message, GvnErrorCode.INVALID_ARGUMENT_ERROR, message_wrapper="Invalid argument")


class NetlistValidationException(GvnException):
    """A netlist was rejected because `validate` found errors."""

    def __init__(self, message: str, report: ValidationReport):
        super().__init__(message, GvnErrorCode.NETLIST_VALIDATION_ERROR, message_wrapper="Invalid netlist")
        self.report = report


class NetlistParseException(GvnException):
    """Text could not be parsed; `errors` lists every problem found, in line order."""

    def __init__(self, errors: Sequence[ParseError]):
        self.errors: List[ParseError] = list(errors)
        first = str(self.errors[0]) if self.errors else "no details"
        more = f" (+{len(self.errors) - 1} more)" if len(self.errors) > 1 else ""
        super().__init__(first + more, GvnErrorCode.PARSE_ERROR, message_wrapper="Parse failed")


class UnboundPortException(GvnException):
    """A cell was instantiated without a binding for one of its ports."""

    def __init__(self, message: str):
        super().__init__(message, GvnErrorCode.UNBOUND_PORT_ERROR, message_wrapper="Unbound port")


class NameCollisionException(GvnException):
    """An instantiation prefix produced a name that already exists."""

    def __init__(self, message: str):
        super().__init__(message, GvnErrorCode.NAME_COLLISION_ERROR, message_wrapper="Name collision")


class OscillationException(GvnException):
    """The event bound was exhausted before the circuit became quiet."""

    def __init__(self, message: str):
        super().__init__(
            message,
            GvnErrorCode.OSCILLATION_ERROR,
            message_wrapper="Simulation did not reach quiescence; the circuit oscillates or the bound is too low",
        )


class TimingInfeasibleException(GvnException):
    """The clock period cannot cover both cluster delays."""

    def __init__(self, message: str):
        super().__init__(
            message,
            GvnErrorCode.TIMING_INFEASIBLE_ERROR,
            message_wrapper="Timing infeasible at the requested frequency",
        )


class UnsettledStateException(GvnException):
    """An operation that needs a quiescent state saw pending events."""

    def __init__(self, message: str):
        super().__init__(message, GvnErrorCode.UNSETTLED_STATE_ERROR, message_wrapper="State is not settled")


class UnwritableDestinationException(GvnException):
    """Output could not be written to the requested destination."""

    def __init__(self, message: str):
        super().__init__(
            message, GvnErrorCode.UNWRITABLE_DESTINATION_ERROR, message_wrapper="Cannot write destination"
        )


class UnknownException(GvnException):
    """Unhandled error; please file a bug with the message."""

    def __init__(self, message: str):
        super().__init__(message, GvnErrorCode.UNKNOWN_ERROR, message_wrapper="Unknown error")
