from __future__ import annotations

from typing import Dict, Type

from gvn.errors import (
    GvnException,
    InvalidArgumentException,
    UnknownException,
    UnwritableDestinationException,
)

builtin_to_exception: Dict[Type[Exception], Type[GvnException]] = {
    PermissionError: UnwritableDestinationException,
    IsADirectoryError: UnwritableDestinationException,
    FileNotFoundError: UnwritableDestinationException,
    OSError: UnwritableDestinationException,
    ValueError: InvalidArgumentException,
    KeyError: InvalidArgumentException,
    TypeError: InvalidArgumentException,
}


def convert_error(exception: Exception) -> GvnException:
    """Convert a foreign exception to a `GvnException`.

    Exceptions that already are `GvnException` pass through unchanged; the
    most specific matching builtin class wins.

    Args:
        exception (Exception): the low-level exception (I/O, numeric, lookup).

    Returns:
        GvnException: the high-level exception object.
    """
    if isinstance(exception, GvnException):
        return exception

    for exception_type in type(exception).__mro__:
        if exception_type in builtin_to_exception:
            return builtin_to_exception[exception_type](str(exception))  # type: ignore[call-arg]

    return UnknownException(f"{type(exception).__name__}: {exception}")
