from gvn.errors import GvnErrorCode, GvnException


class ErrorResponseMixin:
    _error: GvnException

    def __init__(self, _error: GvnException):
        self._error = _error

    @property
    def inner_exception(self) -> GvnException:
        """The GvnException the result was built from."""
        return self._error

    @property
    def error_code(self) -> GvnErrorCode:
        """The `GvnErrorCode` of the underlying error."""
        return self._error.error_code

    @property
    def message(self) -> str:
        """What went wrong, prefixed with the error family's description."""
        return f"{self._error.message_wrapper}: {self._error.message}"

    def __str__(self) -> str:
        return f"{self.__class__.__qualname__} {self.error_code}: {self.message}"
