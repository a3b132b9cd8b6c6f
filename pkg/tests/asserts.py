from typing import Optional

from gvn.errors import GvnErrorCode
from gvn.responses import ErrorResponseMixin, Response


# Custom assertions
def assert_response_is_error(
    response: Response,
    *,
    error_code: Optional[GvnErrorCode] = None,
    inner_exception_message: Optional[str] = None,
) -> None:
    assert isinstance(response, ErrorResponseMixin)
    if isinstance(response, ErrorResponseMixin):
        if error_code:
            assert response.error_code == error_code
        if inner_exception_message:
            assert inner_exception_message in response.inner_exception.message


def assert_relative_close(actual: float, expected: float, rel_tol: float) -> None:
    assert expected != 0.0
    assert abs(actual - expected) / abs(expected) <= rel_tol, f"{actual!r} vs {expected!r} (rel_tol {rel_tol})"
