from __future__ import annotations

import pytest

from gvn.errors import GvnErrorCode, TimingInfeasibleException
from gvn.responses import Counterexample, VerifyVariant


@pytest.mark.parametrize(
    "counterexample, expected_str",
    [
        (Counterexample((5, 5, 0), (1, 0), (0, 10)), "5+5+0: expected carry=1 digit=0, got carry=0 digit=10"),
        (Counterexample((9, 0, 0), (0, 9), None), "9+0+0: expected carry=0 digit=9, got undefined"),
    ],
)
def test_counterexample_str(counterexample: Counterexample, expected_str: str) -> None:
    assert str(counterexample) == expected_str


def describe_verify_variant_responses() -> None:
    def pass_renders_its_count() -> None:
        passed = VerifyVariant.Pass(200)
        assert str(passed) == "VerifyVariant.Pass(vectors_checked=200)"
        assert eval(repr(passed), {"VerifyVariant": VerifyVariant}) == passed

    def fail_truncates_long_counterexample_lists() -> None:
        counterexamples = [Counterexample((digit, 0, 0), (0, digit), None) for digit in range(7)]
        failed = VerifyVariant.Fail(200, counterexamples)
        assert str(failed).endswith("... 2 more])")
        assert "more" not in repr(failed)
        assert failed.failing_vectors == [(digit, 0, 0) for digit in range(7)]

    def error_exposes_the_underlying_exception() -> None:
        exception = TimingInfeasibleException("period too short")
        error = VerifyVariant.Error(exception)
        assert error.inner_exception is exception
        assert error.error_code is GvnErrorCode.TIMING_INFEASIBLE_ERROR
        assert error.message == "Timing infeasible at the requested frequency: period too short"
