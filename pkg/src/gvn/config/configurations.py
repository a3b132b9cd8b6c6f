from __future__ import annotations

from pathlib import Path
from typing import Union

from . import param_file
from .bench_configuration import BenchConfiguration
from .process_params import ProcessParams

DEFAULT_PARAMS_PATH = Path(__file__).with_name("default.params")


class ProcessParamsConfigurations:
    """Container class for pre-built process parameter sets."""

    class Default(ProcessParams):
        """Calibration shipped with gvn, stored in `default.params`.

        Fitted so that the conventional adder's delay and power land within an
        order of magnitude of published 45 nm figures. It is not a foundry model.
        """

        @staticmethod
        def latest() -> ProcessParams:
            """Provides the latest shipped calibration.

            This will change whenever the shipped calibration is refitted.
            """
            return ProcessParamsConfigurations.Default.v1()

        @staticmethod
        def v1() -> ProcessParams:
            """Provides the v1 calibration.

            This is guaranteed not to change in future releases of gvn.
            """
            return ProcessParams()

    @staticmethod
    def from_file(path: Union[str, Path]) -> ProcessParams:
        """Load a parameter file; keys it omits keep their v1 value."""
        return param_file.load(path)


class BenchConfigurations:
    """Container class for pre-built benchmark settings."""

    class Default(BenchConfiguration):
        """Settings for full benchmark runs."""

        @staticmethod
        def latest() -> BenchConfiguration:
            return BenchConfigurations.Default.v1()

        @staticmethod
        def v1() -> BenchConfiguration:
            """1000 random cycles from seed 1, 10% guard margin, 1 ps resolution.

            This is guaranteed not to change in future releases of gvn.
            """
            return BenchConfiguration(
                seed=1,
                cycles=1000,
                oscillation_bound=10**6,
                guard_margin=0.1,
                wake_cap_F=5e-17,
                resolution_s=1e-12,
                max_stack_depth=4,
            )

    class Quick(BenchConfiguration):
        """Short random stream for smoke runs and tests; everything else as Default."""

        @staticmethod
        def latest() -> BenchConfiguration:
            return BenchConfigurations.Quick.v1()

        @staticmethod
        def v1() -> BenchConfiguration:
            return BenchConfigurations.Default.v1().with_cycles(200)
