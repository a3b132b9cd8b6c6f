"""gvn: switch-level simulation and power/timing benchmarking of CMOS BCD adders.

Generate an adder with `generate(Variant.GATED)`, simulate it with
`SimState`, and compare variants with `verify_variant` and `sweep`.
Use `ProcessParamsConfigurations` and `BenchConfigurations` for pre-built
settings.
"""

import logging

from gvn import logs

from .bench import BenchReport, ReportFormat, emit, sweep, verify_variant
from .config import BenchConfigurations, ProcessParams, ProcessParamsConfigurations
from .generators import Variant, generate
from .netlist import Netlist, parse, serialize
from .sim import SimState

logging.getLogger("gvn").addHandler(logging.NullHandler())
logs.initialize_gvn_logging()

__all__ = [
    "BenchReport",
    "ReportFormat",
    "emit",
    "sweep",
    "verify_variant",
    "BenchConfigurations",
    "ProcessParams",
    "ProcessParamsConfigurations",
    "Variant",
    "generate",
    "Netlist",
    "parse",
    "serialize",
    "SimState",
]
