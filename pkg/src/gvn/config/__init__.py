"""gvn configuration: process physics and benchmark settings."""

from .bench_configuration import BenchConfiguration
from .configurations import DEFAULT_PARAMS_PATH, BenchConfigurations, ProcessParamsConfigurations
from .param_file import digest, dumps, load, loads
from .process_params import ProcessParams

__all__ = [
    "BenchConfiguration",
    "BenchConfigurations",
    "DEFAULT_PARAMS_PATH",
    "ProcessParams",
    "ProcessParamsConfigurations",
    "digest",
    "dumps",
    "load",
    "loads",
]
