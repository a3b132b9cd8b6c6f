"""Clock-gated power gating: CLK1/CLK2 derivation, waveforms and sampling instants."""

from .clocks import (
    DEFAULT_GUARD_MARGIN,
    DEFAULT_RESOLUTION_S,
    ClockConfig,
    clock_waveforms,
    derive_clock_config,
    output_sample_times,
)
from .cluster_delays import ClusterDelays, boundary_nets, measure_cluster_delays

__all__ = [
    "DEFAULT_GUARD_MARGIN",
    "DEFAULT_RESOLUTION_S",
    "ClockConfig",
    "clock_waveforms",
    "derive_clock_config",
    "output_sample_times",
    "ClusterDelays",
    "boundary_nets",
    "measure_cluster_delays",
]
