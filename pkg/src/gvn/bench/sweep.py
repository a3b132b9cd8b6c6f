from __future__ import annotations

from typing import List, Optional, Sequence

import numpy as np

from gvn import logs
from gvn.config import BenchConfiguration, BenchConfigurations, ProcessParams, ProcessParamsConfigurations, digest
from gvn.gating import ClockConfig, ClusterDelays, derive_clock_config, measure_cluster_delays
from gvn.generators import Variant, exhaustive_vectors, generate, vector_assignment
from gvn.internal._utilities import _validate_non_empty, _validate_positive
from gvn.netlist import Netlist
from gvn.power import LeakageEstimator, average_power
from gvn.sim import LogicLevel, SimState
from gvn.typing import TBcdVector, THertz, TSeconds

from .report import BenchReport, BenchRow
from .stimulus import CycleDriver, drive_settled
from .verify import WARMUP_VECTOR

# gap between exhaustive delay vectors; far above any adder delay
_DELAY_GAP_S = 1e-8


def random_vectors(seed: int, cycles: int) -> List[TBcdVector]:
    """`cycles` (a, b, cin) triples drawn uniformly from legal digit pairs and carry-ins."""
    rng = np.random.default_rng(seed)
    digits = rng.integers(0, 10, size=(cycles, 2))
    carries = rng.integers(0, 2, size=cycles)
    return [(int(a), int(b), int(cin)) for (a, b), cin in zip(digits, carries)]


def measure_worst_delay(
    netlist: Netlist, params: ProcessParams, bench: Optional[BenchConfiguration] = None
) -> TSeconds:
    """Largest input-to-output delay over the 200 vectors applied back-to-back after a (0, 0, 0) warm-up.

    Clock ports, when present, are held high so every cluster stays awake.
    """
    bench = bench or BenchConfigurations.Default.latest()
    state = SimState(netlist, params, oscillation_bound=bench.get_oscillation_bound(), record_events=False)
    warmup = vector_assignment(WARMUP_VECTOR)
    warmup.update({clock: LogicLevel.L1 for clock in netlist.clock_ports})
    drive_settled(state, warmup, 0.0)

    worst = 0.0
    for vector in exhaustive_vectors():
        applied_at = drive_settled(state, vector_assignment(vector), _DELAY_GAP_S)
        worst = max(worst, state.measure_delay(applied_at))
    return worst


def _average_power(
    netlist: Netlist,
    params: ProcessParams,
    bench: BenchConfiguration,
    freq_Hz: THertz,
    vectors: Sequence[TBcdVector],
    clocks: Optional[ClockConfig],
) -> float:
    state = SimState(
        netlist,
        params,
        oscillation_bound=bench.get_oscillation_bound(),
        wake_cap_F=bench.get_wake_cap_F(),
        record_events=False,
    )
    leakage = LeakageEstimator(netlist, params, bench.get_max_stack_depth())
    CycleDriver(state, 1.0 / freq_Hz, clocks, leakage).run(vectors)
    return average_power(state.trace, params)


def _clocking(delays: Optional[ClusterDelays], freq_Hz: THertz, bench: BenchConfiguration) -> Optional[ClockConfig]:
    if delays is None:
        return None
    return derive_clock_config(
        freq_Hz, delays.stage1_s, delays.stage2_s, bench.get_guard_margin(), bench.get_resolution_s()
    )


def sweep(
    variants: Sequence[Variant],
    freqs_Hz: Sequence[THertz],
    params: Optional[ProcessParams] = None,
    bench: Optional[BenchConfiguration] = None,
) -> BenchReport:
    """Average power, worst delay and PDP of every variant at every frequency.

    Average power comes from `bench.get_cycles()` random vectors, one per
    period, drawn from `bench.get_seed()`; every (variant, frequency) cell
    sees the same stream. The gated variant runs with the clocking derived
    for that frequency. Worst delay is a property of the netlist and is
    measured once per variant over the exhaustive vectors.

    Raises:
        TimingInfeasibleException: the gated variant cannot be clocked at one of `freqs_Hz`.
    """
    params = params or ProcessParamsConfigurations.Default.latest()
    bench = bench or BenchConfigurations.Default.latest()
    _validate_non_empty(freqs_Hz, "freqs_Hz")
    _validate_non_empty(variants, "variants")
    for freq_Hz in freqs_Hz:
        _validate_positive(freq_Hz, "freqs_Hz")

    vectors = random_vectors(bench.get_seed(), bench.get_cycles())
    rows: List[BenchRow] = []
    for variant in dict.fromkeys(variants):
        netlist = generate(variant)
        worst_delay = measure_worst_delay(netlist, params, bench)
        logs.debug("%s worst delay %.5e s", variant.display_name, worst_delay)
        delays = measure_cluster_delays(netlist, params, bench) if variant is Variant.GATED else None
        for freq_Hz in sorted(set(freqs_Hz)):
            clocks = _clocking(delays, freq_Hz, bench)
            power = _average_power(netlist, params, bench, freq_Hz, vectors, clocks)
            logs.info("%s at %.5e Hz: %.5e W", variant.display_name, freq_Hz, power)
            rows.append(BenchRow.measured(variant, freq_Hz, power, worst_delay))
    return BenchReport(rows, digest(params))

