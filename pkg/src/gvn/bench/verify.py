from __future__ import annotations

from typing import List, Optional

from gvn import logs
from gvn.config import BenchConfiguration, BenchConfigurations, ProcessParams, ProcessParamsConfigurations
from gvn.errors import GvnException
from gvn.gating import ClockConfig, derive_clock_config, measure_cluster_delays
from gvn.generators import Variant, exhaustive_vectors, generate, read_result
from gvn.internal._utilities import _validate_positive
from gvn.netlist import Netlist
from gvn.responses import Counterexample, VerifyVariant, VerifyVariantResponse
from gvn.sim import SimState
from gvn.typing import THertz

from .oracle import bcd_add_oracle
from .stimulus import CycleDriver

WARMUP_VECTOR = (0, 0, 0)


def gated_clock_config(
    netlist: Netlist, freq_Hz: THertz, params: ProcessParams, bench: BenchConfiguration
) -> ClockConfig:
    """Measure the cluster wake delays of a gated netlist and derive its clocking at `freq_Hz`."""
    delays = measure_cluster_delays(netlist, params, bench)
    return derive_clock_config(
        freq_Hz, delays.stage1_s, delays.stage2_s, bench.get_guard_margin(), bench.get_resolution_s()
    )


def verify_variant(
    variant: Variant,
    freq_Hz: THertz,
    params: Optional[ProcessParams] = None,
    bench: Optional[BenchConfiguration] = None,
    netlist: Optional[Netlist] = None,
) -> VerifyVariantResponse:
    """Check all 200 (a, b, cin) vectors of `variant` against decimal addition at `freq_Hz`.

    Vectors are applied one per clock period after a warm-up cycle at
    (0, 0, 0). The gated variant runs with its derived CLK1/CLK2 and is read
    at the output sampling instants; the others are read at the end of each
    period.

    Args:
        variant (Variant): which adder.
        freq_Hz (THertz): clock frequency.
        params (ProcessParams): process parameters; the shipped calibration when omitted.
        bench (BenchConfiguration): bench settings; `BenchConfigurations.Default` when omitted.
        netlist (Netlist): run this netlist instead of the generated one, clocked as `variant`.

    Returns:
        VerifyVariantResponse: `Pass`, `Fail` with counterexamples, or `Error`
        when the run cannot be made (timing infeasible, oscillation).
    """
    params = params or ProcessParamsConfigurations.Default.latest()
    bench = bench or BenchConfigurations.Default.latest()
    vectors = exhaustive_vectors()
    try:
        _validate_positive(freq_Hz, "freq_Hz")
        circuit = netlist if netlist is not None else generate(variant)
        clocks = gated_clock_config(circuit, freq_Hz, params, bench) if variant is Variant.GATED else None
        state = SimState(circuit, params, oscillation_bound=bench.get_oscillation_bound(), record_events=False)
        samples = CycleDriver(state, 1.0 / freq_Hz, clocks).run([WARMUP_VECTOR, *vectors])
    except GvnException as e:
        logs.debug("verification of %s at %.5e Hz could not run: %s", variant.value, freq_Hz, e)
        return VerifyVariant.Error(e)

    counterexamples: List[Counterexample] = []
    for vector, outputs in zip(vectors, samples[1:]):
        expected = bcd_add_oracle(*vector)
        actual = read_result(outputs)
        if actual != expected:
            counterexamples.append(Counterexample(vector, expected, actual))

    logs.info(
        "%s at %.5e Hz: %d/%d vectors correct",
        variant.display_name,
        freq_Hz,
        len(vectors) - len(counterexamples),
        len(vectors),
    )
    if counterexamples:
        return VerifyVariant.Fail(len(vectors), counterexamples)
    return VerifyVariant.Pass(len(vectors))
