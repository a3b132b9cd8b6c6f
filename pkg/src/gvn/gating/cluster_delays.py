from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from gvn import logs
from gvn.config import BenchConfiguration, BenchConfigurations, ProcessParams
from gvn.errors import InvalidArgumentException
from gvn.generators import CLUSTERS, exhaustive_vectors, vector_assignment
from gvn.netlist import HIERARCHY_SEPARATOR, Netlist
from gvn.sim import LogicLevel, SimState
from gvn.typing import TBcdVector, TNetId, TSeconds

# spacing between replayed vectors; far above any stage delay
_STEP_S = 1e-8


@dataclass(frozen=True)
class ClusterDelays:
    stage1_s: TSeconds
    stage2_s: TSeconds


def boundary_nets(netlist: Netlist, tag: str) -> List[TNetId]:
    """Nets of cluster `tag` read by devices of other clusters."""
    inside = set(netlist.nets_in_cluster(tag))
    instances = CLUSTERS[tag].instances
    found: Dict[TNetId, None] = {}
    for device in netlist.devices:
        if device.is_sleep or device.name.split(HIERARCHY_SEPARATOR, 1)[0] in instances:
            continue
        for terminal in device.terminals:
            if terminal in inside and not netlist.kind_of(terminal).is_virtual_rail:
                found[terminal] = None
    return list(found)


def measure_cluster_delays(
    netlist: Netlist,
    params: ProcessParams,
    bench: Optional[BenchConfiguration] = None,
    vectors: Optional[Iterable[TBcdVector]] = None,
) -> ClusterDelays:
    """Worst wake-from-sleep delay of each cluster of the gated adder.

    Per vector: apply it while CLK1 rises and time the last change on the
    nets cluster 1 hands to cluster 2; then raise CLK2 and time the last
    output change; then put both clusters back to sleep.
    """
    bench = bench or BenchConfigurations.Default.latest()
    clk1, clk2 = (CLUSTERS[tag].clock for tag in ("1", "2"))
    if clk1 not in netlist.clock_ports or clk2 not in netlist.clock_ports:
        raise InvalidArgumentException("cluster delays need a netlist with clk1 and clk2 ports")

    state = SimState(netlist, params, oscillation_bound=bench.get_oscillation_bound())
    handoff = boundary_nets(netlist, "1")

    warmup = vector_assignment((0, 0, 0))
    warmup.update({clk1: LogicLevel.L1, clk2: LogicLevel.L1})
    state.apply_inputs(warmup, 0.0)
    state.settle()
    state.apply_inputs({clk1: LogicLevel.L0, clk2: LogicLevel.L0}, _STEP_S)
    state.settle()

    stage1 = stage2 = 0.0
    for index, vector in enumerate(vectors if vectors is not None else exhaustive_vectors(), start=2):
        start = index * _STEP_S
        wake = vector_assignment(vector)
        wake[clk1] = LogicLevel.L1
        state.apply_inputs(wake, start)
        state.settle()
        for net in handoff:
            changed = state.last_change(net)
            if changed is not None and changed >= start:
                stage1 = max(stage1, changed - start)

        clk2_rise = state.now_s
        state.apply_inputs({clk2: LogicLevel.L1}, clk2_rise)
        state.settle()
        stage2 = max(stage2, state.measure_delay(clk2_rise))

        state.apply_inputs({clk1: LogicLevel.L0, clk2: LogicLevel.L0}, state.now_s)
        state.settle()

    logs.debug("cluster delays: stage 1 %.5e s, stage 2 %.5e s", stage1, stage2)
    return ClusterDelays(stage1, stage2)
