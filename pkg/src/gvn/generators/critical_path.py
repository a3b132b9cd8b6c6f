from __future__ import annotations

from collections import Counter
from typing import Dict, FrozenSet, List

import networkx as nx

from gvn.errors import InvalidArgumentException
from gvn.netlist import HIERARCHY_SEPARATOR, Netlist
from gvn.typing import TGateInstance, TNetId

CARRY_CHAIN_GATES: FrozenSet[str] = frozenset({"tgc", "nor3", "or3"})
"""Gate-instance leaves that carry the ripple: full-adder carry muxes and the correction OR."""


def leaf(gate_instance: TGateInstance) -> str:
    return gate_instance.rpartition(HIERARCHY_SEPARATOR)[2]


def gate_output_nets(netlist: Netlist) -> Dict[TGateInstance, TNetId]:
    """The net each gate drives: the signal net touched by the most channels of the gate.

    Rails, virtual rails and driven ports never count. Gates with no such net
    (sleep devices) are left out.
    """
    touches: Dict[TGateInstance, Counter[TNetId]] = {}
    for device in netlist.devices:
        counter = touches.setdefault(device.gate_instance, Counter())
        for terminal in (device.source, device.drain):
            kind = netlist.kind_of(terminal)
            if not (kind.is_rail or kind.is_virtual_rail or kind.is_driven_port):
                counter[terminal] += 1
    return {gate: counter.most_common(1)[0][0] for gate, counter in touches.items() if counter}


def gate_graph(netlist: Netlist) -> nx.DiGraph:
    """Signal flow between gate instances: an edge u -> v when v's devices use u's output net."""
    outputs = gate_output_nets(netlist)
    driver: Dict[TNetId, TGateInstance] = {}
    for gate, net in outputs.items():
        driver.setdefault(net, gate)

    graph = nx.DiGraph()
    graph.add_nodes_from(outputs)
    for device in netlist.devices:
        consumer = device.gate_instance
        if consumer not in outputs:
            continue
        for terminal in device.terminals:
            producer = driver.get(terminal)
            if producer is not None and producer != consumer and terminal != outputs[consumer]:
                graph.add_edge(producer, consumer)
    return graph


def critical_path_gates(netlist: Netlist, chain: FrozenSet[str] = CARRY_CHAIN_GATES) -> List[TGateInstance]:
    """Longest run of carry-chain gates, by stage count, through the gate graph.

    Chain gates are linked when a path of ordinary gates connects them.

    Raises:
        InvalidArgumentException: the gate graph has a combinational loop.
    """
    graph = gate_graph(netlist)
    chain_nodes = [gate for gate in graph.nodes if leaf(gate) in chain]
    if not chain_nodes:
        return []

    members = set(chain_nodes)
    dag = nx.DiGraph()
    dag.add_nodes_from(chain_nodes)
    for start in chain_nodes:
        seen = set()
        stack = list(graph.successors(start))
        while stack:
            gate = stack.pop()
            if gate in seen:
                continue
            seen.add(gate)
            if gate in members:
                dag.add_edge(start, gate)
            else:
                stack.extend(graph.successors(gate))

    try:
        return list(nx.dag_longest_path(dag))
    except nx.NetworkXUnfeasible:
        raise InvalidArgumentException("gate graph has a combinational loop; no critical path") from None
