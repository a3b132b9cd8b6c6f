from __future__ import annotations

import logging
import math
from collections import abc
from typing import Dict, Hashable, List, Mapping, Protocol, Tuple, Union

import networkx as nx

from gvn import logs
from gvn.config import ProcessParams
from gvn.errors import InvalidArgumentException, UnsettledStateException
from gvn.netlist import Netlist, Transistor, VthClass
from gvn.sim.levels import LogicLevel, conduction
from gvn.typing import TAmperes, TDeviceName, TNetId, TWatts

from .models import off_current

DEFAULT_MAX_STACK_DEPTH = 4


class SettledView(Protocol):
    @property
    def value_of(self) -> Mapping[TNetId, LogicLevel]:
        ...

    @property
    def pending_count(self) -> int:
        ...


TStateLike = Union[SettledView, Mapping[TNetId, LogicLevel]]


class _DisjointNets:
    def __init__(self, nets: List[TNetId]) -> None:
        self._parent: Dict[TNetId, TNetId] = {net: net for net in nets}

    def find(self, net: TNetId) -> TNetId:
        root = net
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[net] != root:
            self._parent[net], net = root, self._parent[net]
        return root

    def union(self, a: TNetId, b: TNetId) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[rb] = ra


class LeakageEstimator:
    """State-dependent subthreshold leakage of one netlist, memoized per gate state.

    Nets joined by conducting devices collapse into one node; every OFF (or
    uncertain) device becomes an edge between nodes. Each simple path of at
    most `max_stack_depth` edges from the supply node to the ground node
    carries the smallest current of its devices, attenuated by
    `stack_factor` for every further device in series.
    """

    def __init__(self, netlist: Netlist, pp: ProcessParams, max_stack_depth: int = DEFAULT_MAX_STACK_DEPTH):
        if netlist.rail_vdd is None or netlist.rail_gnd is None:
            raise InvalidArgumentException("leakage needs both a supply and a ground rail")
        self._netlist = netlist
        self._pp = pp
        self._max_stack_depth = max_stack_depth
        self._vdd: TNetId = netlist.rail_vdd
        self._gnd: TNetId = netlist.rail_gnd
        self._driven = [net.id for net in netlist.nets if net.kind.is_driven_port]
        self._key_nets = sorted(set(netlist.devices_gated_by) | set(self._driven))
        self._off_current: Dict[TDeviceName, TAmperes] = {d.name: off_current(d, pp) for d in netlist.devices}
        self._cache: Dict[Tuple[LogicLevel, ...], TWatts] = {}

    @property
    def cache_size(self) -> int:
        return len(self._cache)

    def __call__(self, state: TStateLike) -> TWatts:
        values = _values_of(state)
        key = tuple(values.get(net, LogicLevel.LX) for net in self._key_nets)
        cached = self._cache.get(key)
        if cached is None:
            cached = self._estimate(values)
            self._cache[key] = cached
        return cached

    def _estimate(self, values: Mapping[TNetId, LogicLevel]) -> TWatts:
        nets = [net.id for net in self._netlist.nets]
        classes = _DisjointNets(nets)
        for net in self._driven:
            level = values.get(net, LogicLevel.LX)
            if level is LogicLevel.L1:
                classes.union(self._vdd, net)
            elif level is LogicLevel.L0:
                classes.union(self._gnd, net)

        blocking: List[Tuple[Transistor, bool]] = []
        for device in self._netlist.devices:
            state = conduction(device, values.get(device.gate, LogicLevel.LX))
            if state is True:
                classes.union(device.source, device.drain)
            else:
                blocking.append((device, state is None))

        top, bottom = classes.find(self._vdd), classes.find(self._gnd)
        if top == bottom:
            logs.logger.warning("supply and ground are shorted in this state; leakage is not defined, reporting 0")
            return 0.0

        graph = nx.MultiGraph()
        uncertain: Dict[TDeviceName, bool] = {}
        for device, is_uncertain in blocking:
            u, v = classes.find(device.source), classes.find(device.drain)
            if u != v:
                graph.add_edge(u, v, key=device.name)
                uncertain[device.name] = is_uncertain
        if top not in graph or bottom not in graph:
            return 0.0

        total: List[TAmperes] = []
        for path in nx.all_simple_edge_paths(graph, top, bottom, cutoff=self._max_stack_depth):
            names: List[Hashable] = [edge[2] for edge in path]
            devices = [self._netlist.device_index[str(name)] for name in names]
            if any(uncertain[d.name] for d in devices):
                lowest = VthClass.LOW if any(d.vth_class is VthClass.LOW for d in devices) else VthClass.HIGH
                currents = [
                    off_current(d.with_vth_class(lowest), self._pp) if uncertain[d.name] else self._off_current[d.name]
                    for d in devices
                ]
            else:
                currents = [self._off_current[d.name] for d in devices]
            total.append(min(currents) * self._pp.stack_factor ** (len(devices) - 1))

        if logs.logger.isEnabledFor(logging.DEBUG):
            deeper = sum(
                1
                for path in nx.all_simple_edge_paths(graph, top, bottom, cutoff=self._max_stack_depth + 1)
                if len(path) > self._max_stack_depth
            )
            if deeper:
                logs.debug("leakage ignores at least %d path(s) over %d devices", deeper, self._max_stack_depth)

        leakage = self._pp.vdd_V * math.fsum(total)
        logs.logger.log(logs.TRACE, "leakage over %d path(s): %.5e W", len(total), leakage)
        return leakage


def _values_of(state: TStateLike) -> Mapping[TNetId, LogicLevel]:
    if isinstance(state, abc.Mapping):
        return state
    if state.pending_count > 0:
        raise UnsettledStateException(f"{state.pending_count} event(s) still pending")
    return state.value_of


def state_leakage(
    netlist: Netlist, state: TStateLike, pp: ProcessParams, max_stack_depth: int = DEFAULT_MAX_STACK_DEPTH
) -> TWatts:
    """Leakage power of `netlist` in a settled logic state.

    Args:
        netlist (Netlist): the circuit.
        state: a net -> level mapping, or a simulation state, which must have no pending events.
        pp (ProcessParams): process parameters.
        max_stack_depth (int): longest series stack enumerated. Longer stacks
            are left out, so deep states undercount slightly; their number is
            logged at DEBUG.

    Raises:
        UnsettledStateException: `state` still has pending events.
    """
    return LeakageEstimator(netlist, pp, max_stack_depth)(state)
