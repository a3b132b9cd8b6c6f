from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Deque, Dict, Iterable, List, Mapping, Optional, Set, Tuple

from gvn import logs
from gvn.config import ProcessParams
from gvn.errors import InvalidArgumentException, OscillationException
from gvn.internal._utilities import _validate_at_least_one, _validate_non_negative
from gvn.netlist import NetKind, Netlist, Transistor, validate
from gvn.power.models import gate_delay
from gvn.power.trace import PowerTrace
from gvn.typing import TFarads, TNetId, TSeconds

from .levels import LogicLevel, conduction

DEFAULT_OSCILLATION_BOUND = 10**6

_Edge = Tuple[Transistor, TNetId]
_HeapEntry = Tuple[TSeconds, int, TNetId, LogicLevel]


@dataclass(frozen=True)
class Event:
    time_s: TSeconds
    net: TNetId
    new_value: LogicLevel

    def __post_init__(self) -> None:
        _validate_non_negative(self.time_s, "time_s")


class SimState:
    """Event-driven switch-level simulation of one netlist.

    Nets joined through the channels of conducting (or possibly conducting)
    devices form a channel-connected component, resolved as a whole against
    its sources: rails, input and clock ports, and virtual rails. A virtual
    rail follows its real rail while its sleep device conducts and floats
    (LZ) otherwise. Undriven nets keep their last value.

    A net with conducting paths to exactly one level takes that level, even
    where devices with unknown gates might join it to another; conducting
    paths to two levels give LX. A net with no conducting path keeps its
    value when every level it could reach is the one it holds and goes LX
    otherwise. Each resolved change re-evaluates the components it gates
    until nothing is pending.

    Every change is scheduled after an alpha-power stage delay along the
    conducting path that produced it; scheduling is inertial, a net has at
    most one pending event. Single threaded; the netlist itself is shared
    read-only, so separate states may run concurrently.
    """

    def __init__(
        self,
        netlist: Netlist,
        params: ProcessParams,
        oscillation_bound: int = DEFAULT_OSCILLATION_BOUND,
        wake_cap_F: TFarads = 0.0,
        record_events: bool = True,
    ):
        validate(netlist).raise_if_errors()
        if netlist.rail_vdd is None:
            raise InvalidArgumentException("netlist has no supply rail")
        if netlist.rail_gnd is None:
            raise InvalidArgumentException("netlist has no ground rail")
        _validate_at_least_one(oscillation_bound, "oscillation_bound")
        _validate_non_negative(wake_cap_F, "wake_cap_F")

        self._netlist = netlist
        self._params = params
        self._oscillation_bound = oscillation_bound
        self._wake_cap_F = wake_cap_F
        self._record_events = record_events
        self._logger = logs.logger

        self._values: Dict[TNetId, LogicLevel] = {}
        for net in netlist.nets:
            if net.kind is NetKind.RAIL_VDD:
                self._values[net.id] = LogicLevel.L1
            elif net.kind is NetKind.RAIL_GND:
                self._values[net.id] = LogicLevel.L0
            else:
                self._values[net.id] = LogicLevel.LX
        self._is_source: Dict[TNetId, bool] = {
            net.id: net.kind.is_rail or net.kind.is_driven_port or net.kind.is_virtual_rail for net in netlist.nets
        }
        self._channel: Dict[TNetId, List[_Edge]] = {net.id: [] for net in netlist.nets}
        for device in netlist.devices:
            self._channel[device.source].append((device, device.drain))
            if device.drain != device.source:
                self._channel[device.drain].append((device, device.source))
        self._loaded: Set[TNetId] = set(netlist.devices_gated_by) | set(netlist.output_ports)
        self._load_cap: Dict[TNetId, TFarads] = {
            net.id: netlist.load_capacitance(net.id, params.wire_cap_F) for net in netlist.nets
        }

        self._sleep_of: Dict[TNetId, List[_Edge]] = {vrail: [] for vrail in netlist.virtual_rails}
        self._vrails_gated_by: Dict[TNetId, List[TNetId]] = {}
        for device in netlist.sleep_devices:
            for near, far in ((device.source, device.drain), (device.drain, device.source)):
                if near in self._sleep_of and netlist.kind_of(far).is_rail:
                    self._sleep_of[near].append((device, far))
                    self._vrails_gated_by.setdefault(device.gate, []).append(near)

        self._now_s: TSeconds = 0.0
        self._pending: List[_HeapEntry] = []
        self._scheduled: Dict[TNetId, Tuple[int, LogicLevel]] = {}
        self._seq = 0
        self._powered_up = False
        self._last_definite: Dict[TNetId, LogicLevel] = {}
        self._last_change: Dict[TNetId, TSeconds] = {}
        self._events: List[Event] = []
        self._trace = PowerTrace()

    @property
    def netlist(self) -> Netlist:
        return self._netlist

    @property
    def params(self) -> ProcessParams:
        return self._params

    @property
    def now_s(self) -> TSeconds:
        return self._now_s

    @property
    def value_of(self) -> Mapping[TNetId, LogicLevel]:
        return MappingProxyType(self._values)

    @property
    def pending_count(self) -> int:
        return len(self._scheduled)

    @property
    def pending(self) -> List[Event]:
        """Pending events in the order they will be applied."""
        live = [entry for entry in self._pending if self._scheduled.get(entry[2], (None,))[0] == entry[1]]
        return [Event(time, net, value) for time, _, net, value in sorted(live)]

    @property
    def trace(self) -> PowerTrace:
        return self._trace

    @property
    def events(self) -> List[Event]:
        """Every applied event so far, when recording is enabled."""
        return list(self._events)

    def value(self, net: TNetId) -> LogicLevel:
        try:
            return self._values[net]
        except KeyError:
            raise InvalidArgumentException(f"Net {net!r} is not declared") from None

    def apply_inputs(self, assignments: Mapping[TNetId, LogicLevel], at_s: TSeconds) -> None:
        """Schedule input or clock port levels at `at_s`.

        Raises:
            InvalidArgumentException: a net is not an input or clock port, or `at_s` is in the past.
        """
        if at_s < self._now_s:
            raise InvalidArgumentException(
                f"cannot apply inputs at {at_s:.5e} s, simulation time is {self._now_s:.5e} s"
            )
        for net, level in assignments.items():
            if net not in self._values:
                raise InvalidArgumentException(f"Net {net!r} is not declared")
            if not self._netlist.kind_of(net).is_driven_port:
                raise InvalidArgumentException(f"Net {net!r} is not an input or clock port")
            if not isinstance(level, LogicLevel):
                raise InvalidArgumentException(f"level for {net!r} must be a LogicLevel, got {level!r}")
        for net, level in assignments.items():
            self._schedule(net, level, at_s, force=True)
        self._logger.log(logs.TRACE, "applied %d input(s) at %.5e s", len(assignments), at_s)

    def settle(self, until_s: Optional[TSeconds] = None) -> List[Event]:
        """Process pending events until the circuit is quiet, or up to `until_s`.

        Returns:
            List[Event]: the events applied by this call, in time order.

        Raises:
            OscillationException: more than the oscillation bound of events were processed.
        """
        applied: List[Event] = []
        processed = 0
        if not self._powered_up:
            self._powered_up = True
            self._propagate([net.id for net in self._netlist.nets], self._now_s, power_up=True)

        while self._pending:
            time_s = self._pending[0][0]
            if until_s is not None and time_s > until_s:
                break
            batch: List[Tuple[TNetId, LogicLevel]] = []
            while self._pending and self._pending[0][0] == time_s:
                _, seq, net, value = heapq.heappop(self._pending)
                if self._scheduled.get(net, (None,))[0] == seq:
                    del self._scheduled[net]
                    batch.append((net, value))
            if not batch:
                continue
            self._now_s = max(self._now_s, time_s)
            processed += len(batch)
            if processed > self._oscillation_bound:
                raise OscillationException(
                    f"{processed} events processed by t={time_s:.5e} s (bound {self._oscillation_bound})"
                )
            changed: List[TNetId] = []
            for net, value in batch:
                if self._values[net] is not value:
                    applied.append(self._apply(net, value, time_s))
                    changed.append(net)
            self._propagate(changed, time_s)

        if until_s is not None and until_s > self._now_s:
            self._now_s = until_s
        self._logger.log(logs.TRACE, "settle applied %d event(s), now %.5e s", len(applied), self._now_s)
        return applied

    def read_outputs(self) -> Dict[TNetId, LogicLevel]:
        return {port: self._values[port] for port in self._netlist.output_ports}

    def measure_delay(self, from_s: TSeconds) -> TSeconds:
        """Latest output transition at or after `from_s`, relative to `from_s`; 0 when no output moved."""
        latest = 0.0
        for port in self._netlist.output_ports:
            changed_at = self._last_change.get(port)
            if changed_at is not None and changed_at >= from_s:
                latest = max(latest, changed_at - from_s)
        return latest

    def last_change(self, net: TNetId) -> Optional[TSeconds]:
        return self._last_change.get(net)

    def _schedule(self, net: TNetId, value: LogicLevel, time_s: TSeconds, force: bool = False) -> None:
        current = self._scheduled.get(net)
        if current is not None and current[1] is value and not force:
            return
        self._seq += 1
        self._scheduled[net] = (self._seq, value)
        heapq.heappush(self._pending, (time_s, self._seq, net, value))

    def _cancel(self, net: TNetId) -> None:
        self._scheduled.pop(net, None)

    def _apply(self, net: TNetId, value: LogicLevel, time_s: TSeconds) -> Event:
        old = self._values[net]
        self._values[net] = value
        self._last_change[net] = time_s
        kind = self._netlist.kind_of(net)
        if kind.is_virtual_rail:
            if value.is_definite and not old.is_definite:
                self._trace.record_switch(time_s, net, self._wake_cap_F)
        elif value.is_definite:
            last = self._last_definite.get(net)
            # input and clock ports are charged by their external drivers
            if last is not None and last is not value and not kind.is_driven_port:
                self._trace.record_switch(time_s, net, self._load_cap[net])
            self._last_definite[net] = value
        event = Event(time_s, net, value)
        if self._record_events:
            self._events.append(event)
        return event

    def _state(self, device: Transistor) -> Optional[bool]:
        return conduction(device, self._values[device.gate])

    def _vrail_value(self, vrail: TNetId) -> LogicLevel:
        uncertain = False
        for device, rail in self._sleep_of[vrail]:
            state = self._state(device)
            if state is True:
                return self._values[rail]
            uncertain = uncertain or state is None
        return LogicLevel.LX if uncertain else LogicLevel.LZ

    def _propagate(self, changed: Iterable[TNetId], time_s: TSeconds, power_up: bool = False) -> None:
        seeds: Dict[TNetId, None] = {}
        for net in changed:
            if power_up:
                seeds[net] = None
            if self._is_source[net]:
                for _, other in self._channel[net]:
                    seeds[other] = None
            for device in self._netlist.devices_gated_by.get(net, ()):
                seeds[device.source] = None
                seeds[device.drain] = None
            for vrail in self._vrails_gated_by.get(net, ()):
                target = self._vrail_value(vrail)
                if target is self._values[vrail]:
                    self._cancel(vrail)
                else:
                    self._schedule(vrail, target, time_s)
        if power_up:
            for vrail in self._sleep_of:
                target = self._vrail_value(vrail)
                if target is not self._values[vrail]:
                    self._schedule(vrail, target, time_s)

        done: Set[TNetId] = set()
        for seed in seeds:
            if seed in done or self._is_source[seed]:
                continue
            component = self._component(seed)
            done.update(component)
            self._evaluate(component, time_s)

    def _component(self, seed: TNetId) -> List[TNetId]:
        members: Dict[TNetId, None] = {seed: None}
        queue: Deque[TNetId] = deque([seed])
        while queue:
            net = queue.popleft()
            for device, other in self._channel[net]:
                if other in members or self._is_source[other] or self._state(device) is False:
                    continue
                members[other] = None
                queue.append(other)
        return list(members)

    def _reach(self, members: Set[TNetId], component: List[TNetId], level: LogicLevel, possible: bool) -> Set[TNetId]:
        """Members connected to a source at `level` through ON devices (or ON and uncertain ones)."""

        def passes(device: Transistor) -> bool:
            state = self._state(device)
            return state is True or (possible and state is None)

        reached: Set[TNetId] = set()
        queue: Deque[TNetId] = deque()
        for net in component:
            for device, other in self._channel[net]:
                if self._is_source[other] and self._values[other] is level and passes(device):
                    reached.add(net)
                    queue.append(net)
                    break
        while queue:
            net = queue.popleft()
            for device, other in self._channel[net]:
                if other in members and other not in reached and passes(device):
                    reached.add(other)
                    queue.append(other)
        return reached

    def _evaluate(self, component: List[TNetId], time_s: TSeconds) -> None:
        members = set(component)
        levels = (LogicLevel.L1, LogicLevel.L0, LogicLevel.LX)
        definite = {level: self._reach(members, component, level, possible=False) for level in levels}
        possible = {level: self._reach(members, component, level, possible=True) for level in levels}

        resolved: Dict[TNetId, LogicLevel] = {}
        for net in component:
            driven = [level for level in levels if net in definite[level]]
            if len(driven) == 1:
                resolved[net] = driven[0]
            elif driven:
                resolved[net] = LogicLevel.LX
            else:
                candidates = {level for level in levels if net in possible[level]}
                if not candidates or candidates == {self._values[net]}:
                    resolved[net] = self._values[net]
                else:
                    resolved[net] = LogicLevel.LX

        trees: Dict[LogicLevel, Dict[TNetId, Tuple[Transistor, TNetId]]] = {}
        for net in component:
            value = resolved[net]
            if value is self._values[net]:
                self._cancel(net)
                continue
            if value.is_definite:
                if value not in trees:
                    trees[value] = self._drive_tree(component, members, resolved, value)
                delay = self._path_delay(net, trees[value])
            else:
                delay = self._single_stage_delay(net)
            self._schedule(net, value, time_s + delay)

    def _drive_tree(
        self,
        component: List[TNetId],
        members: Set[TNetId],
        resolved: Mapping[TNetId, LogicLevel],
        value: LogicLevel,
    ) -> Dict[TNetId, Tuple[Transistor, TNetId]]:
        """Fewest-device ON paths from everything already at `value`: parent device and net per member."""
        parent: Dict[TNetId, Tuple[Transistor, TNetId]] = {}
        seen: Set[TNetId] = set()
        queue: Deque[TNetId] = deque()
        for net in component:
            if resolved[net] is value and self._values[net] is value:
                seen.add(net)
                queue.append(net)
        for net in component:
            if net in seen:
                continue
            for device, other in self._channel[net]:
                if self._is_source[other] and self._values[other] is value and self._state(device) is True:
                    parent[net] = (device, other)
                    seen.add(net)
                    queue.append(net)
                    break
        while queue:
            net = queue.popleft()
            for device, other in self._channel[net]:
                if other in members and other not in seen and self._state(device) is True:
                    parent[other] = (device, net)
                    seen.add(other)
                    queue.append(other)
        return parent

    def _path_delay(self, target: TNetId, parent: Mapping[TNetId, Tuple[Transistor, TNetId]]) -> TSeconds:
        if target not in parent:
            return self._single_stage_delay(target)
        hops: List[Tuple[Transistor, TNetId]] = []
        net = target
        while net in parent:
            device, previous = parent[net]
            hops.append((device, net))
            net = previous
        hops.reverse()

        pp = self._params
        total = 0.0
        segment: List[Transistor] = []
        for index, (device, reached) in enumerate(hops):
            segment.append(device)
            last = index == len(hops) - 1
            # a stage ends at a loaded net or where the path enters another gate
            if last or reached in self._loaded or hops[index + 1][0].gate_instance != device.gate_instance:
                drive = pp.k_drive * min(d.geometry.width_m for d in segment) / pp.base_width_m
                vth = max(pp.vth_of(d.vth_class) for d in segment)
                total += gate_delay(self._load_cap[reached], pp.vdd_V, drive, vth, pp.alpha)
                segment = []
        return total

    def _single_stage_delay(self, net: TNetId) -> TSeconds:
        pp = self._params
        return gate_delay(self._load_cap[net], pp.vdd_V, pp.k_drive, pp.vth_low_V, pp.alpha)


def init(
    netlist: Netlist,
    params: ProcessParams,
    oscillation_bound: int = DEFAULT_OSCILLATION_BOUND,
    wake_cap_F: TFarads = 0.0,
) -> SimState:
    """New simulation with rails pinned, every other net LX and nothing pending."""
    return SimState(netlist, params, oscillation_bound=oscillation_bound, wake_cap_F=wake_cap_F)
