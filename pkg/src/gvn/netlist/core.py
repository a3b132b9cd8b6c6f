from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from gvn.errors import InvalidArgumentException
from gvn.internal._utilities import (
    _validate_device_name,
    _validate_net_id,
    _validate_non_negative,
    _validate_positive,
)
from gvn.typing import TClusterTag, TDeviceName, TGateInstance, TNetId

HIERARCHY_SEPARATOR = "."
PASS_GATE_PREFIX = "tg"


class DeviceType(enum.Enum):
    NMOS = "NMOS"
    PMOS = "PMOS"


class VthClass(enum.Enum):
    """Threshold-voltage class of a device; each class maps to one voltage in `ProcessParams`."""

    LOW = "LOW"
    HIGH = "HIGH"


class NetKind(enum.Enum):
    SIGNAL = "signal"
    RAIL_VDD = "vdd"
    RAIL_GND = "gnd"
    VIRTUAL_VDD = "vvdd"
    VIRTUAL_GND = "vgnd"
    INPUT = "input"
    OUTPUT = "output"
    CLOCK = "clock"

    @property
    def is_rail(self) -> bool:
        return self in (NetKind.RAIL_VDD, NetKind.RAIL_GND)

    @property
    def is_virtual_rail(self) -> bool:
        return self in (NetKind.VIRTUAL_VDD, NetKind.VIRTUAL_GND)

    @property
    def is_driven_port(self) -> bool:
        """Input and clock nets are driven by the stimulus, never by the circuit."""
        return self in (NetKind.INPUT, NetKind.CLOCK)


class PortDirection(enum.Enum):
    IN = "in"
    OUT = "out"
    CLK = "clk"

    @property
    def net_kind(self) -> NetKind:
        return {PortDirection.IN: NetKind.INPUT, PortDirection.OUT: NetKind.OUTPUT, PortDirection.CLK: NetKind.CLOCK}[
            self
        ]


@dataclass(frozen=True)
class ChannelGeometry:
    """Effective channel width and length, in meters."""

    width_m: float
    length_m: float

    def __post_init__(self) -> None:
        _validate_positive(self.width_m, "width_m")
        _validate_positive(self.length_m, "length_m")

    @property
    def aspect_ratio(self) -> float:
        """W_eff / L_eff."""
        return self.width_m / self.length_m

    def scaled(self, width_factor: float = 1.0, length_factor: float = 1.0) -> ChannelGeometry:
        return ChannelGeometry(self.width_m * width_factor, self.length_m * length_factor)


@dataclass(frozen=True)
class Transistor:
    name: TDeviceName
    device_type: DeviceType
    vth_class: VthClass
    geometry: ChannelGeometry
    gate: TNetId
    source: TNetId
    drain: TNetId
    is_sleep: bool = False
    load_cap_F: float = 0.0
    """Gate capacitance this device adds to the net driving its gate."""

    def __post_init__(self) -> None:
        _validate_device_name(self.name)
        for terminal in (self.gate, self.source, self.drain):
            _validate_net_id(terminal)
        _validate_non_negative(self.load_cap_F, "load_cap_F")

    @property
    def gate_instance(self) -> TGateInstance:
        """The logic gate this device belongs to: its name without the last component."""
        head, sep, _ = self.name.rpartition(HIERARCHY_SEPARATOR)
        return head if sep else self.name

    @property
    def is_pass_device(self) -> bool:
        leaf = self.gate_instance.rpartition(HIERARCHY_SEPARATOR)[2]
        return leaf.startswith(PASS_GATE_PREFIX)

    @property
    def terminals(self) -> Tuple[TNetId, TNetId, TNetId]:
        return self.gate, self.source, self.drain

    def with_vth_class(self, vth_class: VthClass) -> Transistor:
        return replace(self, vth_class=vth_class)

    def with_geometry(self, geometry: ChannelGeometry) -> Transistor:
        return replace(self, geometry=geometry)


@dataclass(frozen=True)
class Net:
    id: TNetId
    kind: NetKind = NetKind.SIGNAL

    def __post_init__(self) -> None:
        _validate_net_id(self.id)


@dataclass(frozen=True)
class Netlist:
    """A flat transistor-level circuit.

    Instances are immutable and safe to share between concurrent simulations.
    Structural rules are checked by `gvn.netlist.validate`, not here, so that
    broken netlists can still be built and reported on.
    """

    devices: Tuple[Transistor, ...] = ()
    nets: Tuple[Net, ...] = ()
    input_ports: Tuple[TNetId, ...] = ()
    output_ports: Tuple[TNetId, ...] = ()
    clock_ports: Tuple[TNetId, ...] = ()
    cluster_of: Mapping[TNetId, TClusterTag] = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "cluster_of", MappingProxyType(dict(self.cluster_of)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Netlist):
            return NotImplemented
        return (
            self.devices == other.devices
            and self.nets == other.nets
            and self.input_ports == other.input_ports
            and self.output_ports == other.output_ports
            and self.clock_ports == other.clock_ports
            and dict(self.cluster_of) == dict(other.cluster_of)
        )

    def __hash__(self) -> int:
        return hash((self.devices, self.nets, self.input_ports, self.output_ports, self.clock_ports))

    @cached_property
    def net_index(self) -> Dict[TNetId, Net]:
        return {net.id: net for net in self.nets}

    @cached_property
    def device_index(self) -> Dict[TDeviceName, Transistor]:
        return {device.name: device for device in self.devices}

    @cached_property
    def devices_gated_by(self) -> Dict[TNetId, Tuple[Transistor, ...]]:
        gated: Dict[TNetId, List[Transistor]] = {}
        for device in self.devices:
            gated.setdefault(device.gate, []).append(device)
        return {net: tuple(devices) for net, devices in gated.items()}

    @cached_property
    def devices_on_channel(self) -> Dict[TNetId, Tuple[Transistor, ...]]:
        """Devices whose source or drain touches each net."""
        touching: Dict[TNetId, List[Transistor]] = {}
        for device in self.devices:
            touching.setdefault(device.source, []).append(device)
            if device.drain != device.source:
                touching.setdefault(device.drain, []).append(device)
        return {net: tuple(devices) for net, devices in touching.items()}

    def net(self, net_id: TNetId) -> Net:
        try:
            return self.net_index[net_id]
        except KeyError:
            raise InvalidArgumentException(f"Net {net_id!r} is not declared") from None

    def kind_of(self, net_id: TNetId) -> NetKind:
        return self.net(net_id).kind

    def _nets_of_kind(self, kind: NetKind) -> List[TNetId]:
        return [net.id for net in self.nets if net.kind is kind]

    @property
    def rail_vdd(self) -> Optional[TNetId]:
        found = self._nets_of_kind(NetKind.RAIL_VDD)
        return found[0] if found else None

    @property
    def rail_gnd(self) -> Optional[TNetId]:
        found = self._nets_of_kind(NetKind.RAIL_GND)
        return found[0] if found else None

    @property
    def virtual_rails(self) -> List[TNetId]:
        return [net.id for net in self.nets if net.kind.is_virtual_rail]

    @property
    def ports(self) -> Tuple[TNetId, ...]:
        return self.input_ports + self.output_ports + self.clock_ports

    @property
    def sleep_devices(self) -> List[Transistor]:
        return [device for device in self.devices if device.is_sleep]

    def load_capacitance(self, net_id: TNetId, wire_cap_F: float) -> float:
        """C_L of a net: gate loads of every device it drives plus one wire capacitance."""
        return wire_cap_F + sum(device.load_cap_F for device in self.devices_gated_by.get(net_id, ()))

    def gate_instances(self) -> List[TGateInstance]:
        """Gate instances in first-seen device order."""
        return list(dict.fromkeys(device.gate_instance for device in self.devices))

    def nets_in_cluster(self, tag: TClusterTag) -> List[TNetId]:
        return [net_id for net_id, net_tag in self.cluster_of.items() if net_tag == tag]

    def cluster_tags(self) -> List[TClusterTag]:
        return sorted(set(self.cluster_of.values()))

    def with_devices(self, devices: Iterable[Transistor]) -> Netlist:
        return replace(self, devices=tuple(devices), cluster_of=dict(self.cluster_of))

    def same_structure(self, other: Netlist, rel_tol: float = 1e-5) -> bool:
        """Equality that tolerates real-number rounding (six significant digits survive a text round trip)."""
        if (
            self.nets != other.nets
            or self.input_ports != other.input_ports
            or self.output_ports != other.output_ports
            or self.clock_ports != other.clock_ports
            or dict(self.cluster_of) != dict(other.cluster_of)
            or len(self.devices) != len(other.devices)
        ):
            return False
        for mine, theirs in zip(self.devices, other.devices):
            if replace(mine, geometry=theirs.geometry, load_cap_F=theirs.load_cap_F) != theirs:
                return False
            pairs = (
                (mine.geometry.width_m, theirs.geometry.width_m),
                (mine.geometry.length_m, theirs.geometry.length_m),
                (mine.load_cap_F, theirs.load_cap_F),
            )
            if not all(math.isclose(a, b, rel_tol=rel_tol, abs_tol=0.0) for a, b in pairs):
                return False
        return True

    def summary(self) -> str:
        sleep = len(self.sleep_devices)
        return (
            f"{len(self.devices)} devices ({sleep} sleep), {len(self.nets)} nets, "
            f"{len(self.input_ports)} in / {len(self.output_ports)} out / {len(self.clock_ports)} clk ports"
        )


class NetlistBuilder:
    """Mutable accumulator for constructing a `Netlist` in declaration order."""

    def __init__(self) -> None:
        self._nets: Dict[TNetId, Net] = {}
        self._devices: Dict[TDeviceName, Transistor] = {}
        self._ports: Dict[PortDirection, List[TNetId]] = {direction: [] for direction in PortDirection}
        self._clusters: Dict[TNetId, TClusterTag] = {}

    def has_net(self, net_id: TNetId) -> bool:
        return net_id in self._nets

    def has_device(self, name: TDeviceName) -> bool:
        return name in self._devices

    def kind_of(self, net_id: TNetId) -> NetKind:
        return self._nets[net_id].kind

    def add_net(self, net_id: TNetId, kind: NetKind = NetKind.SIGNAL) -> TNetId:
        if net_id in self._nets:
            raise InvalidArgumentException(f"Net {net_id!r} is already declared")
        self._nets[net_id] = Net(net_id, kind)
        return net_id

    def ensure_net(self, net_id: TNetId, kind: NetKind = NetKind.SIGNAL) -> TNetId:
        if net_id not in self._nets:
            self._nets[net_id] = Net(net_id, kind)
        return net_id

    def add_device(self, device: Transistor) -> Transistor:
        if device.name in self._devices:
            raise InvalidArgumentException(f"Device {device.name!r} is already declared")
        self._devices[device.name] = device
        return device

    def add_port(self, direction: PortDirection, net_id: TNetId) -> None:
        self._ports[direction].append(net_id)

    def set_cluster(self, net_id: TNetId, tag: TClusterTag) -> None:
        self._clusters[net_id] = tag

    def build(self) -> Netlist:
        return Netlist(
            devices=tuple(self._devices.values()),
            nets=tuple(self._nets.values()),
            input_ports=tuple(self._ports[PortDirection.IN]),
            output_ports=tuple(self._ports[PortDirection.OUT]),
            clock_ports=tuple(self._ports[PortDirection.CLK]),
            cluster_of=dict(self._clusters),
        )

    @staticmethod
    def from_netlist(netlist: Netlist) -> NetlistBuilder:
        builder = NetlistBuilder()
        for net in netlist.nets:
            builder._nets[net.id] = net
        for device in netlist.devices:
            builder._devices[device.name] = device
        builder._ports[PortDirection.IN].extend(netlist.input_ports)
        builder._ports[PortDirection.OUT].extend(netlist.output_ports)
        builder._ports[PortDirection.CLK].extend(netlist.clock_ports)
        builder._clusters.update(netlist.cluster_of)
        return builder
