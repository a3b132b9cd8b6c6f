from __future__ import annotations

import enum
from dataclasses import replace
from typing import Callable, Dict, List, Mapping, NamedTuple, Optional, Tuple

from gvn import logs
from gvn.netlist import (
    HIERARCHY_SEPARATOR,
    DeviceType,
    NetKind,
    Netlist,
    NetlistBuilder,
    PortDirection,
    Transistor,
    VthClass,
    instantiate,
)
from gvn.sim.levels import LogicLevel
from gvn.typing import TBcdResult, TBcdVector, TClusterTag, TNetId

from .cells import GND, RCA_WIDTH, VDD, CellBuilder, bits, carry_detect, rca4
from .policies import BASE_GEOMETRY, DEFAULT_LOAD_CAP_F, SizingPolicy, VthAssignment
from .sizing import apply_channel_sizing

STAGE1 = "s1"
CARRY_DETECT = "cd"
STAGE2 = "s2"

A_PORTS = [f"a{i}" for i in range(RCA_WIDTH)]
B_PORTS = [f"b{i}" for i in range(RCA_WIDTH)]
DIGIT_PORTS = [f"digit{i}" for i in range(RCA_WIDTH)]
CIN_PORT = "cin"
CARRY_PORT = "carry"
CLOCK_PORTS = ("clk1", "clk2")


class _Cluster(NamedTuple):
    instances: Tuple[str, ...]
    virtual_ground: TNetId
    clock: TNetId
    footer: str


CLUSTERS: Dict[TClusterTag, _Cluster] = {
    "1": _Cluster((STAGE1,), "vgnd1", "clk1", "ft1"),
    "2": _Cluster((CARRY_DETECT, STAGE2), "vgnd2", "clk2", "ft2"),
}


class Variant(enum.Enum):
    CONVENTIONAL = "conventional"
    DVT = "dvt"
    GATED = "gated"

    @property
    def display_name(self) -> str:
        return {"conventional": "Conventional", "dvt": "Dvt", "gated": "Gated"}[self.value]


def bcd_conventional() -> Netlist:
    """Single-V_th BCD digit adder: binary stage, carry detector, +6 correction stage.

    Ports a0..a3, b0..b3, cin, digit0..digit3, carry; 146 devices.
    """
    top = CellBuilder()
    top.inputs(*A_PORTS, *B_PORTS, CIN_PORT)
    top.outputs(*DIGIT_PORTS, CARRY_PORT)
    netlist = top.build()

    z = [f"z{i}" for i in range(RCA_WIDTH)]
    stage1: Dict[str, TNetId] = {f"a{i}": A_PORTS[i] for i in range(RCA_WIDTH)}
    stage1.update({f"b{i}": B_PORTS[i] for i in range(RCA_WIDTH)})
    stage1.update({f"s{i}": z[i] for i in range(RCA_WIDTH)})
    stage1.update({"cin": CIN_PORT, "cout": "k"})
    netlist = instantiate(netlist, rca4(), stage1, STAGE1)

    netlist = instantiate(
        netlist, carry_detect(), {"k": "k", "z3": z[3], "z2": z[2], "z1": z[1], "c": CARRY_PORT}, CARRY_DETECT
    )

    # addend (b3, b2, b1, b0) = (0, C, C, 0): +6 exactly when the correction fires
    stage2: Dict[str, TNetId] = {f"a{i}": z[i] for i in range(RCA_WIDTH)}
    stage2.update({"b0": GND, "b1": CARRY_PORT, "b2": CARRY_PORT, "b3": GND})
    stage2.update({f"s{i}": DIGIT_PORTS[i] for i in range(RCA_WIDTH)})
    stage2.update({"cin": GND, "cinb": VDD, "cout": "k2"})
    netlist = instantiate(netlist, rca4(carry_in_complement_port=True), stage2, STAGE2)

    return VthAssignment.all_low().apply(netlist)


def bcd_dvt() -> Netlist:
    """`bcd_conventional` with low V_th kept only on the longest carry chain."""
    return VthAssignment.critical_path_low().apply(bcd_conventional())


def bcd_gated(sizing: Optional[SizingPolicy] = None) -> Netlist:
    """`bcd_dvt` split into two clock-gated clusters with high-V_th NMOS footers.

    Cluster 1 is the binary stage on `vgnd1`, footed by a device gated by
    clk1. Cluster 2 is the carry detector and correction stage on `vgnd2`,
    gated by clk2. Only NMOS pull-down channels move onto the virtual ground;
    gate ties and constant levels passed through transmission gates or the
    XOR stay on the real rail. Each signal net is tagged with the cluster of
    the first device whose channel touches it.
    """
    sizing = sizing or SizingPolicy()
    dvt = bcd_dvt()
    tag_of_instance = {instance: tag for tag, cluster in CLUSTERS.items() for instance in cluster.instances}

    def cluster_of(device: Transistor) -> TClusterTag:
        return tag_of_instance[device.name.split(HIERARCHY_SEPARATOR, 1)[0]]

    builder = NetlistBuilder.from_netlist(dvt)
    for tag, cluster in CLUSTERS.items():
        builder.add_net(cluster.virtual_ground, NetKind.VIRTUAL_GND)
        builder.add_net(cluster.clock, NetKind.CLOCK)
        builder.add_port(PortDirection.CLK, cluster.clock)
        builder.set_cluster(cluster.virtual_ground, tag)

    devices: List[Transistor] = []
    tags: Dict[TNetId, TClusterTag] = {}
    for device in dvt.devices:
        tag = cluster_of(device)
        vgnd = CLUSTERS[tag].virtual_ground
        moved = device
        if device.device_type is DeviceType.NMOS and not device.is_pass_device:
            moved = replace(
                device,
                source=vgnd if device.source == GND else device.source,
                drain=vgnd if device.drain == GND else device.drain,
            )
        devices.append(moved)
        for net in (device.source, device.drain):
            kind = dvt.kind_of(net)
            if not (kind.is_rail or kind is NetKind.INPUT):
                tags.setdefault(net, tag)
    for net, tag in tags.items():
        builder.set_cluster(net, tag)

    for cluster in CLUSTERS.values():
        devices.append(
            Transistor(
                name=f"{cluster.footer}{HIERARCHY_SEPARATOR}m",
                device_type=DeviceType.NMOS,
                vth_class=VthClass.HIGH,
                geometry=BASE_GEOMETRY,
                gate=cluster.clock,
                source=GND,
                drain=cluster.virtual_ground,
                is_sleep=True,
                load_cap_F=DEFAULT_LOAD_CAP_F,
            )
        )

    gated = apply_channel_sizing(builder.build().with_devices(devices), sizing)
    logs.debug("generated gated BCD adder: %s", gated.summary())
    return gated


GENERATORS: Dict[Variant, Callable[[], Netlist]] = {
    Variant.CONVENTIONAL: bcd_conventional,
    Variant.DVT: bcd_dvt,
    Variant.GATED: bcd_gated,
}


def generate(variant: Variant) -> Netlist:
    return GENERATORS[variant]()


def exhaustive_vectors() -> List[TBcdVector]:
    """All 200 legal (a, b, cin) triples: a outermost, cin innermost."""
    return [(a, b, cin) for a in range(10) for b in range(10) for cin in (0, 1)]


def vector_assignment(vector: TBcdVector) -> Dict[TNetId, LogicLevel]:
    """Input port levels for one (a, b, cin) triple."""
    a, b, cin = vector
    levels = {net: LogicLevel.of_bit(bit) for net, bit in zip(A_PORTS, bits(a))}
    levels.update({net: LogicLevel.of_bit(bit) for net, bit in zip(B_PORTS, bits(b))})
    levels[CIN_PORT] = LogicLevel.of_bit(cin)
    return levels


def read_result(outputs: Mapping[TNetId, LogicLevel]) -> Optional[TBcdResult]:
    """(carry, digit) from output levels, or None while any output is not definite."""
    levels = [outputs[net] for net in DIGIT_PORTS] + [outputs[CARRY_PORT]]
    if not all(level.is_definite for level in levels):
        return None
    digit = sum(level.bit << i for i, level in enumerate(levels[:RCA_WIDTH]))
    return levels[RCA_WIDTH].bit, digit
