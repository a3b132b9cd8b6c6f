"""Transistor-level cells: static gates, the 16T full adder, the ripple-carry adder and the BCD carry detector.

Every device is named `<gate>.<device>`; cells share the rails `vdd` and `gnd`.
"""
from __future__ import annotations

from typing import Dict, List, Optional

from gvn.netlist import (
    ChannelGeometry,
    DeviceType,
    NetKind,
    Netlist,
    NetlistBuilder,
    PortDirection,
    Transistor,
    VthClass,
    instantiate,
)
from gvn.typing import TNetId

from .policies import BASE_GEOMETRY, DEFAULT_LOAD_CAP_F, VthAssignment

VDD = "vdd"
GND = "gnd"
RCA_WIDTH = 4


class CellBuilder:
    """`NetlistBuilder` with gate-level helpers. Devices are created low-V_th; policies reassign later."""

    def __init__(self, geometry: ChannelGeometry = BASE_GEOMETRY, load_cap_F: float = DEFAULT_LOAD_CAP_F):
        self.builder = NetlistBuilder()
        self.geometry = geometry
        self.load_cap_F = load_cap_F
        self.builder.add_net(VDD, NetKind.RAIL_VDD)
        self.builder.add_net(GND, NetKind.RAIL_GND)

    def inputs(self, *nets: TNetId) -> None:
        for net in nets:
            self.builder.add_net(net, NetKind.INPUT)
            self.builder.add_port(PortDirection.IN, net)

    def outputs(self, *nets: TNetId) -> None:
        for net in nets:
            self.builder.add_net(net, NetKind.OUTPUT)
            self.builder.add_port(PortDirection.OUT, net)

    def device(self, name: str, device_type: DeviceType, gate: TNetId, source: TNetId, drain: TNetId) -> None:
        for net in (gate, source, drain):
            self.builder.ensure_net(net)
        self.builder.add_device(
            Transistor(
                name=name,
                device_type=device_type,
                vth_class=VthClass.LOW,
                geometry=self.geometry,
                gate=gate,
                source=source,
                drain=drain,
                load_cap_F=self.load_cap_F,
            )
        )

    def nmos(self, name: str, gate: TNetId, source: TNetId, drain: TNetId) -> None:
        self.device(name, DeviceType.NMOS, gate, source, drain)

    def pmos(self, name: str, gate: TNetId, source: TNetId, drain: TNetId) -> None:
        self.device(name, DeviceType.PMOS, gate, source, drain)

    def inverter(self, gate: str, a: TNetId, y: TNetId) -> None:
        self.pmos(f"{gate}.p", a, VDD, y)
        self.nmos(f"{gate}.n", a, GND, y)

    def nand2(self, gate: str, a: TNetId, b: TNetId, y: TNetId) -> None:
        mid = f"{gate}_x"
        self.pmos(f"{gate}.pa", a, VDD, y)
        self.pmos(f"{gate}.pb", b, VDD, y)
        self.nmos(f"{gate}.na", a, mid, y)
        self.nmos(f"{gate}.nb", b, GND, mid)

    def nor3(self, gate: str, a: TNetId, b: TNetId, c: TNetId, y: TNetId) -> None:
        upper, lower = f"{gate}_x1", f"{gate}_x2"
        self.pmos(f"{gate}.pa", a, VDD, upper)
        self.pmos(f"{gate}.pb", b, upper, lower)
        self.pmos(f"{gate}.pc", c, lower, y)
        self.nmos(f"{gate}.na", a, GND, y)
        self.nmos(f"{gate}.nb", b, GND, y)
        self.nmos(f"{gate}.nc", c, GND, y)

    def mux2(self, gate: str, select: TNetId, select_b: TNetId, when_high: TNetId, when_low: TNetId, y: TNetId) -> None:
        """Two transmission gates: `y` follows `when_high` while `select` is 1, `when_low` otherwise."""
        self.nmos(f"{gate}.n1", select, when_high, y)
        self.pmos(f"{gate}.p1", select_b, when_high, y)
        self.nmos(f"{gate}.n2", select_b, when_low, y)
        self.pmos(f"{gate}.p2", select, when_low, y)

    def build(self) -> Netlist:
        return self.builder.build()


def full_adder_16t(
    assign: Optional[VthAssignment] = None,
    external_carry_complement: bool = False,
    geometry: ChannelGeometry = BASE_GEOMETRY,
    load_cap_F: float = DEFAULT_LOAD_CAP_F,
) -> Netlist:
    """16-transistor transmission-gate full adder.

    A 4T pass XOR gives H = a xor b; inverters give H' and cin'. The sum mux
    passes cin' when H is 1 and cin otherwise; the carry mux passes cin when
    H is 1 and a otherwise.

    Args:
        assign (VthAssignment): threshold policy; all low when omitted.
        external_carry_complement (bool): take cin' from a `cinb` port instead
            of the local inverter (14 devices). Used where cin is a constant.
    """
    cell = CellBuilder(geometry, load_cap_F)
    cell.inputs("a", "b", "cin")
    if external_carry_complement:
        cell.inputs("cinb")
    cell.outputs("sum", "cout")

    cell.pmos("xor.m1", "b", "a", "h")
    cell.pmos("xor.m2", "a", "b", "h")
    cell.nmos("xor.m3", "a", "m", "h")
    cell.nmos("xor.m4", "b", GND, "m")
    cell.inverter("hinv", "h", "hb")
    if not external_carry_complement:
        cell.inverter("cinv", "cin", "cinb")
    cell.mux2("tgs", "h", "hb", "cinb", "cin", "sum")
    cell.mux2("tgc", "h", "hb", "cin", "a", "cout")

    netlist = cell.build()
    return (assign or VthAssignment.all_low()).apply(netlist)


def rca4(
    assign: Optional[VthAssignment] = None,
    carry_in_complement_port: bool = False,
    geometry: ChannelGeometry = BASE_GEOMETRY,
    load_cap_F: float = DEFAULT_LOAD_CAP_F,
) -> Netlist:
    """Four chained full adders: ports a0..a3, b0..b3, cin, s0..s3, cout.

    With `carry_in_complement_port`, the first cell takes cin' from a `cinb`
    port (62 devices instead of 64).
    """
    top = CellBuilder(geometry, load_cap_F)
    top.inputs(*(f"a{i}" for i in range(RCA_WIDTH)), *(f"b{i}" for i in range(RCA_WIDTH)), "cin")
    if carry_in_complement_port:
        top.inputs("cinb")
    top.outputs(*(f"s{i}" for i in range(RCA_WIDTH)), "cout")
    netlist = top.build()

    plain = full_adder_16t(geometry=geometry, load_cap_F=load_cap_F)
    for i in range(RCA_WIDTH):
        binding: Dict[str, TNetId] = {
            "a": f"a{i}",
            "b": f"b{i}",
            "cin": "cin" if i == 0 else f"c{i}",
            "sum": f"s{i}",
            "cout": "cout" if i == RCA_WIDTH - 1 else f"c{i + 1}",
        }
        cell = plain
        if i == 0 and carry_in_complement_port:
            cell = full_adder_16t(external_carry_complement=True, geometry=geometry, load_cap_F=load_cap_F)
            binding["cinb"] = "cinb"
        netlist = instantiate(netlist, cell, binding, f"fa{i}")
    return (assign or VthAssignment.all_low()).apply(netlist)


def carry_detect(geometry: ChannelGeometry = BASE_GEOMETRY, load_cap_F: float = DEFAULT_LOAD_CAP_F) -> Netlist:
    """BCD correction flag c = k + z3*z2 + z3*z1 from two static ANDs and a three-input OR."""
    cell = CellBuilder(geometry, load_cap_F)
    cell.inputs("k", "z3", "z2", "z1")
    cell.outputs("c")
    cell.nand2("nand2a", "z3", "z2", "t1b")
    cell.inverter("and2a", "t1b", "t1")
    cell.nand2("nand2b", "z3", "z1", "t2b")
    cell.inverter("and2b", "t2b", "t2")
    cell.nor3("nor3", "k", "t1", "t2", "cb")
    cell.inverter("or3", "cb", "c")
    return cell.build()


def bits(value: int, width: int = RCA_WIDTH) -> List[int]:
    """Little-endian bits of `value`."""
    return [(value >> i) & 1 for i in range(width)]
