from typing import Dict, Iterable, Tuple

from gvn.generators import BASE_GEOMETRY
from gvn.netlist import DeviceType, NetKind, Netlist, NetlistBuilder, PortDirection, Transistor, VthClass
from gvn.sim import LogicLevel

L0, L1, LX, LZ = LogicLevel.L0, LogicLevel.L1, LogicLevel.LX, LogicLevel.LZ


def transistor(
    name: str,
    device_type: DeviceType,
    gate: str,
    source: str,
    drain: str,
    vth_class: VthClass = VthClass.LOW,
    load_cap_F: float = 1e-16,
    is_sleep: bool = False,
) -> Transistor:
    """A device of the base geometry."""
    return Transistor(name, device_type, vth_class, BASE_GEOMETRY, gate, source, drain, is_sleep, load_cap_F)


def inverter_netlist(vth_class: VthClass = VthClass.LOW) -> Netlist:
    """in -> out through one static inverter."""
    builder = NetlistBuilder()
    builder.add_net("vdd", NetKind.RAIL_VDD)
    builder.add_net("gnd", NetKind.RAIL_GND)
    builder.add_net("in", NetKind.INPUT)
    builder.add_net("out", NetKind.OUTPUT)
    builder.add_port(PortDirection.IN, "in")
    builder.add_port(PortDirection.OUT, "out")
    builder.add_device(transistor("inv.p", DeviceType.PMOS, "in", "vdd", "out", vth_class))
    builder.add_device(transistor("inv.n", DeviceType.NMOS, "in", "gnd", "out", vth_class))
    return builder.build()


def chain_netlist(stages: int) -> Netlist:
    """`stages` inverters in series from `in` to `out`."""
    builder = NetlistBuilder()
    builder.add_net("vdd", NetKind.RAIL_VDD)
    builder.add_net("gnd", NetKind.RAIL_GND)
    builder.add_net("in", NetKind.INPUT)
    builder.add_port(PortDirection.IN, "in")
    nets = ["in"] + [f"n{i}" for i in range(1, stages)] + ["out"]
    for net in nets[1:-1]:
        builder.add_net(net)
    builder.add_net("out", NetKind.OUTPUT)
    builder.add_port(PortDirection.OUT, "out")
    for index, (a, y) in enumerate(zip(nets, nets[1:])):
        builder.add_device(transistor(f"inv{index}.p", DeviceType.PMOS, a, "vdd", y))
        builder.add_device(transistor(f"inv{index}.n", DeviceType.NMOS, a, "gnd", y))
    return builder.build()


def levels(**assignments: int) -> Dict[str, LogicLevel]:
    return {net: LogicLevel.of_bit(bit) for net, bit in assignments.items()}


def pairs(values: Iterable[float]) -> Iterable[Tuple[float, float]]:
    items = list(values)
    return zip(items, items[1:])
