from __future__ import annotations

from dataclasses import replace
from typing import Dict

from gvn import logs
from gvn.errors import InvalidArgumentException, NameCollisionException, UnboundPortException
from gvn.internal._utilities import _validate_name
from gvn.typing import TNetId, TPortBinding

from .core import HIERARCHY_SEPARATOR, NetKind, Netlist, NetlistBuilder


def prefixed(prefix: str, name: str) -> str:
    return f"{prefix}{HIERARCHY_SEPARATOR}{name}"


def instantiate(parent: Netlist, cell: Netlist, binding: TPortBinding, prefix: str) -> Netlist:
    """Flatten one copy of `cell` into `parent`.

    Cell ports merge with the parent nets named in `binding` (missing parent
    nets are declared as signals); cell rails merge with the parent rails of
    the same kind; every other cell net and every device is copied under
    `prefix`. Parent ports are unchanged: the caller decides which merged
    nets become ports.

    Args:
        parent (Netlist): the netlist to extend.
        cell (Netlist): the cell to copy in.
        binding (Mapping[str, str]): cell port net -> parent net.
        prefix (str): hierarchical prefix, joined to cell names with '.'.

    Returns:
        Netlist: a new netlist; `parent` is not modified.

    Raises:
        UnboundPortException: a cell port has no binding.
        NameCollisionException: a prefixed name already exists in the parent.
    """
    _validate_name(prefix, "Instance prefix")
    cell_ports = set(cell.ports)
    for port in cell.ports:
        if port not in binding:
            raise UnboundPortException(f"port {port!r} of cell instance {prefix!r} is not bound")
    for port in binding:
        if port not in cell_ports:
            raise InvalidArgumentException(f"{port!r} is not a port of the cell bound as {prefix!r}")

    builder = NetlistBuilder.from_netlist(parent)
    net_map: Dict[TNetId, TNetId] = {}

    for net in cell.nets:
        if net.id in cell_ports:
            target = binding[net.id]
            builder.ensure_net(target)
            net_map[net.id] = target
        elif net.kind.is_rail:
            rail = parent.rail_vdd if net.kind is NetKind.RAIL_VDD else parent.rail_gnd
            if rail is None:
                if parent_has(parent, net.id):
                    raise NameCollisionException(f"cell rail {net.id!r} clashes with a parent net of another kind")
                rail = builder.ensure_net(net.id, net.kind)
            net_map[net.id] = rail
        else:
            target = prefixed(prefix, net.id)
            if builder.has_net(target):
                raise NameCollisionException(f"net {target!r} already exists")
            builder.add_net(target, net.kind)
            net_map[net.id] = target
            if net.id in cell.cluster_of:
                builder.set_cluster(target, cell.cluster_of[net.id])

    for device in cell.devices:
        name = prefixed(prefix, device.name)
        if builder.has_device(name):
            raise NameCollisionException(f"device {name!r} already exists")
        builder.add_device(
            replace(
                device,
                name=name,
                gate=net_map[device.gate],
                source=net_map[device.source],
                drain=net_map[device.drain],
            )
        )

    result = builder.build()
    logs.logger.log(logs.TRACE, "instantiated %s: %d -> %d devices", prefix, len(parent.devices), len(result.devices))
    return result


def parent_has(parent: Netlist, net_id: TNetId) -> bool:
    return net_id in parent.net_index
