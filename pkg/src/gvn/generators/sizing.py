from __future__ import annotations

from gvn.netlist import HIERARCHY_SEPARATOR, Netlist, Transistor

from .policies import SizingPolicy


def apply_channel_sizing(netlist: Netlist, sizing: SizingPolicy) -> Netlist:
    """Lengthen and widen sleep devices; widen the selected transmission gates.

    Everything else, gate loads included, is left as it is.
    """

    def sized(device: Transistor) -> Transistor:
        if device.is_sleep:
            return device.with_geometry(
                device.geometry.scaled(sizing.sleep_width_multiplier, sizing.sleep_length_multiplier)
            )
        leaf = device.gate_instance.rpartition(HIERARCHY_SEPARATOR)[2]
        if device.is_pass_device and leaf in sizing.widened_pass_gates:
            return device.with_geometry(device.geometry.scaled(width_factor=sizing.tg_width_multiplier))
        return device

    return netlist.with_devices(sized(device) for device in netlist.devices)
