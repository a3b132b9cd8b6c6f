from .core import (
    HIERARCHY_SEPARATOR,
    PASS_GATE_PREFIX,
    ChannelGeometry,
    DeviceType,
    Net,
    NetKind,
    Netlist,
    NetlistBuilder,
    PortDirection,
    Transistor,
    VthClass,
)
from .format import parse, serialize
from .hierarchy import instantiate
from .validation import Severity, ValidationFinding, ValidationReport, validate

__all__ = [
    "HIERARCHY_SEPARATOR",
    "PASS_GATE_PREFIX",
    "ChannelGeometry",
    "DeviceType",
    "Net",
    "NetKind",
    "Netlist",
    "NetlistBuilder",
    "PortDirection",
    "Transistor",
    "VthClass",
    "parse",
    "serialize",
    "instantiate",
    "Severity",
    "ValidationFinding",
    "ValidationReport",
    "validate",
]
