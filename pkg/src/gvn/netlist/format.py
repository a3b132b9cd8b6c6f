"""Line-oriented text form of a `Netlist`.

One declaration per line, `#` starts a comment::

    NET <name> <kind>
    PORT <in|out|clk> <net>
    M <name> <NMOS|PMOS> <gate> <source> <drain> W=<m> L=<m> VTH=<LOW|HIGH> SLEEP=<0|1> CL=<F>
    CLUSTER <net> <tag>

`serialize` writes the canonical form: nets, then ports (in, out, clk), then
devices, then cluster tags, each in declaration order; reals carry exactly six
significant digits. References may appear before the net they name.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple, Union

from gvn import logs
from gvn.errors import InvalidArgumentException, NetlistParseException, ParseError

from .core import (
    ChannelGeometry,
    DeviceType,
    NetKind,
    Netlist,
    NetlistBuilder,
    PortDirection,
    Transistor,
    VthClass,
)
from .validation import validate

COMMENT = "#"
REAL_FORMAT = "{:.5e}"

_DEVICE_FIELDS = ("W", "L", "VTH", "SLEEP", "CL")


def format_real(value: float) -> str:
    return REAL_FORMAT.format(value)


@dataclass(frozen=True)
class _Token:
    text: str
    column: int


@dataclass(frozen=True)
class _Reference:
    net: str
    line_number: int
    column: int
    expected_kind: Optional[NetKind] = None


def _tokenize(line: str) -> List[_Token]:
    body = line.split(COMMENT, 1)[0]
    tokens: List[_Token] = []
    column = 0
    for text in body.split():
        column = body.index(text, column)
        tokens.append(_Token(text, column + 1))
        column += len(text)
    return tokens


class _Parser:
    def __init__(self) -> None:
        self.builder = NetlistBuilder()
        self.errors: List[ParseError] = []
        self.references: List[_Reference] = []
        self.rails: Dict[NetKind, str] = {}
        self.ports: Set[Tuple[PortDirection, str]] = set()

    def error(self, line_number: int, token: _Token, message: str) -> None:
        self.errors.append(ParseError(line_number, token.column, message, token.text))

    def parse_line(self, line_number: int, tokens: List[_Token]) -> None:
        directive = tokens[0]
        handler = {
            "NET": self._net,
            "PORT": self._port,
            "M": self._device,
            "CLUSTER": self._cluster,
        }.get(directive.text)
        if handler is None:
            self.error(line_number, directive, "unknown directive")
            return
        handler(line_number, tokens)

    def _arity(self, line_number: int, tokens: List[_Token], expected: int) -> bool:
        if len(tokens) == expected:
            return True
        offending = tokens[expected] if len(tokens) > expected else tokens[-1]
        self.error(
            line_number,
            offending,
            f"malformed field: {tokens[0].text} takes {expected - 1} fields, got {len(tokens) - 1}",
        )
        return False

    def _net(self, line_number: int, tokens: List[_Token]) -> None:
        if not self._arity(line_number, tokens, 3):
            return
        name, kind_token = tokens[1], tokens[2]
        try:
            kind = NetKind(kind_token.text)
        except ValueError:
            self.error(line_number, kind_token, "malformed field: unknown net kind")
            return
        if self.builder.has_net(name.text):
            self.error(line_number, name, "duplicate name: net already declared")
            return
        if kind.is_rail and kind in self.rails:
            self.error(line_number, name, f"duplicate name: second {kind.value} rail (first is {self.rails[kind]})")
            return
        try:
            self.builder.add_net(name.text, kind)
        except InvalidArgumentException as e:
            self.error(line_number, name, f"malformed field: {e.message}")
            return
        if kind.is_rail:
            self.rails[kind] = name.text

    def _port(self, line_number: int, tokens: List[_Token]) -> None:
        if not self._arity(line_number, tokens, 3):
            return
        direction_token, net = tokens[1], tokens[2]
        try:
            direction = PortDirection(direction_token.text)
        except ValueError:
            self.error(line_number, direction_token, "malformed field: port direction must be in, out or clk")
            return
        if (direction, net.text) in self.ports:
            self.error(line_number, net, "duplicate name: port already declared")
            return
        self.ports.add((direction, net.text))
        self.builder.add_port(direction, net.text)
        self.references.append(_Reference(net.text, line_number, net.column, direction.net_kind))

    def _device(self, line_number: int, tokens: List[_Token]) -> None:
        if not self._arity(line_number, tokens, 11):
            return
        name, type_token = tokens[1], tokens[2]
        try:
            device_type = DeviceType(type_token.text)
        except ValueError:
            self.error(line_number, type_token, "malformed field: device type must be NMOS or PMOS")
            return

        values: Dict[str, str] = {}
        for key, token in zip(_DEVICE_FIELDS, tokens[6:]):
            found_key, sep, value = token.text.partition("=")
            if found_key != key or not sep or not value:
                self.error(line_number, token, f"malformed field: expected {key}=<value>")
                return
            values[key] = value

        width = self._real(line_number, tokens[6], values["W"])
        length = self._real(line_number, tokens[7], values["L"])
        load = self._real(line_number, tokens[10], values["CL"])
        try:
            vth_class = VthClass(values["VTH"])
        except ValueError:
            self.error(line_number, tokens[8], "malformed field: VTH must be LOW or HIGH")
            return
        if values["SLEEP"] not in ("0", "1"):
            self.error(line_number, tokens[9], "malformed field: SLEEP must be 0 or 1")
            return
        if width is None or length is None or load is None:
            return

        if self.builder.has_device(name.text):
            self.error(line_number, name, "duplicate name: device already declared")
            return
        try:
            device = Transistor(
                name=name.text,
                device_type=device_type,
                vth_class=vth_class,
                geometry=ChannelGeometry(width, length),
                gate=tokens[3].text,
                source=tokens[4].text,
                drain=tokens[5].text,
                is_sleep=values["SLEEP"] == "1",
                load_cap_F=load,
            )
        except InvalidArgumentException as e:
            self.error(line_number, name, f"malformed field: {e.message}")
            return
        self.builder.add_device(device)
        for token in tokens[3:6]:
            self.references.append(_Reference(token.text, line_number, token.column))

    def _cluster(self, line_number: int, tokens: List[_Token]) -> None:
        if not self._arity(line_number, tokens, 3):
            return
        self.builder.set_cluster(tokens[1].text, tokens[2].text)
        self.references.append(_Reference(tokens[1].text, line_number, tokens[1].column))

    def _real(self, line_number: int, token: _Token, text: str) -> Optional[float]:
        try:
            value = float(text)
        except ValueError:
            self.error(line_number, token, "malformed field: not a real number")
            return None
        if not math.isfinite(value):
            self.error(line_number, token, "malformed field: real must be finite")
            return None
        return value

    def resolve(self) -> None:
        for ref in self.references:
            token = _Token(ref.net, ref.column)
            if not self.builder.has_net(ref.net):
                self.error(ref.line_number, token, "unresolved reference: net is not declared")
                continue
            if ref.expected_kind is not None:
                kind = self.builder.kind_of(ref.net)
                if kind is not ref.expected_kind:
                    self.error(
                        ref.line_number,
                        token,
                        f"unresolved reference: port net has kind {kind.value}, expected {ref.expected_kind.value}",
                    )


def parse(text: Union[bytes, str]) -> Netlist:
    """Parse the text form of a netlist.

    Every problem in the input is collected before failing, so a single call
    reports all of them.

    Args:
        text (Union[bytes, str]): UTF-8 bytes or an already decoded string.

    Returns:
        Netlist: the declared netlist, which passes `validate` without errors.

    Raises:
        NetlistParseException: with one `ParseError` per problem, in line order.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            line_number = text[: e.start].count(b"\n") + 1
            bad = repr(e.object[e.start : e.end])
            raise NetlistParseException([ParseError(line_number, 1, "input is not UTF-8 text", bad)]) from None

    parser = _Parser()
    for line_number, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line)
        if tokens:
            parser.parse_line(line_number, tokens)
    parser.resolve()

    if parser.errors:
        errors = sorted(parser.errors, key=lambda e: (e.line_number, e.column))
        logs.debug("parse failed with %d error(s)", len(errors))
        raise NetlistParseException(errors)

    netlist = parser.builder.build()
    validate(netlist).raise_if_errors("parsed netlist")
    return netlist


def serialize(netlist: Netlist) -> bytes:
    """Write the canonical text form of a valid netlist.

    Raises:
        NetlistValidationException: `netlist` has structural errors.
    """
    validate(netlist).raise_if_errors()
    lines: List[str] = [f"NET {net.id} {net.kind.value}" for net in netlist.nets]
    for direction, ports in (
        (PortDirection.IN, netlist.input_ports),
        (PortDirection.OUT, netlist.output_ports),
        (PortDirection.CLK, netlist.clock_ports),
    ):
        lines.extend(f"PORT {direction.value} {port}" for port in ports)
    for device in netlist.devices:
        lines.append(
            f"M {device.name} {device.device_type.value} {device.gate} {device.source} {device.drain}"
            f" W={format_real(device.geometry.width_m)} L={format_real(device.geometry.length_m)}"
            f" VTH={device.vth_class.value} SLEEP={int(device.is_sleep)} CL={format_real(device.load_cap_F)}"
        )
    lines.extend(f"CLUSTER {net_id} {tag}" for net_id, tag in netlist.cluster_of.items())
    return "".join(line + "\n" for line in lines).encode("utf-8")
