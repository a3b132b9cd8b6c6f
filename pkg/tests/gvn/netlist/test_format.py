from typing import Dict

import pytest

from gvn.errors import NetlistParseException, NetlistValidationException
from gvn.generators import Variant
from gvn.netlist import DeviceType, NetKind, Netlist, VthClass, parse, serialize
from tests.utils import inverter_netlist

INVERTER_TEXT = (
    "NET vdd vdd\n"
    "NET gnd gnd\n"
    "NET in input\n"
    "NET out output\n"
    "PORT in in\n"
    "PORT out out\n"
    "M inv.p PMOS in vdd out W=9.00000e-08 L=4.50000e-08 VTH=LOW SLEEP=0 CL=1.00000e-16\n"
    "M inv.n NMOS in gnd out W=9.00000e-08 L=4.50000e-08 VTH=LOW SLEEP=0 CL=1.00000e-16\n"
)


def describe_serialize() -> None:
    def writes_the_canonical_inverter() -> None:
        assert serialize(inverter_netlist()) == INVERTER_TEXT.encode("utf-8")

    def writes_nothing_for_an_empty_netlist() -> None:
        assert serialize(Netlist()) == b""

    def refuses_an_invalid_netlist() -> None:
        netlist = inverter_netlist()
        broken = netlist.with_devices([netlist.devices[0], netlist.devices[0]])
        with pytest.raises(NetlistValidationException, match="duplicate-device"):
            serialize(broken)


def describe_parse() -> None:
    def reads_the_inverter() -> None:
        netlist = parse(INVERTER_TEXT)
        assert len(netlist.devices) == 2
        assert len(netlist.nets) == 4
        assert netlist.device_index["inv.p"].device_type is DeviceType.PMOS
        assert netlist == inverter_netlist()

    def accepts_bytes_comments_and_blank_lines() -> None:
        text = "# an inverter\n\n" + INVERTER_TEXT.replace("NET out output\n", "NET out output  # driven\n")
        assert parse(text.encode("utf-8")) == inverter_netlist()

    def reads_empty_input_as_an_empty_netlist() -> None:
        netlist = parse(b"")
        assert netlist.devices == ()
        assert netlist.nets == ()

    def resolves_forward_references() -> None:
        lines = INVERTER_TEXT.splitlines(keepends=True)
        reordered = "".join(lines[4:] + lines[:4])
        assert parse(reordered) == inverter_netlist()

    def reads_sleep_devices_and_clusters() -> None:
        text = (
            "NET vdd vdd\nNET gnd gnd\nNET vg vgnd\nNET clk clock\nPORT clk clk\n"
            "M ft.m NMOS clk gnd vg W=3.60000e-07 L=9.00000e-08 VTH=HIGH SLEEP=1 CL=1.00000e-16\n"
            "CLUSTER vg 1\n"
        )
        netlist = parse(text)
        footer = netlist.device_index["ft.m"]
        assert footer.is_sleep
        assert footer.vth_class is VthClass.HIGH
        assert netlist.kind_of("vg") is NetKind.VIRTUAL_GND
        assert netlist.cluster_of["vg"] == "1"
        assert netlist.clock_ports == ("clk",)

    def reports_a_short_device_line() -> None:
        with pytest.raises(NetlistParseException) as exc_info:
            parse("M m1 NMOS")
        [error] = exc_info.value.errors
        assert error.line_number == 1
        assert error.message.startswith("malformed field")

    def collects_every_error_in_line_order() -> None:
        text = "NET a signal\nBOGUS x\nNET a signal\nPORT in b\nNET c nonsense\n"
        with pytest.raises(NetlistParseException) as exc_info:
            parse(text)
        errors = exc_info.value.errors
        assert [(e.line_number, e.column) for e in errors] == [(2, 1), (3, 5), (4, 9), (5, 7)]
        assert errors[0].message == "unknown directive"
        assert errors[1].message.startswith("duplicate name")
        assert errors[2].message.startswith("unresolved reference")
        assert errors[3].message == "malformed field: unknown net kind"

    def reports_a_port_on_a_net_of_the_wrong_kind() -> None:
        with pytest.raises(NetlistParseException, match="port net has kind signal, expected output"):
            parse("NET y signal\nPORT out y\n")

    @pytest.mark.parametrize(
        "field, message",
        [
            ("W=abc", "not a real number"),
            ("W=inf", "real must be finite"),
            ("W=-1e-7", "width_m must be positive"),
        ],
    )
    def reports_bad_reals(field: str, message: str) -> None:
        text = INVERTER_TEXT.replace("W=9.00000e-08", field, 1)
        with pytest.raises(NetlistParseException, match=message) as exc_info:
            parse(text)
        assert exc_info.value.errors[0].line_number == 7

    def rejects_non_utf8_bytes() -> None:
        with pytest.raises(NetlistParseException, match="not UTF-8"):
            parse(b"NET a signal\nNET \xff signal\n")


def describe_round_trip() -> None:
    def preserves_every_generated_adder(adders: Dict[Variant, Netlist]) -> None:
        for netlist in adders.values():
            text = serialize(netlist)
            reparsed = parse(text)
            assert reparsed.same_structure(netlist)
            assert serialize(reparsed) == text

    def keeps_the_conventional_device_count(conventional: Netlist) -> None:
        assert len(parse(serialize(conventional)).devices) == 146
