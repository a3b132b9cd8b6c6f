from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import List

from gvn import logs
from gvn.errors import NetlistValidationException

from .core import NetKind, Netlist, PortDirection


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class ValidationFinding:
    severity: Severity
    rule_id: str
    """Stable identifier of the broken rule, e.g. `unresolved-terminal`."""
    subject: str
    """Name of the offending device or net."""
    message: str

    def __str__(self) -> str:
        return f"{self.severity.value} [{self.rule_id}] {self.subject}: {self.message}"


@dataclass
class ValidationReport:
    """Structural findings for one netlist. Violations are data, not exceptions."""

    findings: List[ValidationFinding] = field(default_factory=list)

    @property
    def errors(self) -> List[ValidationFinding]:
        return [f for f in self.findings if f.severity is Severity.ERROR]

    @property
    def warnings(self) -> List[ValidationFinding]:
        return [f for f in self.findings if f.severity is Severity.WARNING]

    @property
    def is_clean(self) -> bool:
        return not self.errors

    def _error(self, rule_id: str, subject: str, message: str) -> None:
        self.findings.append(ValidationFinding(Severity.ERROR, rule_id, subject, message))

    def _warning(self, rule_id: str, subject: str, message: str) -> None:
        self.findings.append(ValidationFinding(Severity.WARNING, rule_id, subject, message))

    def raise_if_errors(self, what: str = "netlist") -> None:
        if not self.is_clean:
            raise NetlistValidationException(f"{what} has {len(self.errors)} error(s): {self.errors[0]}", self)


def validate(netlist: Netlist) -> ValidationReport:
    """Check every structural invariant of a netlist.

    Rules: nets and devices are uniquely named; every device terminal and
    port resolves to a declared net; port nets have the kind of their
    direction; there is at most one Vdd and one Gnd rail; cluster tags
    reference declared nets. A sleep device with neither channel terminal on
    a real or virtual rail is only a warning.
    """
    report = ValidationReport()

    for net_id, count in Counter(net.id for net in netlist.nets).items():
        if count > 1:
            report._error("duplicate-net", net_id, f"net declared {count} times")
    for name, count in Counter(device.name for device in netlist.devices).items():
        if count > 1:
            report._error("duplicate-device", name, f"device declared {count} times")

    for kind in (NetKind.RAIL_VDD, NetKind.RAIL_GND):
        rails = [net.id for net in netlist.nets if net.kind is kind]
        for extra in rails[1:]:
            report._error("multiple-rails", extra, f"second {kind.value} rail (first is {rails[0]})")

    declared = netlist.net_index
    for device in netlist.devices:
        for role, terminal in zip(("gate", "source", "drain"), device.terminals):
            if terminal not in declared:
                report._error("unresolved-terminal", device.name, f"unresolved terminal {role}={terminal}")
        if device.is_sleep:
            on_rail = any(
                terminal in declared and (declared[terminal].kind.is_rail or declared[terminal].kind.is_virtual_rail)
                for terminal in (device.source, device.drain)
            )
            if not on_rail:
                report._warning("sleep-not-on-rail", device.name, "sleep transistor not on rail")

    for direction, ports in (
        (PortDirection.IN, netlist.input_ports),
        (PortDirection.OUT, netlist.output_ports),
        (PortDirection.CLK, netlist.clock_ports),
    ):
        for port in ports:
            if port not in declared:
                report._error("unresolved-port", port, f"{direction.value} port references an undeclared net")
            elif declared[port].kind is not direction.net_kind:
                report._error(
                    "port-kind-mismatch",
                    port,
                    f"{direction.value} port on a {declared[port].kind.value} net, expected {direction.net_kind.value}",
                )
        for port, count in Counter(ports).items():
            if count > 1:
                report._error("duplicate-port", port, f"{direction.value} port listed {count} times")

    for net_id in netlist.cluster_of:
        if net_id not in declared:
            report._error("unresolved-cluster", net_id, "cluster tag on an undeclared net")

    if report.findings:
        logs.debug("validation found %d error(s), %d warning(s)", len(report.errors), len(report.warnings))
    return report
