"""Text I/O around a simulation: stimulus files in, event traces out.

Stimulus file, one step per line, `#` comments::

    <time_s> <net>=<0|1|X|Z> [<net>=<level> ...]

Event trace: CSV `time_s,net,value`, times with six significant digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, TextIO, Union

from gvn.errors import InvalidArgumentException, NetlistParseException, ParseError, convert_error
from gvn.typing import TNetId, TSeconds

from .levels import LogicLevel
from .state import Event

TRACE_HEADER = "time_s,net,value"


@dataclass(frozen=True)
class StimulusStep:
    at_s: TSeconds
    assignments: Dict[TNetId, LogicLevel]


def parse_stimulus(text: str) -> List[StimulusStep]:
    steps: List[StimulusStep] = []
    errors: List[ParseError] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        fields = body.split()
        if not fields:
            continue
        try:
            at_s = float(fields[0])
        except ValueError:
            errors.append(ParseError(line_number, body.index(fields[0]) + 1, "malformed field: time", fields[0]))
            continue
        assignments: Dict[TNetId, LogicLevel] = {}
        for field in fields[1:]:
            net, sep, level = field.partition("=")
            try:
                if not sep or not net:
                    raise ValueError(field)
                assignments[net] = LogicLevel(level.upper())
            except ValueError:
                errors.append(ParseError(line_number, body.index(field) + 1, "malformed field: net=level", field))
        steps.append(StimulusStep(at_s, assignments))
    if errors:
        raise NetlistParseException(errors)
    for previous, step in zip(steps, steps[1:]):
        if step.at_s < previous.at_s:
            raise InvalidArgumentException(f"stimulus times must not decrease: {step.at_s} after {previous.at_s}")
    return steps


def format_event_trace(events: Iterable[Event]) -> str:
    rows = [TRACE_HEADER] + [f"{event.time_s:.5e},{event.net},{event.new_value.value}" for event in events]
    return "\n".join(rows) + "\n"


def write_event_trace(events: Iterable[Event], destination: Union[str, Path, TextIO]) -> None:
    """Write the CSV event trace to a path or an open text stream.

    Raises:
        UnwritableDestinationException: the destination cannot be written.
    """
    text = format_event_trace(events)
    try:
        if isinstance(destination, (str, Path)):
            with open(destination, "w", encoding="utf-8", newline="\n") as stream:
                stream.write(text)
        else:
            destination.write(text)
    except OSError as e:
        raise convert_error(e) from e
