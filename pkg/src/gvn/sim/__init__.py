"""Four-valued event-driven switch-level simulation."""

from .levels import LogicLevel, conduction

# NB: state pulls in gvn.power, which imports levels back
from .state import DEFAULT_OSCILLATION_BOUND, Event, SimState, init
from .io import StimulusStep, format_event_trace, parse_stimulus, write_event_trace

__all__ = [
    "LogicLevel",
    "conduction",
    "DEFAULT_OSCILLATION_BOUND",
    "Event",
    "SimState",
    "init",
    "StimulusStep",
    "format_event_trace",
    "parse_stimulus",
    "write_event_trace",
]
