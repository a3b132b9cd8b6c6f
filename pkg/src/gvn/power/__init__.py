"""Leakage, delay and energy models."""

from .models import gate_delay, leakage_prefactor, off_current, pdp, subthreshold_current, switching_energy
from .trace import LeakageInterval, PowerTrace, SwitchingEvent, average_power, dynamic_energy

# NB: leakage imports gvn.sim.levels, whose package imports the two modules above
from .leakage import DEFAULT_MAX_STACK_DEPTH, LeakageEstimator, conduction, state_leakage

__all__ = [
    "gate_delay",
    "leakage_prefactor",
    "off_current",
    "pdp",
    "subthreshold_current",
    "switching_energy",
    "LeakageInterval",
    "PowerTrace",
    "SwitchingEvent",
    "average_power",
    "dynamic_energy",
    "DEFAULT_MAX_STACK_DEPTH",
    "LeakageEstimator",
    "conduction",
    "state_leakage",
]
