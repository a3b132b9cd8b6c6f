"""Netlist generators for the full adder, ripple-carry adder and the three BCD adder variants."""

from .critical_path import CARRY_CHAIN_GATES, critical_path_gates, gate_graph, gate_output_nets
from .policies import BASE_GEOMETRY, DEFAULT_LOAD_CAP_F, SizingPolicy, VthAssignment, VthPolicy
from .cells import CellBuilder, bits, carry_detect, full_adder_16t, rca4
from .sizing import apply_channel_sizing
from .bcd import (
    A_PORTS,
    B_PORTS,
    CARRY_PORT,
    CIN_PORT,
    CLOCK_PORTS,
    CLUSTERS,
    DIGIT_PORTS,
    Variant,
    bcd_conventional,
    bcd_dvt,
    bcd_gated,
    exhaustive_vectors,
    generate,
    read_result,
    vector_assignment,
)

__all__ = [
    "CARRY_CHAIN_GATES",
    "critical_path_gates",
    "gate_graph",
    "gate_output_nets",
    "BASE_GEOMETRY",
    "DEFAULT_LOAD_CAP_F",
    "SizingPolicy",
    "VthAssignment",
    "VthPolicy",
    "CellBuilder",
    "bits",
    "carry_detect",
    "full_adder_16t",
    "rca4",
    "apply_channel_sizing",
    "A_PORTS",
    "B_PORTS",
    "CARRY_PORT",
    "CIN_PORT",
    "CLOCK_PORTS",
    "CLUSTERS",
    "DIGIT_PORTS",
    "Variant",
    "bcd_conventional",
    "bcd_dvt",
    "bcd_gated",
    "exhaustive_vectors",
    "generate",
    "read_result",
    "vector_assignment",
]
