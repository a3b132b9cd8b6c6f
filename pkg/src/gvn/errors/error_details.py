import enum
from dataclasses import dataclass


@enum.unique
class GvnErrorCode(enum.Enum):
    """Every failure family the toolkit reports.

    Use these to tell errors apart in code instead of matching on messages.
    """

    INVALID_ARGUMENT_ERROR = (1,)
    """A caller-supplied value failed validation"""
    NETLIST_VALIDATION_ERROR = (2,)
    """A netlist broke one of its structural rules"""
    PARSE_ERROR = (3,)
    """Netlist, parameter or vector text could not be parsed"""
    UNBOUND_PORT_ERROR = (4,)
    """A cell port was left without a parent net"""
    NAME_COLLISION_ERROR = (5,)
    """A prefixed name already exists in the parent netlist"""
    OSCILLATION_ERROR = (6,)
    """The simulator exceeded its event bound without reaching quiescence"""
    TIMING_INFEASIBLE_ERROR = (7,)
    """The requested clock period is shorter than the cluster delays"""
    UNSETTLED_STATE_ERROR = (8,)
    """A settled simulation state was required"""
    UNWRITABLE_DESTINATION_ERROR = (9,)
    """A report or netlist could not be written"""
    UNKNOWN_ERROR = 10
    """Unknown error has occurred"""


@dataclass(frozen=True)
class ParseError:
    """One problem found while parsing line-oriented text."""

    line_number: int
    """1-based line of the problem"""
    column: int
    """1-based column of the offending token"""
    message: str
    """What went wrong"""
    offending_text: str
    """The token or line that triggered the error"""

    def __str__(self) -> str:
        return f"{self.line_number}:{self.column}: {self.message} ({self.offending_text!r})"
