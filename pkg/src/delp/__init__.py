"""Defeasible logic programming: arguments, dialectical trees and warrant."""

from .arguments import Argument, ArgumentBuilder, AttackReport, arguments_for, counter_arguments
from .comparison import COMBINED, PRIORITIES, SPECIFICITY, Comparator, CriterionConfig, compare
from .derivation import closure, defeasibly_derives, strictly_derives
from .dialectics import (
    NO,
    UNDECIDED,
    UNKNOWN,
    YES,
    Answer,
    Defeater,
    Dialectic,
    DialecticalTree,
    ResourceLimitError,
    answer,
    mark_tree,
    warranted_literals,
)
from .model import (
    BodyAtom,
    DelpError,
    GroundingError,
    Literal,
    Mode,
    Program,
    Rule,
    ValidationError,
    complement,
    ground_program,
    in_language,
    validate,
)
from .parser import ParseError, format_program, load_program, parse_program, parse_query
from .reasoner import Reasoner

__all__ = [
    "Answer", "Argument", "ArgumentBuilder", "AttackReport", "BodyAtom", "COMBINED",
    "Comparator", "CriterionConfig", "Defeater", "DelpError", "Dialectic", "DialecticalTree",
    "GroundingError", "Literal", "Mode", "NO", "PRIORITIES", "ParseError", "Program",
    "Reasoner", "ResourceLimitError", "Rule", "SPECIFICITY", "UNDECIDED", "UNKNOWN",
    "ValidationError", "YES", "answer", "arguments_for", "closure", "compare", "complement",
    "counter_arguments", "defeasibly_derives", "format_program", "ground_program",
    "in_language", "load_program", "mark_tree", "parse_program", "parse_query",
    "strictly_derives", "validate", "warranted_literals",
]
