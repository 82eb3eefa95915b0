"""Bipolar fuzzy soft sets: exact grade algebra, soft set operations and score-table decisions."""

from .algebra import (
    BipolarFuzzySoftSet,
    ProductParameter,
    absolute_soft_set,
    family_and,
    family_or,
    family_restricted_intersection,
    family_union,
    null_soft_set,
    soft_and,
    soft_complement,
    soft_equal,
    soft_extended_intersection,
    soft_extended_union,
    soft_or,
    soft_restricted_intersection,
    soft_restricted_union,
    soft_subset,
    soft_support_subset,
)
from .core import (
    BipolarFuzzySet,
    BipolarGrade,
    Degree,
    Universe,
    bfs_absolute,
    bfs_null,
    bfs_pointwise,
    grade_complement,
    grade_intersection,
    grade_leq,
    grade_union,
)
from .dataset import load_dataset, parse_dataset, serialize
from .decision import DecisionReport, comparison_table, decide, restrict, score_table, value_tables
from .errors import (
    BFSSError,
    EmptyChoice,
    EmptyFamily,
    EmptyParameterIntersection,
    GradeRangeError,
    ParseError,
    UniverseMismatch,
    UnknownParameter,
    ValidationError,
)

__version__ = "0.1.0"
