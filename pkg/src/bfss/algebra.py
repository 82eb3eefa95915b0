"""Bipolar fuzzy soft sets and their operations.

Naming follows the usual soft-set vocabulary: *restricted* operations keep
only the shared parameters, *extended* operations keep every parameter of
either operand and combine values only where both are defined.  The AND/OR
products are indexed by pairs of parameters.

Result parameter order is deterministic: left operand order first, then
right-only parameters in right operand order; products are lexicographic.
Equality of soft sets ignores parameter order.
"""

from __future__ import annotations

import itertools
from functools import reduce
from typing import Callable, Iterable, Mapping, Sequence

from .core import (
    BipolarFuzzySet,
    BipolarGrade,
    Universe,
    bfs_absolute,
    bfs_complement,
    bfs_leq,
    bfs_null,
    bfs_pointwise,
    check_same_universe,
    grade_intersection,
    grade_union,
)
from .errors import EmptyFamily, EmptyParameterIntersection, UniverseMismatch

GradeOp = Callable[[BipolarGrade, BipolarGrade], BipolarGrade]


class ProductParameter(str):
    """Parameter of a product soft set, e.g. ``(e1,e4)``.

    It is a ``str`` whose text is the canonical form, so product sets
    serialize and compare like any other soft set.
    """

    def __new__(cls, *parts: str):
        if not parts:
            raise ValueError("a product parameter needs at least one component")
        self = super().__new__(cls, "(" + ",".join(parts) + ")")
        self.parts = tuple(parts)
        return self

    @property
    def left(self) -> str:
        return self.parts[0]

    @property
    def right(self) -> str:
        return self.parts[-1]

    def __repr__(self):
        return f"ProductParameter{self.parts!r}"


class BipolarFuzzySoftSet:
    """A universe plus an ordered map from parameters to bipolar fuzzy sets."""

    __slots__ = ("universe", "_assignments")

    def __init__(self, universe: Universe, assignments):
        if isinstance(assignments, Mapping):
            pairs = list(assignments.items())
        else:
            pairs = list(assignments)
        table: dict[str, BipolarFuzzySet] = {}
        for param, fs in pairs:
            if not isinstance(param, str) or not param:
                raise ValueError(f"parameter identifiers must be non-empty text, got {param!r}")
            if param in table:
                raise ValueError(f"duplicate parameter {param!r}")
            if not isinstance(fs, BipolarFuzzySet):
                raise TypeError(f"value for {param!r} is not a BipolarFuzzySet")
            if fs.universe != universe:
                raise UniverseMismatch(f"value for {param!r} is over a different universe")
            table[param] = fs
        self.universe = universe
        self._assignments = table

    @classmethod
    def from_rows(cls, universe: Universe, rows: Mapping[str, Iterable]) -> BipolarFuzzySoftSet:
        """``rows`` maps each parameter to ``(pos, neg)`` pairs in universe order."""
        return cls(universe, {p: BipolarFuzzySet.from_pairs(universe, r) for p, r in rows.items()})

    @property
    def params(self) -> tuple[str, ...]:
        return tuple(self._assignments)

    def __getitem__(self, param: str) -> BipolarFuzzySet:
        return self._assignments[param]

    def __contains__(self, param):
        return param in self._assignments

    def __len__(self):
        return len(self._assignments)

    def __iter__(self):
        return iter(self._assignments)

    def items(self):
        return self._assignments.items()

    def __eq__(self, other):
        if not isinstance(other, BipolarFuzzySoftSet):
            return NotImplemented
        return self.universe == other.universe and self._assignments == other._assignments

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{p}: {fs}" for p, fs in self.items())
        return f"BipolarFuzzySoftSet({{{body}}})"

    # operator sugar
    def __invert__(self):
        return soft_complement(self)

    def __or__(self, other):
        return soft_extended_union(self, other)

    def __and__(self, other):
        return soft_restricted_intersection(self, other)

    def __le__(self, other):
        return soft_subset(self, other)


def null_soft_set(universe: Universe, params: Iterable[str]) -> BipolarFuzzySoftSet:
    fs = bfs_null(universe)
    return BipolarFuzzySoftSet(universe, [(p, fs) for p in params])


def absolute_soft_set(universe: Universe, params: Iterable[str]) -> BipolarFuzzySoftSet:
    fs = bfs_absolute(universe)
    return BipolarFuzzySoftSet(universe, [(p, fs) for p in params])


# -- relations ---------------------------------------------------------------

def soft_subset(f: BipolarFuzzySoftSet, g: BipolarFuzzySoftSet) -> bool:
    check_same_universe(f.universe, g.universe)
    return all(e in g and bfs_leq(fs, g[e]) for e, fs in f.items())


def soft_support_subset(f: BipolarFuzzySoftSet, g: BipolarFuzzySoftSet) -> bool:
    """Parameter containment only; grades are ignored."""
    check_same_universe(f.universe, g.universe)
    return all(e in g for e in f.params)


def soft_equal(f: BipolarFuzzySoftSet, g: BipolarFuzzySoftSet) -> bool:
    return soft_subset(f, g) and soft_subset(g, f)


# -- unary -------------------------------------------------------------------

def soft_complement(f: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    return BipolarFuzzySoftSet(f.universe, [(e, bfs_complement(fs)) for e, fs in f.items()])


# -- binary, parameter-indexed -----------------------------------------------

def _restricted(f, g, op: GradeOp, name: str) -> BipolarFuzzySoftSet:
    check_same_universe(f.universe, g.universe)
    shared = [e for e in f.params if e in g]
    if not shared:
        raise EmptyParameterIntersection(
            f"{name} requires a shared parameter; "
            f"left has {list(f.params)}, right has {list(g.params)}"
        )
    return BipolarFuzzySoftSet(f.universe, [(e, bfs_pointwise(op, f[e], g[e])) for e in shared])


def _extended(f, g, op: GradeOp) -> BipolarFuzzySoftSet:
    check_same_universe(f.universe, g.universe)
    out = []
    for e, fs in f.items():
        out.append((e, bfs_pointwise(op, fs, g[e]) if e in g else fs))
    out.extend((e, gs) for e, gs in g.items() if e not in f)
    return BipolarFuzzySoftSet(f.universe, out)


def soft_restricted_intersection(f, g) -> BipolarFuzzySoftSet:
    return _restricted(f, g, grade_intersection, "restricted intersection")


def soft_restricted_union(f, g) -> BipolarFuzzySoftSet:
    return _restricted(f, g, grade_union, "restricted union")


def soft_extended_union(f, g) -> BipolarFuzzySoftSet:
    return _extended(f, g, grade_union)


def soft_extended_intersection(f, g) -> BipolarFuzzySoftSet:
    # Result carries A ∪ B: the values outside A ∩ B are defined, so they are kept.
    return _extended(f, g, grade_intersection)


# -- products ----------------------------------------------------------------

def _fold(op: GradeOp, sets: Sequence[BipolarFuzzySet]) -> BipolarFuzzySet:
    return reduce(lambda a, b: bfs_pointwise(op, a, b), sets)


def _product(family: Sequence[BipolarFuzzySoftSet], op: GradeOp) -> BipolarFuzzySoftSet:
    if not family:
        raise EmptyFamily("product of an empty family")
    universe = family[0].universe
    for member in family[1:]:
        check_same_universe(universe, member.universe)
    out = []
    for combo in itertools.product(*(m.params for m in family)):
        out.append((ProductParameter(*combo), _fold(op, [m[e] for m, e in zip(family, combo)])))
    return BipolarFuzzySoftSet(universe, out)


def soft_and(f, g) -> BipolarFuzzySoftSet:
    return _product([f, g], grade_intersection)


def soft_or(f, g) -> BipolarFuzzySoftSet:
    return _product([f, g], grade_union)


def family_and(family: Sequence[BipolarFuzzySoftSet]) -> BipolarFuzzySoftSet:
    return _product(list(family), grade_intersection)


def family_or(family: Sequence[BipolarFuzzySoftSet]) -> BipolarFuzzySoftSet:
    return _product(list(family), grade_union)


# -- families ----------------------------------------------------------------

def _check_family(family) -> list[BipolarFuzzySoftSet]:
    family = list(family)
    if not family:
        raise EmptyFamily("family must contain at least one soft set")
    for member in family[1:]:
        check_same_universe(family[0].universe, member.universe)
    return family


def family_restricted_intersection(family: Iterable[BipolarFuzzySoftSet]) -> BipolarFuzzySoftSet:
    family = _check_family(family)
    shared = [e for e in family[0].params if all(e in m for m in family[1:])]
    if not shared:
        raise EmptyParameterIntersection("family intersection requires a parameter common to all members")
    return BipolarFuzzySoftSet(
        family[0].universe,
        [(e, _fold(grade_intersection, [m[e] for m in family])) for e in shared],
    )


def family_union(family: Iterable[BipolarFuzzySoftSet]) -> BipolarFuzzySoftSet:
    """Union over ∪A_i; overlapping parameters take the union of every member holding them."""
    family = _check_family(family)
    order = list(dict.fromkeys(e for m in family for e in m.params))
    return BipolarFuzzySoftSet(
        family[0].universe,
        [(e, _fold(grade_union, [m[e] for m in family if e in m])) for e in order],
    )
