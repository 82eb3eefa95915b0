"""Exact bipolar grades and bipolar fuzzy sets over a finite universe.

A degree is kept as an integer number of 10^-4 units so that every
operation used by the algebra (min, max, ``1 - x``, ``-1 - x``) is exact
and equality is decidable.  Binary floats never enter the arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from typing import Callable, Iterable, Iterator, Mapping

from .errors import GradeRangeError, UniverseMismatch

SCALE = 10_000
DIGITS = 4

_DEGREE_RE = re.compile(r"^([+-]?)(\d+)(?:\.(\d{1,4}))?$")


@dataclass(frozen=True, order=True)
class Degree:
    """A signed decimal in [-1, 1] with at most four fractional digits."""

    units: int

    def __post_init__(self):
        if isinstance(self.units, bool) or not isinstance(self.units, int):
            raise TypeError(f"Degree units must be int, got {type(self.units).__name__}")
        if not -SCALE <= self.units <= SCALE:
            raise GradeRangeError(f"degree {self._text()} outside [-1, 1]")

    @classmethod
    def parse(cls, text: str) -> Degree:
        m = _DEGREE_RE.match(text.strip())
        if m is None:
            raise GradeRangeError(
                f"{text!r} is not a decimal with at most {DIGITS} fractional digits"
            )
        sign, whole, frac = m.groups()
        units = int(whole) * SCALE + int((frac or "").ljust(DIGITS, "0"))
        return cls(-units if sign == "-" else units)

    @classmethod
    def of(cls, value) -> Degree:
        """Coerce a Degree, decimal text, int, Decimal or float.

        Floats go through their shortest repr, so ``Degree.of(0.1)`` is
        exactly one tenth.
        """
        if isinstance(value, Degree):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, bool):
            raise TypeError("bool is not a degree")
        if isinstance(value, int):
            return cls(value * SCALE)
        if isinstance(value, float):
            value = Decimal(repr(value))
        if isinstance(value, Decimal):
            try:
                scaled = value.scaleb(DIGITS)
                units = int(scaled)
            except (InvalidOperation, OverflowError, ValueError):
                raise GradeRangeError(f"{value} is not a finite decimal") from None
            if scaled != units:
                raise GradeRangeError(f"{value} has more than {DIGITS} fractional digits")
            return cls(units)
        raise TypeError(f"cannot make a Degree from {type(value).__name__}")

    def _text(self) -> str:
        sign = "-" if self.units < 0 else ""
        whole, frac = divmod(abs(self.units), SCALE)
        frac_text = f"{frac:0{DIGITS}d}".rstrip("0")
        return f"{sign}{whole}.{frac_text}" if frac_text else f"{sign}{whole}"

    def __str__(self):
        return self._text()

    def __repr__(self):
        return f"Degree({self._text()})"

    def __float__(self):
        return self.units / SCALE


ZERO = Degree(0)
ONE = Degree(SCALE)
MINUS_ONE = Degree(-SCALE)


@dataclass(frozen=True)
class BipolarGrade:
    """Positive degree in [0, 1] and negative (counter-property) degree in [-1, 0]."""

    pos: Degree
    neg: Degree

    def __post_init__(self):
        object.__setattr__(self, "pos", Degree.of(self.pos))
        object.__setattr__(self, "neg", Degree.of(self.neg))
        if self.pos.units < 0:
            raise GradeRangeError(f"positive degree {self.pos} outside [0, 1]")
        if self.neg.units > 0:
            raise GradeRangeError(f"negative degree {self.neg} outside [-1, 0]")

    def __str__(self):
        return f"({self.pos}, {self.neg})"

    def __repr__(self):
        return f"BipolarGrade({self.pos}, {self.neg})"


NULL_GRADE = BipolarGrade(ZERO, ZERO)
ABSOLUTE_GRADE = BipolarGrade(ONE, MINUS_ONE)


def grade_complement(g: BipolarGrade) -> BipolarGrade:
    return BipolarGrade(Degree(SCALE - g.pos.units), Degree(-SCALE - g.neg.units))


def grade_union(a: BipolarGrade, b: BipolarGrade) -> BipolarGrade:
    return BipolarGrade(max(a.pos, b.pos), min(a.neg, b.neg))


def grade_intersection(a: BipolarGrade, b: BipolarGrade) -> BipolarGrade:
    return BipolarGrade(min(a.pos, b.pos), max(a.neg, b.neg))


def grade_leq(a: BipolarGrade, b: BipolarGrade) -> bool:
    """Lattice order: stronger support and stronger counter-support are both 'larger'."""
    return a.pos <= b.pos and a.neg >= b.neg


@dataclass(frozen=True)
class Universe:
    """Ordered, duplicate-free collection of object identifiers."""

    objects: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        objects = tuple(self.objects)
        if not objects:
            raise ValueError("universe must contain at least one object")
        for obj in objects:
            if not isinstance(obj, str) or not obj:
                raise ValueError(f"object identifiers must be non-empty text, got {obj!r}")
        index = {obj: i for i, obj in enumerate(objects)}
        if len(index) != len(objects):
            dupes = sorted({o for o in objects if objects.count(o) > 1})
            raise ValueError(f"duplicate object identifiers: {', '.join(dupes)}")
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "_index", index)

    def index(self, obj: str) -> int:
        try:
            return self._index[obj]
        except KeyError:
            raise KeyError(f"{obj!r} is not in the universe") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self.objects)

    def __len__(self):
        return len(self.objects)

    def __contains__(self, obj):
        return obj in self._index


@dataclass(frozen=True)
class BipolarFuzzySet:
    """A total assignment of bipolar grades to the objects of a universe.

    ``grades`` is aligned with ``universe.objects``.
    """

    universe: Universe
    grades: tuple[BipolarGrade, ...]

    def __post_init__(self):
        grades = tuple(self.grades)
        if len(grades) != len(self.universe):
            raise ValueError(
                f"expected {len(self.universe)} grades, got {len(grades)}"
            )
        for g in grades:
            if not isinstance(g, BipolarGrade):
                raise TypeError(f"expected BipolarGrade, got {type(g).__name__}")
        object.__setattr__(self, "grades", grades)

    @classmethod
    def from_mapping(cls, universe: Universe, mapping: Mapping[str, BipolarGrade]) -> BipolarFuzzySet:
        extra = [k for k in mapping if k not in universe]
        if extra:
            raise ValueError(f"objects not in universe: {', '.join(map(str, extra))}")
        missing = [o for o in universe if o not in mapping]
        if missing:
            raise ValueError(f"no grade for: {', '.join(missing)}")
        return cls(universe, tuple(mapping[o] for o in universe))

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable) -> BipolarFuzzySet:
        """Build from ``(pos, neg)`` pairs given in universe order."""
        return cls(universe, tuple(BipolarGrade(p, n) for p, n in pairs))

    def __getitem__(self, obj: str) -> BipolarGrade:
        return self.grades[self.universe.index(obj)]

    def items(self) -> Iterator[tuple[str, BipolarGrade]]:
        return zip(self.universe.objects, self.grades)

    def __str__(self):
        return "{" + ", ".join(f"({o}, {g.pos}, {g.neg})" for o, g in self.items()) + "}"


def check_same_universe(a: Universe, b: Universe) -> None:
    if a != b:
        raise UniverseMismatch(
            f"operands use different universes: {list(a.objects)} vs {list(b.objects)}"
        )


def bfs_pointwise(
    op: Callable[[BipolarGrade, BipolarGrade], BipolarGrade],
    a: BipolarFuzzySet,
    b: BipolarFuzzySet,
) -> BipolarFuzzySet:
    check_same_universe(a.universe, b.universe)
    return BipolarFuzzySet(a.universe, tuple(op(x, y) for x, y in zip(a.grades, b.grades)))


def bfs_map(op: Callable[[BipolarGrade], BipolarGrade], a: BipolarFuzzySet) -> BipolarFuzzySet:
    return BipolarFuzzySet(a.universe, tuple(op(x) for x in a.grades))


def bfs_complement(a: BipolarFuzzySet) -> BipolarFuzzySet:
    return bfs_map(grade_complement, a)


def bfs_union(a: BipolarFuzzySet, b: BipolarFuzzySet) -> BipolarFuzzySet:
    return bfs_pointwise(grade_union, a, b)


def bfs_intersection(a: BipolarFuzzySet, b: BipolarFuzzySet) -> BipolarFuzzySet:
    return bfs_pointwise(grade_intersection, a, b)


def bfs_leq(a: BipolarFuzzySet, b: BipolarFuzzySet) -> bool:
    check_same_universe(a.universe, b.universe)
    return all(grade_leq(x, y) for x, y in zip(a.grades, b.grades))


def bfs_null(universe: Universe) -> BipolarFuzzySet:
    return BipolarFuzzySet(universe, (NULL_GRADE,) * len(universe))


def bfs_absolute(universe: Universe) -> BipolarFuzzySet:
    return BipolarFuzzySet(universe, (ABSOLUTE_GRADE,) * len(universe))
