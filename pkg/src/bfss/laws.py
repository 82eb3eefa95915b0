"""Executable algebraic laws checked over seeded random instances.

Each trial draws one universe and a handful of soft sets on the 0.1 grid.
Small universes and parameter pools are deliberate: they maximise ties and
parameter overlaps.  A law returns ``True`` (holds), ``False`` (violated)
or ``None`` (precondition not met, counted as a skip).  Violations are
shrunk by dropping objects and parameters while the law keeps failing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import algebra
from .algebra import BipolarFuzzySoftSet, null_soft_set
from .core import (
    BipolarFuzzySet,
    BipolarGrade,
    Degree,
    Universe,
    grade_complement,
    grade_intersection,
    grade_leq,
    grade_union,
)
from .errors import EmptyParameterIntersection

GRID = 1000  # 0.1 in degree units


@dataclass(frozen=True)
class Ops:
    """The operations under test; swapped out only to mutation-test the harness."""

    complement: Callable = algebra.soft_complement
    restricted_intersection: Callable = algebra.soft_restricted_intersection
    restricted_union: Callable = algebra.soft_restricted_union
    extended_union: Callable = algebra.soft_extended_union
    extended_intersection: Callable = algebra.soft_extended_intersection
    subset: Callable = algebra.soft_subset
    and_: Callable = algebra.soft_and
    or_: Callable = algebra.soft_or


def broken_complement(f: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    """Complements only the positive part; still an involution, but breaks De Morgan."""
    def half(g):
        return BipolarGrade(grade_complement(g).pos, g.neg)

    return BipolarFuzzySoftSet(
        f.universe,
        [(e, BipolarFuzzySet(f.universe, tuple(half(g) for g in fs.grades))) for e, fs in f.items()],
    )


MUTATIONS = {"complement": Ops(complement=broken_complement)}


# -- generation --------------------------------------------------------------

def random_grade(rng: random.Random) -> BipolarGrade:
    return BipolarGrade(Degree(rng.randint(0, 10) * GRID), Degree(-rng.randint(0, 10) * GRID))


def random_soft_set(rng, universe: Universe, pool: list[str]) -> BipolarFuzzySoftSet:
    params = rng.sample(pool, rng.randint(1, len(pool)))
    return BipolarFuzzySoftSet(
        universe,
        [(e, BipolarFuzzySet(universe, tuple(random_grade(rng) for _ in universe))) for e in params],
    )


def dominating(rng, f: BipolarFuzzySoftSet, pool: list[str]) -> BipolarFuzzySoftSet:
    """A soft set containing ``f``: extra parameters, every shared grade raised."""
    def raise_(g):
        pos = g.pos.units + rng.randint(0, (10_000 - g.pos.units) // GRID) * GRID
        neg = g.neg.units - rng.randint(0, (10_000 + g.neg.units) // GRID) * GRID
        return BipolarGrade(Degree(pos), Degree(neg))

    out = [(e, BipolarFuzzySet(f.universe, tuple(raise_(g) for g in fs.grades))) for e, fs in f.items()]
    for e in pool:
        if e not in f and rng.random() < 0.5:
            out.append((e, BipolarFuzzySet(f.universe, tuple(random_grade(rng) for _ in f.universe))))
    rng.shuffle(out)
    return BipolarFuzzySoftSet(f.universe, out)


@dataclass(frozen=True)
class Instance:
    f: BipolarFuzzySoftSet
    g: BipolarFuzzySoftSet
    h: BipolarFuzzySoftSet
    sup: BipolarFuzzySoftSet
    a: BipolarGrade
    b: BipolarGrade
    c: BipolarGrade


def random_instance(rng: random.Random, max_objects: int = 6, max_params: int = 5) -> Instance:
    universe = Universe(tuple(f"u{i}" for i in range(1, rng.randint(1, max_objects) + 1)))
    pool = [f"e{i}" for i in range(1, max_params + 1)]
    f, g, h = (random_soft_set(rng, universe, pool) for _ in range(3))
    return Instance(
        f, g, h, dominating(rng, f, pool), random_grade(rng), random_grade(rng), random_grade(rng)
    )


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


# -- laws --------------------------------------------------------------------

def _guard(fn):
    """Turn a restricted-operation precondition failure into a skip."""
    def wrapped(o, *xs):
        try:
            return fn(o, *xs)
        except EmptyParameterIntersection:
            return None
    return wrapped


def _shares(f, g):
    return any(e in g for e in f.params)


def _null_intersection(o, f):
    null = null_soft_set(f.universe, f.params)
    return o.restricted_intersection(f, null) == null


def _product_cardinality(o, f, g):
    for prod in (o.and_(f, g), o.or_(f, g)):
        if len(prod) != len(f) * len(g):
            return False
        expected = [f"({a},{b})" for a in f.params for b in g.params]
        if [str(p) for p in prod.params] != expected:
            return False
    return True


def _product_diagonal(o, f):
    conj, disj = o.and_(f, f), o.or_(f, f)
    return all(conj[f"({e},{e})"] == f[e] and disj[f"({e},{e})"] == f[e] for e in f.params)


def _order_intersection(o, f, sup):
    if not o.subset(f, sup):
        return None
    return o.restricted_intersection(f, sup) == f


def _order_union(o, f, sup):
    if not o.subset(f, sup):
        return None
    return o.extended_union(f, sup) == sup


def _grade_order(o, a, b):
    return grade_leq(a, b) == (grade_intersection(a, b) == a) == (grade_union(a, b) == b)


def _grade_lattice(o, a, b, c):
    u, i = grade_union, grade_intersection
    return (
        u(a, b) == u(b, a)
        and i(a, b) == i(b, a)
        and u(a, u(b, c)) == u(u(a, b), c)
        and i(a, i(b, c)) == i(i(a, b), c)
        and i(a, u(b, c)) == u(i(a, b), i(a, c))
        and u(a, i(b, c)) == i(u(a, b), u(a, c))
        and u(a, i(a, b)) == a
        and i(a, u(a, b)) == a
        and grade_complement(grade_complement(a)) == a
        and grade_complement(u(a, b)) == i(grade_complement(a), grade_complement(b))
    )


@dataclass(frozen=True)
class Law:
    name: str
    pick: Callable[[Instance], tuple]
    check: Callable

    @property
    def on_soft_sets(self) -> bool:
        return not self.name.startswith("grade_")


def _fg(i):
    return (i.f, i.g)


def _fgh(i):
    return (i.f, i.g, i.h)


LAWS: list[Law] = [
    Law("idempotent_union", lambda i: (i.f,), lambda o, f: o.extended_union(f, f) == f),
    Law("idempotent_intersection", lambda i: (i.f,), lambda o, f: o.restricted_intersection(f, f) == f),
    Law("null_union_identity", lambda i: (i.f,),
        lambda o, f: o.extended_union(f, null_soft_set(f.universe, f.params)) == f),
    Law("null_intersection_absorbing", lambda i: (i.f,), _null_intersection),
    Law("commutative_intersection", _fg, _guard(
        lambda o, f, g: o.restricted_intersection(f, g) == o.restricted_intersection(g, f))),
    Law("commutative_union", _fg, lambda o, f, g: o.extended_union(f, g) == o.extended_union(g, f)),
    Law("idempotent_restricted_union", lambda i: (i.f,), lambda o, f: o.restricted_union(f, f) == f),
    Law("commutative_restricted_union", _fg, _guard(
        lambda o, f, g: o.restricted_union(f, g) == o.restricted_union(g, f))),
    Law("associative_intersection", _fgh, _guard(
        lambda o, f, g, h: o.restricted_intersection(f, o.restricted_intersection(g, h))
        == o.restricted_intersection(o.restricted_intersection(f, g), h))),
    Law("associative_union", _fgh, lambda o, f, g, h: o.extended_union(f, o.extended_union(g, h))
        == o.extended_union(o.extended_union(f, g), h)),
    Law("distributive_intersection_over_union", _fgh, _guard(
        lambda o, f, g, h: o.restricted_intersection(f, o.extended_union(g, h))
        == o.extended_union(o.restricted_intersection(f, g), o.restricted_intersection(f, h)))),
    Law("distributive_union_over_intersection", _fgh, _guard(
        lambda o, f, g, h: o.extended_union(f, o.restricted_intersection(g, h))
        == o.restricted_intersection(o.extended_union(f, g), o.extended_union(f, h)))),
    Law("absorption_union", _fg, lambda o, f, g: None if not _shares(f, g)
        else o.extended_union(f, o.restricted_intersection(f, g)) == f),
    Law("absorption_intersection", _fg, lambda o, f, g: None if not _shares(f, g)
        else o.restricted_intersection(f, o.extended_union(f, g)) == f),
    Law("de_morgan_union", _fg, lambda o, f, g: o.complement(o.extended_union(f, g))
        == o.extended_intersection(o.complement(f), o.complement(g))),
    Law("de_morgan_extended_intersection", _fg, lambda o, f, g: o.complement(o.extended_intersection(f, g))
        == o.extended_union(o.complement(f), o.complement(g))),
    Law("complement_involution", lambda i: (i.f,), lambda o, f: o.complement(o.complement(f)) == f),
    Law("subset_of_dominating", lambda i: (i.f, i.sup), lambda o, f, sup: o.subset(f, sup)),
    Law("order_subset_intersection", lambda i: (i.f, i.sup), _order_intersection),
    Law("order_subset_union", lambda i: (i.f, i.sup), _order_union),
    Law("product_cardinality", _fg, _product_cardinality),
    Law("product_diagonal", lambda i: (i.f,), _product_diagonal),
    Law("grade_order_agreement", lambda i: (i.a, i.b), _grade_order),
    Law("grade_lattice", lambda i: (i.a, i.b, i.c), _grade_lattice),
]


# -- shrinking ---------------------------------------------------------------

def _drop_object(sets, obj):
    universe = Universe(tuple(o for o in sets[0].universe if o != obj))
    keep = [k for k, o in enumerate(sets[0].universe) if o != obj]
    return tuple(
        BipolarFuzzySoftSet(
            universe,
            [(e, BipolarFuzzySet(universe, tuple(fs.grades[k] for k in keep))) for e, fs in s.items()],
        )
        for s in sets
    )


def _drop_param(sets, idx, param):
    s = sets[idx]
    smaller = BipolarFuzzySoftSet(s.universe, [(e, fs) for e, fs in s.items() if e != param])
    return sets[:idx] + (smaller,) + sets[idx + 1:]


def _candidates(sets):
    if len(sets[0].universe) > 1:
        for obj in sets[0].universe:
            yield _drop_object(sets, obj)
    for idx, s in enumerate(sets):
        if len(s) > 1:
            for e in s.params:
                yield _drop_param(sets, idx, e)


def shrink(law: Law, ops: Ops, operands: tuple) -> tuple:
    """Greedy shrink: keep any one-step reduction that still violates the law."""
    if not law.on_soft_sets:
        return operands
    current = operands
    progress = True
    while progress:
        progress = False
        for cand in _candidates(current):
            if law.check(ops, *cand) is False:
                current = cand
                progress = True
                break
    return current


# -- runner ------------------------------------------------------------------

@dataclass
class LawResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: tuple | None = None
    trial: int | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class LawReport:
    trials: int
    seed: int
    results: list[LawResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def __getitem__(self, name: str) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def run_laws(
    trials: int = 1000,
    seed: int = 42,
    max_objects: int = 6,
    max_params: int = 5,
    ops: Ops | None = None,
    laws: list[Law] | None = None,
    on_instance: Callable[[Instance], None] | None = None,
) -> LawReport:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if max_objects < 1 or max_params < 1:
        raise ValueError("max_objects and max_params must be at least 1")
    ops = ops or Ops()
    laws = LAWS if laws is None else laws
    report = LawReport(trials, seed, [LawResult(law.name) for law in laws])
    for t in range(trials):
        inst = random_instance(trial_rng(seed, t), max_objects, max_params)
        if on_instance is not None:
            on_instance(inst)
        for law, res in zip(laws, report.results):
            operands = law.pick(inst)
            verdict = law.check(ops, *operands)
            if verdict is None:
                res.skipped += 1
            elif verdict:
                res.passed += 1
            else:
                res.failed += 1
                if res.counterexample is None:
                    res.counterexample = shrink(law, ops, operands)
                    res.trial = t
    return report
