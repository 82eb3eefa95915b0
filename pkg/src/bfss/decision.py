"""Score-table ranking of objects described by a bipolar fuzzy soft set.

Pipeline: restrict to the chosen parameters, split into positive and
negative value tables, count pairwise dominance per parameter, turn each
comparison table into row-sum minus column-sum scores, and subtract the
non-membership score from the membership score.

Dominance for the negative table counts parameters where object ``i`` has
the *stronger or equal* counter-property (``d_i <= d_j``), so an object with
more pronounced negatives gets a larger non-membership score, which the final
subtraction penalises.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .algebra import BipolarFuzzySoftSet
from .core import Degree
from .errors import EmptyChoice, UnknownParameter


class Polarity(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class ValueTable:
    objects: tuple[str, ...]
    params: tuple[str, ...]
    cells: tuple[tuple[Degree, ...], ...]
    polarity: Polarity

    def __post_init__(self):
        if len(self.cells) != len(self.objects):
            raise ValueError("value table needs one row per object")
        for row in self.cells:
            if len(row) != len(self.params):
                raise ValueError("value table needs one column per parameter")
            for d in row:
                if self.polarity is Polarity.POSITIVE and d.units < 0:
                    raise ValueError(f"positive table holds negative degree {d}")
                if self.polarity is Polarity.NEGATIVE and d.units > 0:
                    raise ValueError(f"negative table holds positive degree {d}")

    def row(self, obj: str) -> tuple[Degree, ...]:
        return self.cells[self.objects.index(obj)]

    def units(self) -> np.ndarray:
        return np.array([[d.units for d in row] for row in self.cells], dtype=np.int64).reshape(
            len(self.objects), len(self.params)
        )


@dataclass(frozen=True)
class ComparisonTable:
    """``counts[i][j]``: parameters on which object i dominates or ties object j."""

    objects: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]
    n_params: int

    def __post_init__(self):
        n = len(self.objects)
        if len(self.counts) != n or any(len(r) != n for r in self.counts):
            raise ValueError("comparison table must be square over its objects")
        for i in range(n):
            if self.counts[i][i] != self.n_params:
                raise ValueError("diagonal must equal the number of parameters")
            for j in range(n):
                c = self.counts[i][j]
                if not 0 <= c <= self.n_params:
                    raise ValueError(f"count {c} outside [0, {self.n_params}]")
                if c + self.counts[j][i] < self.n_params:
                    raise ValueError("every parameter must be won by at least one side")

    def __getitem__(self, pair: tuple[str, str]) -> int:
        i, j = pair
        return self.counts[self.objects.index(i)][self.objects.index(j)]


@dataclass(frozen=True)
class ScoreRow:
    obj: str
    row_sum: int
    col_sum: int
    score: int


@dataclass(frozen=True)
class ScoreTable:
    rows: tuple[ScoreRow, ...]

    def __getitem__(self, obj: str) -> ScoreRow:
        for r in self.rows:
            if r.obj == obj:
                return r
        raise KeyError(obj)

    @property
    def scores(self) -> dict[str, int]:
        return {r.obj: r.score for r in self.rows}


@dataclass(frozen=True)
class FinalRow:
    obj: str
    membership: int
    nonmembership: int
    final: int


@dataclass(frozen=True)
class DecisionReport:
    params: tuple[str, ...]
    positive_values: ValueTable
    negative_values: ValueTable
    positive_comparison: ComparisonTable
    negative_comparison: ComparisonTable
    membership: ScoreTable
    nonmembership: ScoreTable
    final: tuple[FinalRow, ...]
    ranking: tuple[str, ...]
    winners: frozenset

    @property
    def objects(self) -> tuple[str, ...]:
        return self.positive_values.objects

    @property
    def final_scores(self) -> dict[str, int]:
        return {r.obj: r.final for r in self.final}

    @property
    def best_score(self) -> int:
        return max(r.final for r in self.final)

    def tiers(self) -> list[tuple[int, frozenset]]:
        """Groups of tied objects, best score first."""
        scores = self.final_scores
        levels = sorted(set(scores.values()), reverse=True)
        return [(s, frozenset(o for o, v in scores.items() if v == s)) for s in levels]

    def winners_in_order(self) -> list[str]:
        return [o for o in self.objects if o in self.winners]


def restrict(f: BipolarFuzzySoftSet, chosen: Iterable[str]) -> BipolarFuzzySoftSet:
    chosen = list(chosen)
    if not chosen:
        raise EmptyChoice("at least one parameter must be chosen")
    if len(set(chosen)) != len(chosen):
        raise ValueError(f"duplicate parameter in choice {chosen}")
    unknown = [p for p in chosen if p not in f]
    if unknown:
        raise UnknownParameter(
            f"unknown parameter(s) {', '.join(unknown)}; available: {', '.join(f.params)}"
        )
    return BipolarFuzzySoftSet(f.universe, [(p, f[p]) for p in chosen])


def value_tables(f: BipolarFuzzySoftSet) -> tuple[ValueTable, ValueTable]:
    if len(f) == 0:
        raise EmptyChoice("soft set has no parameters")
    objects = f.universe.objects
    params = f.params
    pos = tuple(tuple(f[p].grades[i].pos for p in params) for i in range(len(objects)))
    neg = tuple(tuple(f[p].grades[i].neg for p in params) for i in range(len(objects)))
    return (
        ValueTable(objects, params, pos, Polarity.POSITIVE),
        ValueTable(objects, params, neg, Polarity.NEGATIVE),
    )


def comparison_table(t: ValueTable) -> ComparisonTable:
    v = t.units()
    if t.polarity is Polarity.POSITIVE:
        wins = v[:, None, :] >= v[None, :, :]
    else:
        wins = v[:, None, :] <= v[None, :, :]
    counts = wins.sum(axis=2)
    return ComparisonTable(
        t.objects, tuple(tuple(int(c) for c in row) for row in counts), len(t.params)
    )


def score_table(c: ComparisonTable) -> ScoreTable:
    m = np.array(c.counts, dtype=np.int64).reshape(len(c.objects), len(c.objects))
    rows = m.sum(axis=1)
    cols = m.sum(axis=0)
    return ScoreTable(
        tuple(
            ScoreRow(o, int(r), int(k), int(r - k)) for o, r, k in zip(c.objects, rows, cols)
        )
    )


def decide(f: BipolarFuzzySoftSet, chosen: Sequence[str] | None = None) -> DecisionReport:
    data = restrict(f, f.params if chosen is None else chosen)
    pos_t, neg_t = value_tables(data)
    pos_c, neg_c = comparison_table(pos_t), comparison_table(neg_t)
    mem, non = score_table(pos_c), score_table(neg_c)
    final = tuple(
        FinalRow(a.obj, a.score, b.score, a.score - b.score) for a, b in zip(mem.rows, non.rows)
    )
    order = {o: i for i, o in enumerate(data.universe.objects)}
    ranking = tuple(r.obj for r in sorted(final, key=lambda r: (-r.final, order[r.obj])))
    best = max(r.final for r in final)
    return DecisionReport(
        params=data.params,
        positive_values=pos_t,
        negative_values=neg_t,
        positive_comparison=pos_c,
        negative_comparison=neg_c,
        membership=mem,
        nonmembership=non,
        final=final,
        ranking=ranking,
        winners=frozenset(r.obj for r in final if r.final == best),
    )
