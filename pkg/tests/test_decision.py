import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfss.algebra import BipolarFuzzySoftSet
from bfss.core import BipolarFuzzySet, BipolarGrade, Degree, Universe
from bfss.decision import (
    ComparisonTable,
    Polarity,
    ValueTable,
    comparison_table,
    decide,
    restrict,
    score_table,
    value_tables,
)
from bfss.errors import EmptyChoice, UnknownParameter

from strategies import soft_sets, universes

CHOICE = ["e1", "e2", "e5"]

TABLE_1 = [["0.4", "0.5", "0.7"], ["0.6", "0.3", "0.5"], ["0.8", "0.4", "0.6"], ["0.5", "0.7", "0.4"]]
TABLE_2 = [[3, 2, 2, 1], [1, 3, 0, 2], [1, 3, 3, 2], [2, 1, 1, 3]]
TABLE_3 = [(8, 7, 1), (6, 9, -3), (9, 6, 3), (7, 8, -1)]
TABLE_4 = [["-0.5", "-0.5", "0"], ["-0.3", "-0.1", "-0.3"], ["-0.2", "-0.4", "-0.3"], ["-0.2", "-0.3", "-0.4"]]
TABLE_5 = [[3, 2, 2, 2], [1, 3, 2, 1], [1, 2, 3, 2], [1, 2, 2, 3]]
TABLE_6 = [(9, 6, 3), (7, 9, -2), (8, 9, -1), (8, 8, 0)]
TABLE_7 = [(1, 3, -2), (-3, -2, -1), (3, -1, 4), (-1, 0, -1)]


@pytest.fixture
def cars(load):
    return load("cars_decision")


def oracle_counts(s: BipolarFuzzySoftSet, polarity: str):
    """Straight triple loop over the soft set itself."""
    objs = s.universe.objects
    out = []
    for i in objs:
        row = []
        for j in objs:
            n = 0
            for e in s.params:
                gi, gj = s[e][i], s[e][j]
                if polarity == "positive":
                    if gi.pos.units >= gj.pos.units:
                        n += 1
                else:
                    if gi.neg.units <= gj.neg.units:
                        n += 1
            row.append(n)
        out.append(row)
    return out


def test_restrict(cars):
    r = restrict(cars, CHOICE)
    assert r.params == tuple(CHOICE)
    assert all(r[e] == cars[e] for e in CHOICE)
    assert restrict(cars, cars.params) == cars
    with pytest.raises(UnknownParameter, match="e9"):
        restrict(cars, ["e9"])
    with pytest.raises(EmptyChoice):
        restrict(cars, [])


def test_value_tables_match_golden(cars):
    pos, neg = value_tables(restrict(cars, CHOICE))
    assert [[str(d) for d in row] for row in pos.cells] == TABLE_1
    assert [[str(d) for d in row] for row in neg.cells] == TABLE_4
    assert pos.polarity is Polarity.POSITIVE and neg.polarity is Polarity.NEGATIVE


def test_comparison_tables_match_golden(cars):
    pos, neg = value_tables(restrict(cars, CHOICE))
    assert [list(r) for r in comparison_table(pos).counts] == TABLE_2
    assert [list(r) for r in comparison_table(neg).counts] == TABLE_5


def test_score_tables_match_golden(cars):
    pos, neg = value_tables(restrict(cars, CHOICE))
    mem = score_table(comparison_table(pos))
    non = score_table(comparison_table(neg))
    assert [(r.row_sum, r.col_sum, r.score) for r in mem.rows] == TABLE_3
    assert [(r.row_sum, r.col_sum, r.score) for r in non.rows] == TABLE_6


def test_decision_matches_golden(cars):
    report = decide(cars, CHOICE)
    assert [(r.membership, r.nonmembership, r.final) for r in report.final] == TABLE_7
    assert report.winners == {"c3"}
    assert report.best_score == 4
    tiers = report.tiers()
    assert tiers[0] == (4, {"c3"})
    assert tiers[1] == (-1, {"c2", "c4"})
    assert report.ranking == ("c3", "c2", "c4", "c1")


def test_geq_on_negative_table_does_not_reproduce_golden(cars):
    # pins the direction choice: counting d_i >= d_j on negatives gives a different table
    _, neg = value_tables(restrict(cars, CHOICE))
    geq = [[sum(a >= b for a, b in zip(ri, rj)) for rj in neg.cells] for ri in neg.cells]
    assert geq != TABLE_5


def test_single_object_single_parameter():
    u = Universe(("only",))
    s = BipolarFuzzySoftSet.from_rows(u, {"p": [(0.3, -0.2)]})
    pos, neg = value_tables(s)
    assert pos.cells == ((Degree.of("0.3"),),) and neg.cells == ((Degree.of("-0.2"),),)
    report = decide(s)
    assert report.winners == {"only"} and report.final_scores == {"only": 0}


def test_symmetric_table_scores_zero():
    c = ComparisonTable(("a", "b", "c"), ((2, 1, 2), (1, 2, 1), (2, 1, 2)), 2)
    assert all(r.score == 0 for r in score_table(c).rows)


def test_comparison_table_invariants_are_enforced():
    with pytest.raises(ValueError, match="diagonal"):
        ComparisonTable(("a", "b"), ((1, 1), (1, 2)), 2)
    with pytest.raises(ValueError):
        ComparisonTable(("a", "b"), ((2, 0), (1, 2)), 2)


def test_value_table_polarity_is_checked():
    with pytest.raises(ValueError):
        ValueTable(("a",), ("p",), ((Degree.of("-0.1"),),), Polarity.POSITIVE)


def test_decide_defaults_to_all_parameters(cars):
    assert decide(cars).params == cars.params


def test_decide_is_deterministic(cars):
    assert decide(cars, CHOICE) == decide(cars, CHOICE)


# -- randomized properties -------------------------------------------------------

@st.composite
def datasets(draw, max_objects=5, max_params=4):
    u = draw(universes(max_size=max_objects))
    pool = tuple(f"p{i}" for i in range(max_params))
    return draw(soft_sets(u, pool=pool))


@settings(max_examples=200)
@given(datasets())
def test_counts_match_oracle(s):
    pos, neg = value_tables(s)
    assert [list(r) for r in comparison_table(pos).counts] == oracle_counts(s, "positive")
    assert [list(r) for r in comparison_table(neg).counts] == oracle_counts(s, "negative")


@given(datasets())
def test_structural_invariants(s):
    report = decide(s)
    k = len(s)
    for table in (report.positive_comparison, report.negative_comparison):
        n = len(table.objects)
        for i in range(n):
            assert table.counts[i][i] == k
            for j in range(n):
                assert table.counts[i][j] + table.counts[j][i] - k >= 0
    assert sum(report.membership.scores.values()) == 0
    assert sum(report.nonmembership.scores.values()) == 0
    assert sum(report.final_scores.values()) == 0
    assert sorted(report.ranking) == sorted(s.universe.objects)


@given(datasets())
def test_tie_count_identity(s):
    pos, _ = value_tables(s)
    c = comparison_table(pos)
    for a, i in enumerate(s.universe.objects):
        for b, j in enumerate(s.universe.objects):
            ties = sum(1 for e in s.params if s[e][i].pos == s[e][j].pos)
            assert c.counts[a][b] + c.counts[b][a] - len(s) == ties


def _bump(s, obj, param, delta):
    rows = []
    for e, fs in s.items():
        grades = list(fs.grades)
        if e == param:
            k = s.universe.index(obj)
            g = grades[k]
            grades[k] = BipolarGrade(Degree(min(10_000, g.pos.units + delta)), g.neg)
        rows.append((e, BipolarFuzzySet(s.universe, tuple(grades))))
    return BipolarFuzzySoftSet(s.universe, rows)


@given(datasets(), st.data())
def test_raising_a_positive_degree_never_hurts(s, data):
    obj = data.draw(st.sampled_from(s.universe.objects))
    param = data.draw(st.sampled_from(s.params))
    delta = data.draw(st.integers(0, 10_000))
    before = decide(s).membership[obj]
    after = decide(_bump(s, obj, param, delta)).membership[obj]
    assert after.row_sum >= before.row_sum
    assert after.col_sum <= before.col_sum
    assert after.score >= before.score


@given(datasets(), st.randoms(use_true_random=False))
def test_relabeling_preserves_winners(s, rnd):
    order = list(s.universe.objects)
    rnd.shuffle(order)
    u2 = Universe(tuple(order))
    s2 = BipolarFuzzySoftSet(
        u2, [(e, BipolarFuzzySet.from_mapping(u2, dict(fs.items()))) for e, fs in s.items()]
    )
    r1, r2 = decide(s), decide(s2)
    assert r1.winners == r2.winners
    assert r1.final_scores == r2.final_scores
    idx = {o: i for i, o in enumerate(order)}
    assert r2.ranking == tuple(sorted(order, key=lambda o: (-r2.final_scores[o], idx[o])))


def test_oracle_on_seeded_batch():
    rng = random.Random(7)
    for _ in range(500):
        n, k = rng.randint(1, 5), rng.randint(1, 4)
        u = Universe(tuple(f"o{i}" for i in range(n)))
        s = BipolarFuzzySoftSet.from_rows(
            u, {f"p{j}": [(rng.randint(0, 10) / 10, -rng.randint(0, 10) / 10) for _ in range(n)] for j in range(k)}
        )
        pos, neg = value_tables(s)
        assert [list(r) for r in comparison_table(pos).counts] == oracle_counts(s, "positive")
        assert [list(r) for r in comparison_table(neg).counts] == oracle_counts(s, "negative")
