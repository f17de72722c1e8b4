import itertools
import random
from fractions import Fraction

import pytest

from tperfect.graph import Graph, GraphError, enumerate_nonisomorphic
from tperfect.holes import independent_sets, maximal_independent_sets
from tperfect.patterns import (
    c7_squared,
    c10_squared,
    complete,
    cycle,
    figure3,
    path,
    wheel,
)
from tperfect.polytope import (
    ConstraintSystem,
    Row,
    alpha_w,
    build_system,
    cover_elements,
    enumerate_odd_cycles,
    enumerate_vertices,
    min_w_cover,
    satisfies_all,
    strong_t_perfect_check,
    t_perfect_oracle,
    tight_rows,
)


def _rank(rows: list[tuple[int, ...]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


class TestBuildSystem:
    def test_c5_row_counts(self):
        s = build_system(cycle(5))
        assert len(s.rows_of_kind("lower-bound")) == 5
        assert len(s.rows_of_kind("upper-bound")) == 5
        assert len(s.rows_of_kind("edge")) == 5
        odd = s.rows_of_kind("odd-cycle")
        assert len(odd) == 1 and odd[0].rhs == 2

    def test_k4_row_counts(self):
        s = build_system(complete(4))
        assert len(s.rows_of_kind("edge")) == 6
        odd = s.rows_of_kind("odd-cycle")
        assert len(odd) == 4 and all(r.rhs == 1 for r in odd)

    def test_edgeless_bounds_only(self):
        s = build_system(Graph(3))
        assert len(s.rows) == 6


class TestEnumerateVertices:
    def test_k4_fractional_point(self):
        pts = enumerate_vertices(build_system(complete(4)))
        third = Fraction(1, 3)
        fractional = [p for p in pts if any(x.denominator != 1 for x in p)]
        assert fractional == [(third, third, third, third)]

    def test_c5_eleven_integral_vertices(self):
        g = cycle(5)
        pts = enumerate_vertices(build_system(g))
        assert len(pts) == 11
        expected = {
            tuple(Fraction(1 if v in s else 0) for v in range(5))
            for s in independent_sets(g)
        }
        assert set(pts) == expected

    def test_single_edge(self):
        g = Graph(2, [(0, 1)])
        pts = enumerate_vertices(build_system(g))
        assert set(pts) == {
            (Fraction(0), Fraction(0)),
            (Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(1)),
        }

    def test_vertices_satisfy_all_rows_and_have_full_rank_tight_sets(self):
        for g in (complete(4), cycle(5), wheel(5)):
            system = build_system(g)
            for p in enumerate_vertices(system):
                assert satisfies_all(system, p)
                tight = tight_rows(system, p)
                assert len(tight) >= g.n
                coeff_rows = [system.rows[i].coeffs for i in tight]
                assert _rank(coeff_rows) == g.n

    def test_non_induced_cycle_rows_are_redundant(self):
        rng = random.Random(5)
        level = enumerate_nonisomorphic(6)
        for g in rng.sample(level[6], 12) + level[5]:
            base = build_system(g)
            extra = []
            for cyc in enumerate_odd_cycles(g):
                members = set(cyc)
                coeffs = tuple(1 if v in members else 0 for v in range(g.n))
                row = Row(coeffs, (len(cyc) - 1) // 2, "odd-cycle", tuple(cyc))
                if row not in base.rows:
                    extra.append(row)
            augmented = ConstraintSystem(g.n, base.rows + tuple(extra))
            assert set(enumerate_vertices(augmented)) == set(
                enumerate_vertices(base)
            )


class TestOracle:
    def test_k4_not_t_perfect(self):
        assert not t_perfect_oracle(complete(4))

    def test_c5_t_perfect(self):
        assert t_perfect_oracle(cycle(5))

    def test_minimally_imperfect_family(self):
        for g in (wheel(5), c7_squared(), c10_squared()):
            assert not t_perfect_oracle(g)

    def test_lp_maximum_matches_alpha_on_t_perfect_graphs(self):
        rng = random.Random(11)
        for g in (cycle(5), cycle(7), path(5), figure3("b")[0]):
            assert t_perfect_oracle(g)
            pts = enumerate_vertices(build_system(g))
            for _ in range(50):
                w = [rng.randrange(4) for _ in range(g.n)]
                lp = max(sum(c * x for c, x in zip(w, p)) for p in pts)
                assert lp == alpha_w(g, w)


class TestAlpha:
    def test_c5_uniform(self):
        assert alpha_w(cycle(5), [1] * 5) == 2

    def test_k4_uniform(self):
        assert alpha_w(complete(4), [1] * 4) == 1

    def test_c5_weighted(self):
        assert alpha_w(cycle(5), (2, 1, 1, 1, 1)) == 3

    def test_matches_brute_force(self):
        rng = random.Random(3)
        for g in enumerate_nonisomorphic(5)[5]:
            w = [rng.randrange(4) for _ in range(g.n)]
            brute = max(sum(w[v] for v in s) for s in independent_sets(g))
            assert alpha_w(g, w) == brute

    def test_rejects_negative_weights(self):
        with pytest.raises(GraphError):
            alpha_w(cycle(5), [1, 1, 1, 1, -1])


class TestCovers:
    def test_c5_uniform_cover_is_the_cycle(self):
        cover = min_w_cover(cycle(5), [1] * 5)
        assert cover.cost == 2
        (elem, mult), = cover.elements
        assert elem.kind == "odd-cycle" and mult == 1

    def test_single_edge(self):
        cover = min_w_cover(Graph(2, [(0, 1)]), [1, 1])
        assert cover.cost == 1
        (elem, _), = cover.elements
        assert elem.kind == "edge"

    def test_zero_weights_empty_cover(self):
        cover = min_w_cover(cycle(5), [0] * 5)
        assert cover.cost == 0 and cover.elements == ()

    def test_coverage_meets_demand(self):
        rng = random.Random(9)
        for g in (cycle(5), complete(4), figure3("b")[0]):
            for _ in range(10):
                w = [rng.randrange(3) for _ in range(g.n)]
                cover = min_w_cover(g, w)
                cov = cover.coverage(g.n)
                assert all(c >= d for c, d in zip(cov, w))

    def test_weak_duality(self):
        rng = random.Random(13)
        for g in rng.sample(enumerate_nonisomorphic(5)[5], 15):
            for _ in range(5):
                w = [rng.randrange(3) for _ in range(g.n)]
                assert min_w_cover(g, w).cost >= alpha_w(g, w)

    def test_ground_set_includes_non_induced_cycles(self):
        # wheel(5) has non-induced 5-cycles through the hub
        elems = cover_elements(wheel(5))
        cycles = [e for e in elems if e.kind == "odd-cycle"]
        assert any(len(e.vertices) == 5 and 5 in e.vertices for e in cycles)

    def test_deterministic_tie_breaking(self):
        a = min_w_cover(cycle(5), (1, 0, 1, 0, 0))
        b = min_w_cover(cycle(5), (1, 0, 1, 0, 0))
        assert a == b


class TestStrongCheck:
    def test_c5_passes(self):
        report = strong_t_perfect_check(cycle(5), 2)
        assert report.passed and report.checked == 3 ** 5
        assert report.describe() == "pass up to w_max=2 (243 weightings)"

    def test_figure3_b_passes(self):
        g, _ = figure3("b")
        assert strong_t_perfect_check(g, 1).passed

    def test_k4_violation_at_uniform_weights(self):
        report = strong_t_perfect_check(complete(4), 1)
        assert not report.passed
        w, alpha, cost = report.violation
        assert w == (1, 1, 1, 1) and alpha == 1 and cost == 2
        assert "violation" in report.describe()

    def test_rejects_negative_wmax(self):
        with pytest.raises(GraphError):
            strong_t_perfect_check(cycle(5), -1)
