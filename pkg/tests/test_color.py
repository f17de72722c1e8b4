import itertools
import random

import pytest

from tperfect.color import Coloring, ColoringError, exact_k_color, three_color
from tperfect.graph import Graph, enumerate_nonisomorphic
from tperfect.patterns import (
    c7_squared,
    complete,
    cycle,
    figure3,
    is_fork_free,
    path,
    wheel,
)
from tperfect.recognize import recognize
from tperfect.tminor import TMinorSearch


def naive_chromatic(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for assignment in itertools.product(range(k), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in g.edges):
                return k
    return 0


class TestExactKColor:
    def test_c5_needs_three(self):
        assert exact_k_color(cycle(5), 2) is None
        got = exact_k_color(cycle(5), 3)
        assert got is not None
        assert all(got[u] != got[v] for u, v in cycle(5).edges)

    def test_triangle(self):
        assert exact_k_color(complete(3), 3) is not None
        assert exact_k_color(complete(3), 2) is None

    def test_c7_squared_needs_four(self):
        assert exact_k_color(c7_squared(), 3) is None
        assert exact_k_color(c7_squared(), 4) is not None

    def test_empty_and_bad_k(self):
        assert exact_k_color(Graph(0, []), 1) == ()
        with pytest.raises(Exception, match="positive"):
            exact_k_color(cycle(5), 0)

    def test_matches_brute_force_chromatic(self):
        rng = random.Random(5)
        levels = enumerate_nonisomorphic(5)
        for g in rng.sample(levels[5], 20):
            chi = naive_chromatic(g)
            assert exact_k_color(g, chi) is not None
            if chi > 1:
                assert exact_k_color(g, chi - 1) is None


class TestThreeColor:
    def test_c5(self):
        got = three_color(cycle(5))
        assert got.num_colors == 3
        assert got.is_proper(cycle(5))

    def test_bipartite_uses_two(self):
        got = three_color(path(6))
        assert got.num_colors == 2

    def test_rejects_non_t_perfect(self):
        with pytest.raises(ColoringError, match="t-perfect"):
            three_color(complete(4))

    def test_structural_branch_tags(self):
        g, _ = figure3("b", ["u1-", "u3-"])
        got = three_color(g)
        assert got.is_proper(g) and got.num_colors <= 3
        tags = {tag for _, tag in got.branches}
        assert tags <= {
            "perfect", "claw-free",
            "structural-case-U3-empty",
            "structural-case-U5-empty",
            "structural-case-U5plus-nonempty",
        }
        assert any(tag.startswith("structural-case") for tag in tags)

    def test_figure3b_partition_matches_a_literal_case(self):
        # the output classes must equal one of the three case partitions
        # under some renumbering of the hole; check the simplest invariant:
        # every class is independent and the hole is split 1/2/2
        g, labels = figure3("b")
        got = three_color(g)
        hole = [labels[f"v{i}"] for i in range(1, 6)]
        sizes = sorted(
            sum(1 for v in hole if got.colors[v] == c) for c in range(3)
        )
        assert sizes == [1, 2, 2]

    def test_components_colored_independently(self):
        # C5 plus a disjoint edge
        g = Graph(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, 6)])
        got = three_color(g)
        assert got.is_proper(g) and got.num_colors == 3
        assert len(got.branches) == 2

    def test_classes_partition_vertices(self):
        g, _ = figure3("a", ["u2-", "u4-"])
        got = three_color(g)
        assert sorted(itertools.chain.from_iterable(got.classes())) == list(
            range(g.n)
        )

    def test_verdict_reuse(self):
        g = cycle(5)
        v = recognize(g)
        assert three_color(g, verdict=v).is_proper(g)


class TestSweep:
    def test_all_t_perfect_fork_free_up_to_six(self):
        # cross-check: proper, <= 3 colors, and exactly chi(g) colors
        search = TMinorSearch()
        levels = enumerate_nonisomorphic(6, keep=is_fork_free)
        checked = 0
        for n in range(1, 7):
            for g in levels[n]:
                verdict = recognize(g, search=search)
                if not verdict.is_t_perfect:
                    continue
                got = three_color(g, verdict=verdict, search=search)
                assert got.is_proper(g)
                assert got.num_colors <= 3
                if exact_k_color(g, 2) is None and g.edges:
                    assert got.num_colors == 3
                elif g.edges:
                    assert got.num_colors <= 2
                checked += 1
        # 138 nonisomorphic t-perfect fork-free graphs up to order 6
        assert checked == 138
