"""Optimal (<= 3 color) coloring of recognized-t-perfect fork-free graphs.

Components without odd holes and claw-free components get an exact
backtracking coloring; the remaining components are colored from the
five-hole partition, following the three literal structural cases.  The
fourth structural case is provably impossible and coded as a hard error.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, GraphError, connected_components, induced_subgraph
from .holes import Hole, enumerate_induced_odd_cycles, hole_partition, satisfies_star
from .patterns import contains_claw
from .recognize import T_PERFECT, Verdict, recognize
from .tminor import TMinorSearch


class ColoringError(GraphError):
    pass


class StructuralCaseExhausted(ColoringError):
    """No five-hole renumbering produced a colorable case; this signals a
    recognizer bug, not a property of valid inputs."""


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    branches: tuple[tuple[tuple[int, ...], str], ...]  # (component, branch tag)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors)) if self.colors else 0

    def classes(self) -> list[tuple[int, ...]]:
        used = sorted(set(self.colors))
        return [
            tuple(v for v, c in enumerate(self.colors) if c == color)
            for color in used
        ]

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)


def exact_k_color(g: Graph, k: int) -> Optional[tuple[int, ...]]:
    """A proper k-coloring or None; backtracking seeded with a greedy
    maximal clique."""
    if k < 1:
        raise GraphError(f"color count must be positive, got {k}")
    if g.n == 0:
        return ()
    adj = [g.neighbor_mask(v) for v in range(g.n)]
    # greedy maximal clique for seeding and an early lower bound
    clique: list[int] = []
    pool = max(range(g.n), key=g.degree)
    cand = adj[pool] | (1 << pool)
    while cand:
        best = max(
            (v for v in range(g.n) if cand >> v & 1),
            key=lambda v: (adj[v] & cand).bit_count(),
        )
        clique.append(best)
        cand &= adj[best]
    if len(clique) > k:
        return None
    colors: list[int] = [-1] * g.n
    for i, v in enumerate(clique):
        colors[v] = i
    order = [v for v in sorted(range(g.n), key=g.degree, reverse=True) if colors[v] < 0]

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {colors[u] for u in range(g.n) if adj[v] >> u & 1 and colors[u] >= 0}
        limit = min(k, (max(colors) if any(c >= 0 for c in colors) else -1) + 2)
        for c in range(limit):
            if c in used:
                continue
            colors[v] = c
            if extend(i + 1):
                return True
            colors[v] = -1
        return False

    if extend(0):
        return tuple(colors)
    return None


def _min_color(g: Graph, k_max: int = 3) -> tuple[int, ...]:
    for k in range(1, k_max + 1):
        got = exact_k_color(g, k)
        if got is not None:
            return got
    raise ColoringError(f"graph is not {k_max}-colorable")


_DIHEDRAL_5 = [
    tuple((s + d * i) % 5 for i in range(5))
    for d in (1, 4)
    for s in range(5)
]


def _structural_classes(g: Graph) -> Optional[tuple[list[list[int]], str]]:
    holes = enumerate_induced_odd_cycles(g, 5, 5)
    for hole in holes:
        if not satisfies_star(g, hole):
            continue
        base = hole.vertices
        for relab in _DIHEDRAL_5:
            renum = Hole(tuple(base[i] for i in relab))
            p = hole_partition(g, renum)
            if not p.plus(1) or p.part(4):
                continue
            v = [None] + [p.hole_vertex(i) for i in range(1, 6)]
            if not p.part(3):
                classes = [
                    list(p.part(5)) + [v[4]],
                    list(p.part(1)) + [v[2], v[5]],
                    list(p.part(2)) + [v[1], v[3]],
                ]
                tag = "structural-case-U3-empty"
            elif not p.part(5):
                classes = [
                    list(p.part(1)) + [v[5]],
                    list(p.part(2)) + [v[1], v[3]],
                    list(p.part(3)) + [v[2], v[4]],
                ]
                tag = "structural-case-U5-empty"
            elif p.plus(5):
                classes = [
                    list(p.part(1)) + [v[2], v[5]],
                    list(p.part(3)) + [v[3]],
                    list(p.part(5)) + [v[1], v[4]],
                ]
                tag = "structural-case-U5plus-nonempty"
            else:
                # U5 = U5^-: provably impossible on recognized inputs
                raise StructuralCaseExhausted(
                    "reached the impossible structural case U5 = U5^-; "
                    "the recognizer accepted a graph it should not have"
                )
            covered = sorted(itertools.chain.from_iterable(classes))
            if covered != sorted(p.component):
                continue  # a U-set escaped the three classes; try another frame
            return classes, tag
    return None


def three_color(
    g: Graph,
    verdict: Optional[Verdict] = None,
    search: Optional[TMinorSearch] = None,
) -> Coloring:
    """A proper coloring with at most three colors of a t-perfect fork-free
    graph; rechecked edge-by-edge before returning."""
    if verdict is None:
        verdict = recognize(g, search=search)
    if verdict.answer != T_PERFECT:
        raise ColoringError(
            f"three_color needs a t-perfect input, recognizer said "
            f"{verdict.answer}"
        )
    colors: list[int] = [-1] * g.n
    branches: list[tuple[tuple[int, ...], str]] = []
    for comp in connected_components(g):
        sub, comp_map = induced_subgraph(g, comp)
        if not enumerate_induced_odd_cycles(sub, 5):
            local = _min_color(sub)
            tag = "perfect"
        elif not contains_claw(sub):
            local = _min_color(sub)
            tag = "claw-free"
        else:
            structural = _structural_classes(sub)
            if structural is None:
                raise StructuralCaseExhausted(
                    "no five-hole renumbering with U1+ nonempty and U4 empty"
                )
            classes, tag = structural
            local_list = [-1] * sub.n
            for color, members in enumerate(classes):
                for v in members:
                    local_list[v] = color
            local = tuple(local_list)
        for v_new, c in enumerate(local):
            colors[comp_map[v_new]] = c
        branches.append((comp, tag))
    result = Coloring(tuple(colors), tuple(branches))
    if not result.is_proper(g) or (g.n and max(result.colors) > 2):
        raise ColoringError("constructed coloring failed verification")
    return result
