"""Induced odd-cycle machinery around five-holes.

Enumeration of induced cycles, the neighbor pattern check on a five-hole
(exactly two consecutive or three nonconsecutive neighbors, plus
domination of the hole's component), the U-partition, the structural
clause checker, and a maximal-independent-set enumerator.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graph import Graph, GraphError, connected_components, is_independent_set


@dataclass(frozen=True)
class Hole:
    """An induced cycle, stored in a canonical rotation/reflection."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def _normalize_cycle(vs: tuple[int, ...]) -> tuple[int, ...]:
    # lexicographically least among all rotations of both orientations
    best = None
    k = len(vs)
    for seq in (vs, tuple(reversed(vs))):
        for r in range(k):
            cand = seq[r:] + seq[:r]
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def enumerate_induced_cycles(g: Graph, min_len: int, max_len: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All induced cycles with min_len <= length <= max_len, one per
    rotation/reflection class.

    Depth-first induced-path extension from a least-labelled anchor:
    a path may only grow by a vertex adjacent to its tip and to no other
    path vertex (the anchor excepted, which closes a cycle).
    """
    if min_len < 3:
        raise GraphError(f"cycle length bound must be >= 3, got {min_len}")
    top = g.n if max_len is None else min(max_len, g.n)
    if top < min_len or g.n == 0:
        return
    adj = [g.neighbor_mask(v) for v in range(g.n)]
    for anchor in range(g.n):
        # anchor is the least vertex of every cycle reported from it
        higher = -1 << (anchor + 1)
        anchor_bit = 1 << anchor
        stack: list[tuple[list[int], int]] = [
            ([anchor, u], anchor_bit | (1 << u))
            for u in g.neighbors(anchor)
            if u > anchor
        ]
        while stack:
            path, mask = stack.pop()
            tip = path[-1]
            interior = mask & ~anchor_bit & ~(1 << tip)
            for w in _mask_bits(adj[tip] & higher & ~mask):
                if adj[w] & interior:
                    continue  # chord to a non-tip path vertex
                if adj[w] & anchor_bit:
                    length = len(path) + 1
                    if min_len <= length <= top and path[1] < w:
                        yield _normalize_cycle(tuple(path) + (w,))
                elif len(path) + 2 <= top:
                    stack.append((path + [w], mask | (1 << w)))


def _mask_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_induced_odd_cycles(g: Graph, min_len: int, max_len: Optional[int] = None) -> list[Hole]:
    """All induced odd cycles in the length window, deduplicated.

    Triangles only appear when min_len == 3.
    """
    out = []
    for cyc in enumerate_induced_cycles(g, min_len, max_len):
        if len(cyc) % 2 == 1:
            out.append(Hole(cyc))
    out.sort(key=lambda h: (len(h), h.vertices))
    return out


def find_odd_hole(g: Graph, min_len: int = 5, max_len: Optional[int] = None) -> Optional[Hole]:
    for cyc in enumerate_induced_cycles(g, min_len, max_len):
        if len(cyc) % 2 == 1:
            return Hole(_normalize_cycle(cyc))
    return None


def _check_hole(g: Graph, hole: Hole, length: int = 5) -> None:
    vs = hole.vertices
    if len(vs) != length or len(set(vs)) != length:
        raise GraphError(f"expected a hole of length {length}, got {vs}")
    k = len(vs)
    for i in range(k):
        for j in range(i + 1, k):
            expected = (j - i == 1) or (i == 0 and j == k - 1)
            if g.adjacent(vs[i], vs[j]) != expected:
                raise GraphError(f"{vs} is not an induced cycle of g")


@dataclass(frozen=True)
class StarReport:
    """Outcome of the five-hole neighbor-pattern check."""

    ok: bool
    witness: Optional[int] = None
    witness_neighbors: tuple[int, ...] = ()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _component_of(g: Graph, vertex: int) -> tuple[int, ...]:
    for comp in connected_components(g):
        if vertex in comp:
            return comp
    raise AssertionError("vertex not in any component")


def _hole_positions(g: Graph, hole: Hole, v: int) -> tuple[int, ...]:
    return tuple(i for i, h in enumerate(hole.vertices) if g.adjacent(v, h))


def _allowed_pattern(positions: tuple[int, ...], length: int = 5) -> Optional[str]:
    """'pair' for two consecutive, 'triple' for three not-all-consecutive."""
    k = len(positions)
    if k == 2:
        a, b = positions
        if (b - a) % length in (1, length - 1):
            return "pair"
        return None
    if k == 3:
        present = set(positions)
        consecutive = any(
            {(s + off) % length for off in range(3)} == present
            for s in range(length)
        )
        return None if consecutive else "triple"
    return None


def satisfies_star(g: Graph, hole: Hole) -> StarReport:
    """Every vertex of the hole's component outside it must see exactly two
    consecutive or three nonconsecutive hole vertices; vertices of the
    component with no neighbor on the hole also fail (the hole must
    dominate its component)."""
    _check_hole(g, hole)
    comp = _component_of(g, hole.vertices[0])
    on_hole = set(hole.vertices)
    for v in comp:
        if v in on_hole:
            continue
        positions = _hole_positions(g, hole, v)
        if not positions:
            return StarReport(False, v, (), "no neighbor on the hole")
        if _allowed_pattern(positions) is None:
            nbrs = tuple(hole.vertices[i] for i in positions)
            return StarReport(
                False, v, nbrs,
                f"neighbors at hole positions {positions} are neither two "
                "consecutive nor three nonconsecutive",
            )
    return StarReport(True)


class PartitionViolation(GraphError):
    """The five-hole partition invariants failed; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class HolePartition:
    """The U-decomposition of a five-hole's component.

    Indexed 1..5: part(i) collects the common neighbors of hole vertices
    i+2 and i+3 (cyclically, 1-based); plus(i)/minus(i) split it by
    adjacency to hole vertex i.
    """

    hole: Hole
    component: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]        # U_1..U_5 as 5 sorted tuples
    plus_parts: tuple[tuple[int, ...], ...]   # U_i^+
    minus_parts: tuple[tuple[int, ...], ...]  # U_i^-

    def part(self, i: int) -> tuple[int, ...]:
        return self.parts[(i - 1) % 5]

    def plus(self, i: int) -> tuple[int, ...]:
        return self.plus_parts[(i - 1) % 5]

    def minus(self, i: int) -> tuple[int, ...]:
        return self.minus_parts[(i - 1) % 5]

    def hole_vertex(self, i: int) -> int:
        return self.hole.vertices[(i - 1) % 5]


def hole_partition(g: Graph, hole: Hole) -> HolePartition:
    """Classify every component vertex outside the hole into its U-set and
    verify all partition invariants, failing loudly otherwise."""
    _check_hole(g, hole)
    comp = _component_of(g, hole.vertices[0])
    vs = hole.vertices
    parts: list[list[int]] = [[] for _ in range(5)]
    plus: list[list[int]] = [[] for _ in range(5)]
    minus: list[list[int]] = [[] for _ in range(5)]
    for v in comp:
        if v in vs:
            continue
        positions = set(_hole_positions(g, hole, v))
        placed = False
        for i in range(5):
            pair = {(i + 2) % 5, (i + 3) % 5}  # 0-based positions of v_{i+2}, v_{i+3}
            if positions == pair:
                parts[i].append(v)
                minus[i].append(v)
                placed = True
                break
            if positions == pair | {i}:
                parts[i].append(v)
                plus[i].append(v)
                placed = True
                break
        if not placed:
            raise PartitionViolation(
                f"vertex {v} (hole neighbors at positions {sorted(positions)}) "
                "fits no U-set", witness=v,
            )
    for i in range(5):
        if len(minus[i]) > 1:
            raise PartitionViolation(
                f"U_{i + 1}^- has {len(minus[i])} vertices {sorted(minus[i])}, "
                "at most one allowed", witness=tuple(minus[i]),
            )
        if not is_independent_set(g, parts[i]):
            raise PartitionViolation(
                f"U_{i + 1} = {sorted(parts[i])} is not independent",
                witness=tuple(parts[i]),
            )
    return HolePartition(
        hole=hole,
        component=comp,
        parts=tuple(tuple(sorted(p)) for p in parts),
        plus_parts=tuple(tuple(sorted(p)) for p in plus),
        minus_parts=tuple(tuple(sorted(p)) for p in minus),
    )


@dataclass(frozen=True)
class ClauseResult:
    anchor: int        # the index i whose nonempty U_i^+ triggered the clause
    clause: str
    passed: bool
    witness: tuple = ()


@dataclass
class StructureReport:
    results: list[ClauseResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[ClauseResult]:
        return [r for r in self.results if not r.passed]


def _complete_between(g: Graph, xs, ys) -> Optional[tuple[int, int]]:
    for x in xs:
        for y in ys:
            if x != y and not g.adjacent(x, y):
                return (x, y)
    return None


def validate_structure(g: Graph, p: HolePartition) -> StructureReport:
    """Check, for every i with U_i^+ nonempty, the five adjacency clauses
    among the U-sets; report pass/fail per clause with witnesses."""
    report = StructureReport()
    for i in range(1, 6):
        if not p.plus(i):
            continue
        miss = _complete_between(g, p.part(i), p.part(i - 2) + p.part(i + 2))
        report.results.append(
            ClauseResult(i, "U_i complete to U_{i-2} u U_{i+2}", miss is None,
                         miss or ())
        )
        miss = _complete_between(g, p.part(i), p.minus(i - 1) + p.minus(i + 1))
        report.results.append(
            ClauseResult(i, "U_i complete to U_{i-1}^- u U_{i+1}^-",
                         miss is None, miss or ())
        )
        miss = _complete_between(g, p.minus(i + 1), p.minus(i + 2))
        report.results.append(
            ClauseResult(i, "U_{i+1}^- complete to U_{i+2}^-", miss is None,
                         miss or ())
        )
        empty_ok = not p.part(i + 2) or not p.part(i - 2)
        report.results.append(
            ClauseResult(i, "one of U_{i+2}, U_{i-2} empty", empty_ok,
                         () if empty_ok else (p.part(i + 2), p.part(i - 2)))
        )
        bad = ()
        ok = True
        for x in p.plus(i):
            for side in (i - 1, i + 1):
                non = [y for y in p.plus(side) if not g.adjacent(x, y)]
                if len(non) > 1:
                    ok = False
                    bad = (x, tuple(non))
        report.results.append(
            ClauseResult(i, "U_i^+ vertex has <=1 non-neighbor in U_{i+-1}^+",
                         ok, bad)
        )
    return report


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """All maximal independent sets (Bron-Kerbosch with pivoting).

    Intended for order up to ~20.
    """
    if g.n == 0:
        return [()]
    adj = [g.neighbor_mask(v) for v in range(g.n)]
    full = (1 << g.n) - 1
    comp = [~adj[v] & full & ~(1 << v) for v in range(g.n)]
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(_mask_bits(r)))
            return
        pivot_pool = p | x
        pivot = max(_mask_bits(pivot_pool), key=lambda v: (comp[v] & p).bit_count())
        for v in _mask_bits(p & ~comp[pivot]):
            expand(r | (1 << v), p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    out.sort()
    return out


def independent_sets(g: Graph) -> Iterator[tuple[int, ...]]:
    """All independent sets (including non-maximal ones and the empty set)."""
    adj = [g.neighbor_mask(v) for v in range(g.n)]

    def rec(start: int, chosen: list[int], forbidden: int) -> Iterator[tuple[int, ...]]:
        yield tuple(chosen)
        for v in range(start, g.n):
            if forbidden >> v & 1:
                continue
            chosen.append(v)
            yield from rec(v + 1, chosen, forbidden | adj[v] | (1 << v))
            chosen.pop()

    yield from rec(0, [], 0)
