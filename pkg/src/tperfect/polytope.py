"""Exact polyhedral core: the vertex/edge/odd-cycle inequality system, its
vertex enumeration over exact rationals, weighted independence numbers,
and minimum-cost covers.

No floating point anywhere: points are integer vectors with a common
positive denominator and only surface as `fractions.Fraction` tuples.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .graph import Graph, GraphError
from .holes import enumerate_induced_cycles, maximal_independent_sets


@dataclass(frozen=True)
class Row:
    """One inequality  coeffs . x <= rhs  (integer data)."""

    coeffs: tuple[int, ...]
    rhs: int
    kind: str  # lower-bound | upper-bound | edge | odd-cycle
    cycle: tuple[int, ...] = ()


@dataclass(frozen=True)
class ConstraintSystem:
    n: int
    rows: tuple[Row, ...]

    def rows_of_kind(self, kind: str) -> list[Row]:
        return [r for r in self.rows if r.kind == kind]


def build_system(g: Graph) -> ConstraintSystem:
    """Lower/upper bounds per vertex, one row per edge, and one row per
    induced odd cycle (triangles included); rows on non-induced odd cycles
    are redundant and omitted."""
    n = g.n
    rows: list[Row] = []
    for v in range(n):
        coeffs = tuple(-1 if u == v else 0 for u in range(n))
        rows.append(Row(coeffs, 0, "lower-bound"))
    for v in range(n):
        coeffs = tuple(1 if u == v else 0 for u in range(n))
        rows.append(Row(coeffs, 1, "upper-bound"))
    for u, v in g.edges:
        coeffs = tuple(1 if w in (u, v) else 0 for w in range(n))
        rows.append(Row(coeffs, 1, "edge"))
    for cyc in sorted(enumerate_induced_cycles(g, 3), key=lambda c: (len(c), c)):
        if len(cyc) % 2 == 0:
            continue
        members = set(cyc)
        coeffs = tuple(1 if w in members else 0 for w in range(n))
        rows.append(Row(coeffs, (len(cyc) - 1) // 2, "odd-cycle", tuple(cyc)))
    return ConstraintSystem(n, tuple(rows))


# -- vertex enumeration (incremental double description) ---------------------


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    g = den
    for x in num:
        g = math.gcd(g, x)
        if g == 1:
            break
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


def enumerate_vertices(system: ConstraintSystem) -> list[tuple[Fraction, ...]]:
    """All vertices of the polytope, exact and deduplicated.

    Constraint-by-constraint refinement starting from the 0/1 cube's
    vertex description; tight sets drive a combinatorial adjacency test.
    """
    n = system.n
    if n == 0:
        return [()]
    bound_rows = [r for r in system.rows if r.kind in ("lower-bound", "upper-bound")]
    if len(bound_rows) != 2 * n:
        raise GraphError("system is missing its cube bounds")
    triangle_pairs = set()
    for r in system.rows:
        if r.kind == "odd-cycle" and len(r.cycle) == 3:
            triangle_pairs.update(
                tuple(sorted(p)) for p in itertools.combinations(r.cycle, 2)
            )
    rest: list[Row] = []
    for r in system.rows:
        if r.kind == "edge":
            u, v = (i for i, c in enumerate(r.coeffs) if c)
            if (u, v) in triangle_pairs:
                continue  # implied by the triangle row and x >= 0
        if r.kind in ("edge", "odd-cycle"):
            rest.append(r)

    processed: list[Row] = list(bound_rows)

    def tight_mask(num: Sequence[int], den: int) -> int:
        mask = 0
        for i, row in enumerate(processed):
            if sum(c * x for c, x in zip(row.coeffs, num)) == row.rhs * den:
                mask |= 1 << i
        return mask

    # cube vertices: 0/1 vectors, each tight on exactly n bound rows
    verts: list[tuple[tuple[int, ...], int, int]] = []
    for bits in range(1 << n):
        num = tuple((bits >> v) & 1 for v in range(n))
        mask = 0
        for v in range(n):
            mask |= 1 << (v + n if num[v] else v)
        verts.append((num, 1, mask))

    for row in rest:
        a, b = row.coeffs, row.rhs
        scored = []
        for num, den, tight in verts:
            s = b * den - sum(c * x for c, x in zip(a, num))
            scored.append((s, num, den, tight))
        if all(s >= 0 for s, *_ in scored):
            idx = len(processed)
            processed.append(row)
            verts = [
                (num, den, tight | (1 << idx) if s == 0 else tight)
                for s, num, den, tight in scored
            ]
            continue
        pos = [e for e in scored if e[0] > 0]
        zero = [e for e in scored if e[0] == 0]
        neg = [e for e in scored if e[0] < 0]
        all_tights = [t for _, _, _, t in scored]
        fresh: dict[tuple[tuple[int, ...], int], bool] = {}
        for sp, np_, dp, tp in pos:
            for sq, nq, dq, tq in neg:
                common = tp & tq
                if common.bit_count() < n - 1:
                    continue
                if any(
                    t != tp and t != tq and common & t == common
                    for t in all_tights
                ):
                    continue
                den_new = sp * dq - sq * dp
                num_new = [sp * y - sq * x for x, y in zip(np_, nq)]
                fresh[_normalize(num_new, den_new)] = True
        idx = len(processed)
        processed.append(row)
        nxt = []
        for s, num, den, tight in pos:
            nxt.append((num, den, tight))
        for s, num, den, tight in zero:
            nxt.append((num, den, tight | (1 << idx)))
        for num, den in fresh:
            nxt.append((num, den, tight_mask(num, den)))
        verts = nxt

    points = sorted(
        {tuple(Fraction(x, den) for x in num) for num, den, _ in verts}
    )
    return points


def tight_rows(system: ConstraintSystem, point: Sequence[Fraction]) -> list[int]:
    out = []
    for i, row in enumerate(system.rows):
        if sum(c * x for c, x in zip(row.coeffs, point)) == row.rhs:
            out.append(i)
    return out


def satisfies_all(system: ConstraintSystem, point: Sequence[Fraction]) -> bool:
    return all(
        sum(c * x for c, x in zip(row.coeffs, point)) <= row.rhs
        for row in system.rows
    )


def t_perfect_oracle(g: Graph) -> bool:
    """True iff every vertex of the polytope is 0/1; then the vertex set is
    additionally asserted to be the characteristic vectors of all
    independent sets.  Intended for order <= ~10."""
    vertices = enumerate_vertices(build_system(g))
    for p in vertices:
        if any(x not in (0, 1) for x in p):
            return False
    from .holes import independent_sets

    expected = {
        tuple(Fraction(1 if v in s else 0) for v in range(g.n))
        for s in independent_sets(g)
    }
    got = set(vertices)
    if got != expected:
        raise AssertionError(
            "integral polytope vertices do not match the independent sets: "
            f"{len(got)} vertices vs {len(expected)} independent sets"
        )
    return True


# -- weightings, alpha_w, and covers -----------------------------------------


def _as_weights(g: Graph, w: Sequence[int]) -> tuple[int, ...]:
    ws = tuple(int(x) for x in w)
    if len(ws) != g.n:
        raise GraphError(f"weighting has {len(ws)} entries for order {g.n}")
    if any(x < 0 for x in ws):
        raise GraphError("weights must be nonnegative")
    return ws


def alpha_w(g: Graph, w: Sequence[int]) -> int:
    """Maximum total weight of an independent set (exact branch and bound)."""
    ws = _as_weights(g, w)
    adj = [g.neighbor_mask(v) for v in range(g.n)]
    order = sorted(range(g.n), key=lambda v: -ws[v])
    best = 0

    def rec(i: int, current: int, banned: int, remaining: int) -> None:
        nonlocal best
        if current > best:
            best = current
        if current + remaining <= best:
            return
        while i < g.n:
            v = order[i]
            i += 1
            if banned >> v & 1:
                continue
            rec(i, current + ws[v], banned | adj[v] | (1 << v), remaining - ws[v])
            remaining -= ws[v]
            if current + remaining <= best:
                return

    rec(0, 0, 0, sum(ws))
    return best


@dataclass(frozen=True)
class CoverElement:
    kind: str  # vertex | edge | odd-cycle
    vertices: tuple[int, ...]
    cost: int

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class WCover:
    elements: tuple[tuple[CoverElement, int], ...]  # element, multiplicity
    cost: int

    def coverage(self, n: int) -> tuple[int, ...]:
        cov = [0] * n
        for elem, mult in self.elements:
            for v in elem.vertices:
                cov[v] += mult
        return tuple(cov)


def enumerate_odd_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """All simple odd cycles, induced or not, one per rotation/reflection."""
    adj = [g.neighbor_mask(v) for v in range(g.n)]
    for anchor in range(g.n):
        stack = [
            ([anchor, u], (1 << anchor) | (1 << u))
            for u in g.neighbors(anchor)
            if u > anchor
        ]
        while stack:
            path, mask = stack.pop()
            tip = path[-1]
            if (
                len(path) >= 3
                and len(path) % 2 == 1
                and adj[tip] >> anchor & 1
                and path[1] < tip
            ):
                yield tuple(path)
            for w in range(anchor + 1, g.n):
                if mask >> w & 1 or not (adj[tip] >> w & 1):
                    continue
                stack.append((path + [w], mask | (1 << w)))


def cover_elements(g: Graph) -> list[CoverElement]:
    """The dual's ground set: vertices and edges at cost 1, all odd cycles
    at cost (length - 1) / 2, in a fixed lexicographic order."""
    elems = [CoverElement("vertex", (v,), 1) for v in range(g.n)]
    elems.extend(CoverElement("edge", e, 1) for e in g.edges)
    cycles = sorted(enumerate_odd_cycles(g), key=lambda c: (len(c), c))
    elems.extend(
        CoverElement("odd-cycle", c, (len(c) - 1) // 2) for c in cycles
    )
    return elems


class _CoverSolver:
    """Minimum cover costs for every demand vector, memoized per graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.elements = cover_elements(g)
        self._memo: dict[tuple[int, ...], int] = {}

    def min_cost(self, demand: tuple[int, ...]) -> int:
        if all(d == 0 for d in demand):
            return 0
        cached = self._memo.get(demand)
        if cached is not None:
            return cached
        best = None
        for elem in self.elements:
            if not any(demand[v] for v in elem.vertices):
                continue
            reduced = list(demand)
            for v in elem.vertices:
                if reduced[v]:
                    reduced[v] -= 1
            cost = elem.cost + self.min_cost(tuple(reduced))
            if best is None or cost < best:
                best = cost
        assert best is not None
        self._memo[demand] = best
        return best

    def reconstruct(self, demand: tuple[int, ...]) -> list[CoverElement]:
        picks: list[CoverElement] = []
        while any(demand):
            total = self.min_cost(demand)
            for elem in self.elements:
                if not any(demand[v] for v in elem.vertices):
                    continue
                reduced = list(demand)
                for v in elem.vertices:
                    if reduced[v]:
                        reduced[v] -= 1
                if elem.cost + self.min_cost(tuple(reduced)) == total:
                    picks.append(elem)
                    demand = tuple(reduced)
                    break
            else:
                raise AssertionError("cover reconstruction failed")
        return picks


def min_w_cover(g: Graph, w: Sequence[int], solver: Optional[_CoverSolver] = None) -> WCover:
    """A minimum-total-cost cover meeting every vertex's demand w(v),
    ties broken lexicographically.  Intended for small orders/weights."""
    ws = _as_weights(g, w)
    if solver is None:
        solver = _CoverSolver(g)
    picks = solver.reconstruct(ws)
    counted: dict[CoverElement, int] = {}
    for elem in picks:
        counted[elem] = counted.get(elem, 0) + 1
    elements = tuple(
        sorted(counted.items(), key=lambda kv: (kv[0].kind, kv[0].vertices))
    )
    return WCover(elements, sum(e.cost * m for e, m in elements))


@dataclass(frozen=True)
class StrongCheckReport:
    """Bounded-grid check of cover-cost vs alpha_w equality.

    A pass means "pass up to w_max"; it is a necessary condition only,
    never a proof over all weightings.
    """

    passed: bool
    w_max: int
    checked: int
    violation: Optional[tuple[tuple[int, ...], int, int]] = None  # w, alpha, cost

    def describe(self) -> str:
        if self.passed:
            return f"pass up to w_max={self.w_max} ({self.checked} weightings)"
        w, alpha, cost = self.violation  # type: ignore[misc]
        return (
            f"violation at w={list(w)}: alpha_w={alpha} but minimum cover "
            f"cost {cost}"
        )


def strong_t_perfect_check(g: Graph, w_max: int) -> StrongCheckReport:
    """For every w in {0..w_max}^V, verify min cover cost equals alpha_w;
    report the first violating weighting or a full pass."""
    if w_max < 0:
        raise GraphError(f"w_max must be nonnegative, got {w_max}")
    solver = _CoverSolver(g)
    mis = maximal_independent_sets(g)
    checked = 0
    for w in itertools.product(range(w_max + 1), repeat=g.n):
        checked += 1
        alpha = max((sum(w[v] for v in s) for s in mis), default=0)
        cost = solver.min_cost(w)
        if cost != alpha:
            return StrongCheckReport(False, w_max, checked, (w, alpha, cost))
    return StrongCheckReport(True, w_max, checked)
