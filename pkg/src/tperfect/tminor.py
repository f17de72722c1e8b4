"""t-contraction and the exhaustive forbidden-t-minor search.

The search alternates vertex deletions and t-contractions, memoized on
canonical codes, and is the correctness oracle for the recognizer's
claw-free branch.  It is exact but exponential; intended for desk-scale
graphs (order <= ~10).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import (
    Graph,
    GraphError,
    are_isomorphic,
    canonical_code,
    delete_vertices,
    induced_subgraph,
    is_independent_set,
)
from .patterns import c7_squared, c10_squared, find_induced, wheel


class ContractionError(GraphError):
    """t-contraction attempted on a vertex whose neighborhood has an edge."""


class SearchBudgetExhausted(Exception):
    """The t-minor search ran out of its node budget."""


class _Inconclusive:
    def __repr__(self) -> str:
        return "INCONCLUSIVE"

    def __bool__(self) -> bool:
        return False


#: Returned by has_forbidden_t_minor when the budget ran out: distinct from
#: None (proven absent).
INCONCLUSIVE = _Inconclusive()

Step = tuple[str, Union[int, tuple[int, ...]]]


@dataclass(frozen=True)
class TMinorCertificate:
    """A replayable witness: deletions and contractions reaching a target."""

    steps: tuple[Step, ...]
    target: str

    def format_script(self) -> str:
        lines = []
        for kind, arg in self.steps:
            if kind == "delete":
                lines.append("delete " + " ".join(str(v) for v in arg))
            else:
                lines.append(f"contract {arg}")
        lines.append(f"target {self.target}")
        return "\n".join(lines) + "\n"


def t_contract(g: Graph, v: int) -> Graph:
    """Contract N(v) + v into a single vertex; N(v) must be independent.

    The merged vertex takes the lowest new label; everything else keeps
    its relative order.
    """
    g._check(v)
    nbrs = g.neighbors(v)
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if g.adjacent(a, b):
                raise ContractionError(
                    f"N({v}) is not independent: edge ({a}, {b})"
                )
    merged = set(nbrs) | {v}
    keep = [u for u in g.vertices() if u not in merged]
    index = {u: i + 1 for i, u in enumerate(keep)}
    edges = set()
    for a, b in g.edges:
        ina, inb = a in merged, b in merged
        if ina and inb:
            continue
        if ina:
            edges.add((0, index[b]))
        elif inb:
            edges.add((0, index[a]))
        else:
            edges.add((index[a], index[b]))
    return Graph(len(keep) + 1, edges)


def replay(g: Graph, cert: TMinorCertificate) -> Graph:
    """Apply the certificate's steps to g and return the final graph."""
    cur = g
    for kind, arg in cert.steps:
        if kind == "delete":
            cur, _ = delete_vertices(cur, arg)  # type: ignore[arg-type]
        elif kind == "contract":
            cur = t_contract(cur, arg)  # type: ignore[arg-type]
        else:
            raise GraphError(f"unknown certificate step {kind!r}")
    return cur


def target_catalog(order: int) -> list[tuple[str, Graph]]:
    """The forbidden targets of order <= `order`: odd wheels (K4 = W3
    included), C7^2 and C10^2."""
    out: list[tuple[str, Graph]] = []
    rim = 3
    while rim + 1 <= order:
        out.append((f"W{rim}", wheel(rim)))
        rim += 2
    if order >= 7:
        out.append(("C7^2", c7_squared()))
    if order >= 10:
        out.append(("C10^2", c10_squared()))
    return out


def _children(g: Graph) -> list[tuple[Step, Graph]]:
    out: list[tuple[Step, Graph]] = []
    for v in g.vertices():
        child, _ = delete_vertices(g, [v])
        out.append((("delete", (v,)), child))
    for v in g.vertices():
        nbrs = g.neighbors(v)
        if nbrs and is_independent_set(g, nbrs):
            out.append((("contract", v), t_contract(g, v)))
    return out


def _find_target(g: Graph) -> Optional[tuple[str, dict[int, int]]]:
    for name, target in target_catalog(g.n):
        emb = find_induced(g, target)
        if emb is not None:
            return name, emb
    return None


class TMinorSearch:
    """Exhaustive t-minor search with a canonical-code memo table.

    The memo is instance-local; share one instance across many graphs to
    amortize it (single-threaded use only).
    """

    def __init__(self, budget: Optional[int] = None, memoize: bool = True):
        self.budget = budget
        self.memoize = memoize
        self._memo: dict[str, bool] = {}
        self._expanded = 0

    def _decide(self, g: Graph) -> bool:
        code = canonical_code(g) if self.memoize else None
        if code is not None and code in self._memo:
            return self._memo[code]
        self._expanded += 1
        if self.budget is not None and self._expanded > self.budget:
            raise SearchBudgetExhausted(
                f"t-minor search exceeded budget of {self.budget} nodes"
            )
        if _find_target(g) is not None:
            found = True
        else:
            found = False
            seen: set[str] = set()
            for _, child in _children(g):
                if self.memoize:
                    ccode = canonical_code(child)
                    if ccode in seen:
                        continue
                    seen.add(ccode)
                if self._decide(child):
                    found = True
                    break
        if code is not None:
            self._memo[code] = found
        return found

    def _certificate(self, g: Graph) -> TMinorCertificate:
        hit = _find_target(g)
        if hit is not None:
            name, emb = hit
            image = set(emb.values())
            if len(image) == g.n:
                return TMinorCertificate((), name)
            rest = tuple(v for v in g.vertices() if v not in image)
            return TMinorCertificate((("delete", rest),), name)
        for step, child in _children(g):
            if self._decide(child):
                tail = self._certificate(child)
                return TMinorCertificate((step,) + tail.steps, tail.target)
        raise AssertionError("certificate requested for a graph without one")

    def find(self, g: Graph) -> Union[TMinorCertificate, None, _Inconclusive]:
        self._expanded = 0
        try:
            if not self._decide(g):
                return None
        except SearchBudgetExhausted:
            return INCONCLUSIVE
        return self._certificate(g)


def has_forbidden_t_minor(
    g: Graph,
    budget: Optional[int] = None,
    search: Optional[TMinorSearch] = None,
) -> Union[TMinorCertificate, None, _Inconclusive]:
    """A certificate reaching C7^2, C10^2, or an odd wheel, None if no
    t-minor sequence reaches any of them, or INCONCLUSIVE on budget
    exhaustion."""
    if search is None:
        search = TMinorSearch(budget=budget)
    return search.find(g)


def verify_certificate(g: Graph, cert: TMinorCertificate) -> bool:
    """Replay the certificate and confirm the result is the named target."""
    final = replay(g, cert)
    for name, target in target_catalog(final.n):
        if name == cert.target:
            return are_isomorphic(final, target)
    return False
