"""Constructors for the named graphs used throughout the package, plus a
generic induced-subgraph (pattern) detector."""
from __future__ import annotations

import itertools
from typing import Iterable, Optional

from .graph import Graph, GraphError


def cycle(length: int) -> Graph:
    if length < 3:
        raise GraphError(f"cycle needs length >= 3, got {length}")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def path(length: int) -> Graph:
    if length < 1:
        raise GraphError(f"path needs at least 1 vertex, got {length}")
    return Graph(length, [(i, i + 1) for i in range(length - 1)])


def complete(order: int) -> Graph:
    if order < 1:
        raise GraphError(f"complete graph needs at least 1 vertex, got {order}")
    return Graph(order, itertools.combinations(range(order), 2))


def wheel(rim: int) -> Graph:
    """C_rim plus a hub adjacent to every rim vertex; wheel(3) == K4."""
    if rim < 3:
        raise GraphError(f"wheel needs rim length >= 3, got {rim}")
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges.extend((rim, i) for i in range(rim))
    return Graph(rim + 1, edges)


def cycle_square(length: int) -> Graph:
    """Square of a cycle: rim vertices joined at distances 1 and 2."""
    if length < 5:
        raise GraphError(f"cycle square needs length >= 5, got {length}")
    edges = []
    for i in range(length):
        edges.append((i, (i + 1) % length))
        edges.append((i, (i + 2) % length))
    return Graph(length, edges)


def c7_squared() -> Graph:
    return cycle_square(7)


def c10_squared() -> Graph:
    return cycle_square(10)


def claw() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def fork() -> Graph:
    # claw plus a pendant on one leaf
    return Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


_FIG3_OPTIONAL = {
    "a": ("u2-", "u3-", "u4-"),
    "b": ("u1-", "u2-", "u3-", "u4-"),
    "c": (),
}

# adjacency of each helper vertex to the five-hole v1..v5 (labels 0..4)
_FIG3_HOLE_EDGES = {
    "u1+": (2, 3, 0),
    "u2+": (3, 4, 1),
    "u3+": (4, 0, 2),
    "u4+": (0, 1, 3),
    "u5+": (1, 2, 4),
    "u1-": (2, 3),
    "u2-": (3, 4),
    "u3-": (4, 0),
    "u4-": (0, 1),
    "u5-": (1, 2),
}

_FIG3_MANDATORY = {
    "a": ("u2+", "u4+"),
    "b": ("u2+",),
    "c": ("u2+", "u3+", "u5-"),
}


def _fig3_u_edges(variant: str, names: list[str]) -> list[tuple[str, str]]:
    present = set(names)
    edges = []
    if variant == "a":
        # everything pairwise adjacent except within the same U_i
        for x, y in itertools.combinations(names, 2):
            if x[1] != y[1]:
                edges.append((x, y))
    elif variant == "b":
        # the last pair is forced by fork-freeness of the host, not by the
        # completeness clauses; dropping it leaves the maximal independent
        # set {v2, u1-, u3-} outside both catalog shapes
        forced = [
            ("u2+", "u1-"), ("u2+", "u3-"), ("u2+", "u4-"),
            ("u2-", "u1-"), ("u2-", "u3-"), ("u2-", "u4-"),
            ("u3-", "u4-"), ("u1-", "u3-"),
        ]
        edges = [(x, y) for x, y in forced if x in present and y in present]
    else:  # c: the three parts are pairwise complete
        edges = [("u2+", "u3+"), ("u2+", "u5-"), ("u3+", "u5-")]
    return edges


def figure3(variant: str, optional: Iterable[str] = ()) -> tuple[Graph, dict[str, int]]:
    """One of the three five-hole template graphs, with optional vertices.

    Returns the graph and a map from vertex names ("v1".."v5", "u2+", ...)
    to labels.
    """
    variant = variant.lower()
    if variant not in _FIG3_MANDATORY:
        raise GraphError(f"figure3 variant must be a, b, or c, got {variant!r}")
    opts = sorted(set(optional))
    allowed = set(_FIG3_OPTIONAL[variant])
    bad = [o for o in opts if o not in allowed]
    if bad:
        raise GraphError(
            f"figure3({variant}) does not take optional vertices {bad}"
        )
    if variant == "b" and "u1-" in opts and "u4-" in opts:
        # exhaustively checked: no edge completion keeps the host fork-free
        raise GraphError(
            "figure3(b) admits no fork-free realization with both u1- and u4-"
        )
    names = list(_FIG3_MANDATORY[variant]) + opts
    labels = {f"v{i + 1}": i for i in range(5)}
    for name in names:
        labels[name] = len(labels)
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for name in names:
        edges.extend((labels[name], h) for h in _FIG3_HOLE_EDGES[name])
    edges.extend(
        (labels[x], labels[y]) for x, y in _fig3_u_edges(variant, names)
    )
    return Graph(5 + len(names), edges), labels


def named_graph(name: str, *params: int | str) -> Graph:
    """Dispatch for the CLI: claw, fork, cycle L, path L, complete L,
    wheel L, c7_squared, c10_squared, figure3 VARIANT [flags...]."""
    name = name.lower()
    simple = {
        "claw": claw,
        "fork": fork,
        "c7_squared": c7_squared,
        "c10_squared": c10_squared,
    }
    if name in simple:
        if params:
            raise GraphError(f"{name} takes no parameters")
        return simple[name]()
    sized = {"cycle": cycle, "path": path, "complete": complete, "wheel": wheel}
    if name in sized:
        if len(params) != 1:
            raise GraphError(f"{name} takes exactly one length parameter")
        return sized[name](int(params[0]))
    if name == "figure3":
        if not params:
            raise GraphError("figure3 needs a variant (a, b, or c)")
        g, _ = figure3(str(params[0]), [str(p) for p in params[1:]])
        return g
    raise GraphError(f"unknown graph name {name!r}")


# -- induced pattern search --------------------------------------------------


def find_induced(host: Graph, pattern: Graph) -> Optional[dict[int, int]]:
    """An injective map pattern-vertex -> host-vertex whose image induces
    the pattern (edges and non-edges both preserved), or None.

    Deterministic backtracking with degree pruning; patterns here are of
    constant size, so this stays polynomial in the host.
    """
    k, n = pattern.n, host.n
    if k > n:
        return None
    # order pattern vertices: high degree first, then favor connectivity
    order: list[int] = []
    remaining = set(range(k))
    while remaining:
        anchored = [
            v for v in remaining
            if any(pattern.adjacent(v, u) for u in order)
        ]
        pool = anchored or list(remaining)
        nxt = max(sorted(pool), key=pattern.degree)
        order.append(nxt)
        remaining.remove(nxt)
    host_deg = [host.degree(v) for v in range(n)]
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(i: int) -> bool:
        if i == k:
            return True
        p = order[i]
        pdeg = pattern.degree(p)
        for h in range(n):
            if used[h] or host_deg[h] < pdeg:
                continue
            if all(
                pattern.adjacent(p, q) == host.adjacent(h, mapping[q])
                for q in mapping
            ):
                mapping[p] = h
                used[h] = True
                if extend(i + 1):
                    return True
                del mapping[p]
                used[h] = False
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None


def verify_embedding(host: Graph, pattern: Graph, mapping: dict[int, int]) -> bool:
    if sorted(mapping) != list(range(pattern.n)):
        return False
    image = list(mapping.values())
    if len(set(image)) != pattern.n:
        return False
    return all(
        pattern.adjacent(p, q) == host.adjacent(mapping[p], mapping[q])
        for p, q in itertools.combinations(range(pattern.n), 2)
    )


def contains_claw(g: Graph) -> bool:
    return find_induced(g, claw()) is not None


def is_fork_free(g: Graph) -> bool:
    return find_induced(g, fork()) is None


FORBIDDEN_INDUCED = (
    ("K4", complete(4)),
    ("W5", wheel(5)),
    ("C7^2", c7_squared()),
    ("C10^2", c10_squared()),
)


def contains_any_forbidden(g: Graph) -> Optional[tuple[str, dict[int, int]]]:
    """First of K4, W5, C7^2, C10^2 induced in g, with its embedding."""
    for name, pattern in FORBIDDEN_INDUCED:
        emb = find_induced(g, pattern)
        if emb is not None:
            return name, emb
    return None
