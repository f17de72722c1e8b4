"""Immutable simple graphs on dense integer labels.

Adjacency is stored as one bitmask per vertex, which keeps the
backtracking searches elsewhere in the package cheap.  All operations
return fresh graphs; nothing here mutates.
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph constructions or out-of-range vertices."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v}) rejected")
            if u > v:
                u, v = v, u
            seen.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._edges = tuple(sorted(seen))

    # -- queries ---------------------------------------------------------

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._adj[u] >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        self._check(v)
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.neighbor_mask(v)))

    def degree(self, v: int) -> int:
        return self.neighbor_mask(v).bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(a.bit_count() for a in self._adj))

    def vertices(self) -> range:
        return range(self.n)

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for order {self.n}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)!r})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a simple graph, rejecting self-loops and bad endpoints."""
    return Graph(n, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on `vertices`, relabelled densely.

    Returns the subgraph together with the mapping new-label -> old-label
    (a sorted tuple), so certificates can be translated back.
    """
    vs = sorted(set(vertices))
    for v in vs:
        g._check(v)
    index = {old: new for new, old in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph(len(vs), edges), tuple(vs)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    drop = set(vertices)
    return induced_subgraph(g, (v for v in g.vertices() if v not in drop))


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(g.n), 2)
        if not g.adjacent(u, v)
    ]
    return Graph(g.n, edges)


def duplicate_vertex(g: Graph, v: int, k: int = 1) -> Graph:
    """Add k nonadjacent copies of v, each joined to exactly N(v)."""
    g._check(v)
    if k < 1:
        raise GraphError(f"copy count must be positive, got {k}")
    edges = list(g.edges)
    nbrs = g.neighbors(v)
    for i in range(k):
        copy = g.n + i
        edges.extend((copy, u) for u in nbrs)
    return Graph(g.n + k, edges)


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(set(vertices))
    for v in vs:
        g._check(v)
    mask = 0
    for v in vs:
        mask |= 1 << v
    return all(g.neighbor_mask(v) & mask == 0 for v in vs)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = sorted(set(vertices))
    return all(g.adjacent(u, v) for u, v in itertools.combinations(vs, 2))


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


# -- canonical labelling ---------------------------------------------------
#
# Refinement plus backtracking.  The code is the adjacency bitstring of the
# graph under an isomorphism-invariant ordering: equal codes iff isomorphic.
# Exactness matters here, speed only up to order ~20.


def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            nbr = tuple(sorted(colors[u] for u in _bits(adj[v])))
            sigs.append((colors[v], nbr))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _twin_classes(g: Graph) -> list[int]:
    # u, v are (true or false) twins when swapping them is an automorphism.
    n = g.n
    cls = list(range(n))
    for u, v in itertools.combinations(range(n), 2):
        mu = g._adj[u] & ~(1 << v)
        mv = g._adj[v] & ~(1 << u)
        if mu == mv:
            root = min(cls[u], cls[v])
            old_u, old_v = cls[u], cls[v]
            for w in range(n):
                if cls[w] in (old_u, old_v):
                    cls[w] = root
    return cls


def _code_for_order(g: Graph, order: Sequence[int]) -> int:
    bits = 0
    k = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.adjacent(order[i], order[j]):
                bits |= 1 << k
            k += 1
    return bits


def canonical_order(g: Graph) -> tuple[int, ...]:
    """An isomorphism-invariant vertex ordering of g."""
    n = g.n
    if n == 0:
        return ()
    adj = g._adj
    twins = _twin_classes(g)
    best: list[Optional[tuple[int, tuple[int, ...]]]] = [None]

    def search(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = tuple(sorted(range(n), key=colors.__getitem__))
            code = _code_for_order(g, order)
            if best[0] is None or code < best[0][0]:
                best[0] = (code, order)
            return
        reps = {}
        for v in target:
            reps.setdefault(twins[v], v)
        for v in sorted(reps.values()):
            branched = [2 * c for c in colors]
            branched[v] -= 1
            search(branched)

    search([0] * n)
    assert best[0] is not None
    return best[0][1]


def canonical_code(g: Graph) -> str:
    """Deterministic label with: equal codes iff the graphs are isomorphic."""
    order = canonical_order(g)
    return f"{g.n}:{_code_for_order(g, order):x}"


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test (independent of canonical_code)."""
    if g.n != h.n or g.m != h.m:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    n = g.n
    order = sorted(range(n), key=g.degree, reverse=True)
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        for v in range(n):
            if used[v] or g.degree(u) != h.degree(v):
                continue
            ok = all(
                g.adjacent(u, w) == h.adjacent(v, mapping[w])
                for w in mapping
            )
            if ok:
                mapping[u] = v
                used[v] = True
                if extend(i + 1):
                    return True
                del mapping[u]
                used[v] = False
        return False

    return extend(0)


# -- exhaustive small-graph enumeration ------------------------------------


def enumerate_nonisomorphic(max_order: int, keep: Optional[Callable[[Graph], bool]] = None) -> dict[int, list[Graph]]:
    """All graphs of each order up to max_order, one per isomorphism class.

    `keep` must be a hereditary predicate (closed under induced subgraphs);
    it prunes the extension search, e.g. fork-freeness.
    """
    out: dict[int, list[Graph]] = {}
    level = [Graph(1)]
    if keep is not None:
        level = [g for g in level if keep(g)]
    out[1] = list(level)
    for k in range(2, max_order + 1):
        found: dict[str, Graph] = {}
        for g in level:
            base = list(g.edges)
            for subset in range(1 << g.n):
                edges = base + [(g.n, u) for u in _bits(subset)]
                h = Graph(g.n + 1, edges)
                if keep is not None and not keep(h):
                    continue
                code = canonical_code(h)
                if code not in found:
                    found[code] = h
        level = list(found.values())
        out[k] = level
    return out


# -- file formats -----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: first line "n m", then m lines "u v"; '#' comments."""
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"bad header {lines[0]!r}") from exc
    edges = []
    for line in lines[1 : m + 1]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if len(edges) != m:
        raise GraphError(f"expected {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Standard graph6 decoding (header optional)."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphError("empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphError(f"invalid graph6 characters in {line!r}")
    if data[0] < 63:
        n, data = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        raise GraphError("graph6 orders above 258047 unsupported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) < need:
        raise GraphError(f"graph6 record too short for order {n}")
    bits = []
    for b in data[:need]:
        bits.extend((b >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def format_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = chr(126) + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    else:
        raise GraphError("graph6 orders above 258047 unsupported")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.adjacent(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        b = 0
        for bit in bits[k : k + 6]:
            b = (b << 1) | bit
        chars.append(chr(b + 63))
    return head + "".join(chars)
