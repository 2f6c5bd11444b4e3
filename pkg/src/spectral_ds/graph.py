"""Simple undirected graphs stored as adjacency bitrows.

A :class:`Graph` is an immutable value: ``adj[i]`` is an int whose bit ``j``
is set iff ``i`` and ``j`` are adjacent.  Vertex capacity is 64, so every
neighbour set fits in one machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, GraphArgumentError

MAX_VERTICES = 64


def _check_capacity(n: int) -> None:
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity of {MAX_VERTICES}")


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphArgumentError(f"expected {self.n} rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphArgumentError(f"row {i} has bits beyond vertex {self.n - 1}")
            if (row >> i) & 1:
                raise GraphArgumentError(f"loop at vertex {i}")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not (self.adj[j] >> i) & 1:
                    raise GraphArgumentError(f"asymmetric pair ({i}, {j})")
                r ^= low

    @classmethod
    def trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        """Build without validation.  Callers guarantee the invariants."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_capacity(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphArgumentError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphArgumentError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls.trusted(n, rows)

    # -- basic queries -----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.adj):
            for j in bits_of(row >> (i + 1)):
                yield i, i + 1 + j

    def isolated_vertices(self) -> list[int]:
        return [v for v, row in enumerate(self.adj) if row == 0]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.adj]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphArgumentError("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            image = 0
            for u in bits_of(row):
                image |= 1 << perm[u]
            rows[perm[v]] = image
        return Graph.trusted(self.n, rows)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``, renumbered in the given order."""
        index = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits_of(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph.trusted(len(vertices), rows)

    def without_isolated(self) -> "Graph":
        return self.induced([v for v, row in enumerate(self.adj) if row])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def bits_of(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- set operations ---------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.trusted(g.n, [full & ~row & ~(1 << i) for i, row in enumerate(g.adj)])


def disjoint_union(*graphs: Graph) -> Graph:
    total = sum(g.n for g in graphs)
    _check_capacity(total)
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph.trusted(total, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    total = g.n + h.n
    _check_capacity(total)
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.adj]
    rows.extend((row << g.n) | g_mask for row in h.adj)
    return Graph.trusted(total, rows)


def kn_minus(n: int, h: Graph) -> Graph:
    """K_n with the edges of ``h`` deleted (``h`` padded with isolated vertices)."""
    _check_capacity(n)
    if h.n > n:
        raise GraphArgumentError(f"pattern has {h.n} vertices, more than n={n}")
    return complement(disjoint_union(h, empty(n - h.n)))


# -- named families ---------------------------------------------------------


def _positive(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        raise GraphArgumentError(f"{name} must be >= {minimum}, got {value}")


def empty(n: int) -> Graph:
    _positive("n", n, 0)
    _check_capacity(n)
    return Graph.trusted(n, [0] * n)


def complete(n: int) -> Graph:
    _positive("n", n, 0)
    _check_capacity(n)
    full = (1 << n) - 1
    return Graph.trusted(n, [full ^ (1 << i) for i in range(n)])


def path(length: int) -> Graph:
    """P_length: the path on ``length`` vertices."""
    _positive("length", length)
    _check_capacity(length)
    return Graph.from_edges(length, [(i, i + 1) for i in range(length - 1)])


def cycle(length: int) -> Graph:
    _positive("length", length, 3)
    _check_capacity(length)
    return Graph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def complete_multipartite(*parts: int) -> Graph:
    for p in parts:
        _positive("part size", p)
    return complement(disjoint_union(*(complete(p) for p in parts)))


def complete_bipartite(left: int, right: int) -> Graph:
    return complete_multipartite(left, right)


def star(leaves: int) -> Graph:
    """K_{1,leaves}; vertex 0 is the centre."""
    return complete_bipartite(1, leaves)


def matching(k: int) -> Graph:
    """k disjoint copies of K_2."""
    _positive("k", k)
    _check_capacity(2 * k)
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def y_graph(m: int) -> Graph:
    """Y_{m+2}: P_m with two pendant edges at one endpoint (vertex 0)."""
    _positive("m", m)
    _check_capacity(m + 2)
    edges = [(i, i + 1) for i in range(m - 1)] + [(0, m), (0, m + 1)]
    return Graph.from_edges(m + 2, edges)


def spider222() -> Graph:
    """Three paths of length 2 sharing the endpoint 0."""
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


_FAMILIES = {
    "empty": empty,
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "complete_bipartite": complete_bipartite,
    "complete_multipartite": complete_multipartite,
    "matching": matching,
    "star": star,
    "y_graph": y_graph,
    "spider222": spider222,
    "union": lambda graphs: disjoint_union(*graphs),
    "join": lambda pair: join(*pair),
    "kn_minus": kn_minus,
}


def make_named(family: str, *args) -> Graph:
    """Dispatch to a named constructor, e.g. ``make_named("cycle", 6)``."""
    try:
        builder = _FAMILIES[family]
    except KeyError:
        raise GraphArgumentError(f"unknown family {family!r}") from None
    return builder(*args)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if (code >> k) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph.trusted(n, rows)
