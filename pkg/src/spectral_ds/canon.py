"""Canonical labelling by partition refinement and backtracking.

The search tree is the usual one: refine the unit partition to an equitable
partition, individualise each vertex of the first non-singleton cell, refine
again, and recurse.  Every leaf is a discrete ordered partition, i.e. a vertex
ordering.  The canonical form is the least upper-triangle bit string (graph6
column order) over all leaves.

Two leaves giving the same bit string differ by an automorphism; those are
collected and used to prune the tree (orbit pruning at each node, plus the
jump back to the common ancestor when a leaf matches the first or best leaf).
The automorphisms found generate the full automorphism group, so the orbits
reported by :func:`canonical_labeling` are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True, slots=True, order=True)
class CanonicalForm:
    """Complete isomorphism invariant: equal forms iff isomorphic graphs."""

    n: int
    bits: int

    def graph(self) -> Graph:
        rows = [0] * self.n
        k = self.n * (self.n - 1) // 2
        for j in range(1, self.n):
            for i in range(j):
                k -= 1
                if (self.bits >> k) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph.trusted(self.n, rows)

    @property
    def graph6(self) -> str:
        from .graph6 import to_graph6

        return to_graph6(self.graph())


@dataclass(frozen=True, slots=True)
class CanonicalLabeling:
    form: CanonicalForm
    order: tuple[int, ...]  # order[p] is the vertex placed at canonical position p
    generators: tuple[tuple[int, ...], ...]

    def orbits(self) -> list[int]:
        """Orbit representative of each vertex under the automorphism group."""
        return orbit_partition(len(self.order), self.generators)


def orbit_partition(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v, w in enumerate(gen):
            a, b = find(v), find(w)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int], n: int) -> list[list[int]]:
    ncells = len(cells)
    while splitters and ncells < n:
        w = splitters.pop()
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            c0 = (adj[cell[0]] & w).bit_count()
            for v in cell:
                if (adj[v] & w).bit_count() != c0:
                    break
            else:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & w).bit_count(), []).append(v)
            for key in sorted(groups):
                piece = groups[key]
                out.append(piece)
                mask = 0
                for v in piece:
                    mask |= 1 << v
                splitters.append(mask)
            ncells += len(groups) - 1
        cells = out
    return cells


def _certificate(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    if n < 2:
        return 0
    pos = [0] * len(adj)
    for p, v in enumerate(order):
        pos[v] = p
    chunks = []
    for j in range(1, n):
        row = adj[order[j]]
        col = 0
        while row:
            low = row & -row
            p = pos[low.bit_length() - 1]
            if p < j:
                col |= 1 << p
            row ^= low
        # bit (0, j) is the most significant bit of this column
        chunks.append(format(col, f"0{j}b")[::-1])
    return int("".join(chunks), 2)


class _Search:
    __slots__ = ("adj", "n", "first_path", "first_order", "first_cert",
                 "best_path", "best_order", "best_cert", "autos")

    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.first_path: list[int] | None = None
        self.first_order: list[int] = []
        self.first_cert = 0
        self.best_path: list[int] = []
        self.best_order: list[int] = []
        self.best_cert = 0
        self.autos: list[tuple[int, ...]] = []

    def _automorphism(self, src: Sequence[int], dst: Sequence[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(src, dst):
            gamma[a] = b
        gamma_t = tuple(gamma)
        if gamma_t != tuple(range(self.n)):
            self.autos.append(gamma_t)

    def leaf(self, cells: list[list[int]], path: list[int]) -> int:
        order = [c[0] for c in cells]
        cert = _certificate(self.adj, order)
        depth = len(path)
        if self.first_path is None:
            self.first_path = list(path)
            self.first_order = order
            self.first_cert = cert
            self.best_path = list(path)
            self.best_order = order
            self.best_cert = cert
            return depth
        if cert == self.first_cert:
            self._automorphism(self.first_order, order)
            return _common_prefix(path, self.first_path)
        if cert == self.best_cert:
            self._automorphism(self.best_order, order)
            return _common_prefix(path, self.best_path)
        if cert < self.best_cert:
            self.best_path = list(path)
            self.best_order = order
            self.best_cert = cert
        return depth

    def search(self, cells: list[list[int]], path: list[int]) -> int:
        depth = len(path)
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target < 0:
            return self.leaf(cells, path)
        cell = cells[target]
        explored: list[int] = []
        for v in sorted(cell):
            if explored and self.autos and self._pruned(v, explored, path):
                continue
            explored.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            child = _refine(self.adj, child, [1 << v], self.n)
            jump = self.search(child, path + [v])
            if jump < depth:
                return jump
        return depth

    def _pruned(self, v: int, explored: list[int], path: list[int]) -> bool:
        gens = [g for g in self.autos if all(g[u] == u for u in path)]
        if not gens:
            return False
        orbit = orbit_partition(self.n, gens)
        target = orbit[v]
        return any(orbit[u] == target for u in explored)


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def label_rows(adj: Sequence[int], n: int, initial: list[list[int]] | None = None) -> CanonicalLabeling:
    """Canonical labelling of a graph given as raw bitrows.

    ``initial`` optionally supplies an ordered starting partition (cells in an
    isomorphism-invariant order); the default is the unit partition.
    """
    if n == 0:
        return CanonicalLabeling(CanonicalForm(0, 0), (), ())
    cells = initial if initial is not None else [list(range(n))]
    splitters = [((1 << n) - 1)] if initial is None else [_mask(c) for c in cells]
    cells = _refine(adj, [list(c) for c in cells], splitters, n)
    s = _Search(adj, n)
    s.search(cells, [])
    return CanonicalLabeling(CanonicalForm(n, s.best_cert), tuple(s.best_order), tuple(s.autos))


def _mask(vertices: Sequence[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def canonical_labeling(g: Graph) -> CanonicalLabeling:
    return label_rows(g.adj, g.n)


def canonical_form(g: Graph) -> CanonicalForm:
    return label_rows(g.adj, g.n).form


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    return canonical_form(g).graph()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
