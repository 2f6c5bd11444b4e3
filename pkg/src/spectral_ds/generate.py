"""Isomorph-free generation by canonical augmentation.

Graphs by order grow one vertex at a time.  A child ``G + v`` is kept iff
``v`` has the largest (degree, neighbour-degree-sum) value and, when that
ties, ``v`` lies in the automorphism orbit of the tied vertex that comes last
in the canonical order.  Neighbourhoods of the new vertex are taken one per
orbit of the parent's automorphism group, so accepted children are pairwise
non-isomorphic without any global lookup table.

Graphs by edge count (no isolated vertices) grow one edge at a time with the
analogous rule on edges; siblings are deduplicated by canonical form, which
is enough because the canonical parent of an accepted child is unique.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .canon import label_rows, orbit_partition
from .errors import CapacityError
from .graph import Graph

MAX_ORDER = 10
MAX_EDGE_PATTERN = 8


def _subset_orbit_reps(k: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Smallest member of each orbit of subsets of range(k) under the group."""
    size = 1 << k
    if not generators:
        return list(range(size))
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        image = [0] * size
        for s in range(1, size):
            low = s & -s
            image[s] = image[s ^ low] | (1 << gen[low.bit_length() - 1])
        for s in range(1, size):
            a, b = find(s), find(image[s])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [s for s in range(size) if find(s) == s]


def _accept_vertex(rows: list[int], degs: list[int], new: int) -> tuple[bool, object]:
    """Canonical-parent test for the vertex ``new`` of the child graph.

    Returns (accepted, labeling or None); the labeling is handed back so a
    caller can reuse its automorphism generators.
    """
    top = degs[new]
    tied = [u for u, d in enumerate(degs) if d == top]
    if len(tied) == 1:
        return True, None
    best = -1
    scores = {}
    for u in tied:
        r = rows[u]
        total = 0
        while r:
            low = r & -r
            total += degs[low.bit_length() - 1]
            r ^= low
        scores[u] = total
        if total > best:
            best = total
    if scores[new] != best:
        return False, None
    tied = [u for u in tied if scores[u] == best]
    if len(tied) == 1:
        return True, None
    n = len(rows)
    lab = label_rows(rows, n)
    orbit = lab.orbits()
    tied_set = set(tied)
    last = next(v for v in reversed(lab.order) if v in tied_set)
    return orbit[new] == orbit[last], lab


def _vertex_tree(rows: list[int], gens, n: int, edges: int | None,
                 split_level: int, partition: tuple[int, int] | None,
                 counter: list[int]) -> Iterator[list[int]]:
    k = len(rows)
    if k == split_level and partition is not None:
        idx = counter[0]
        counter[0] += 1
        if idx % partition[1] != partition[0]:
            return
    if k == n:
        yield rows
        return
    degs = [r.bit_count() for r in rows]
    top = max(degs, default=0)
    e = sum(degs) // 2
    top_mask = 0
    for u, d in enumerate(degs):
        if d == top:
            top_mask |= 1 << u
    remaining = n - k  # vertices still to add, this one included
    lo_size, hi_size = top, k
    if edges is not None:
        # later vertices have degree >= this one's, and at most their index
        later_max = sum(range(k + 1, n))
        lo_size = max(lo_size, edges - e - later_max)
        hi_size = min(hi_size, (edges - e) // remaining)
        if lo_size > hi_size:
            return
    bit_new = 1 << k
    for s in _subset_orbit_reps(k, gens):
        size = s.bit_count()
        if size < lo_size or size > hi_size:
            continue
        if size == top and s & top_mask:
            continue
        child = [r | bit_new if (s >> u) & 1 else r for u, r in enumerate(rows)]
        child.append(s)
        cdegs = [d + ((s >> u) & 1) for u, d in enumerate(degs)]
        cdegs.append(size)
        ok, lab = _accept_vertex(child, cdegs, k)
        if not ok:
            continue
        if k + 1 < n:
            if lab is None:
                lab = label_rows(child, k + 1)
            child_gens = lab.generators
        else:
            child_gens = ()
        yield from _vertex_tree(child, child_gens, n, edges, split_level, partition, counter)


def generate_rows(n: int, edges: int | None = None,
                  partition: tuple[int, int] | None = None) -> Iterator[list[int]]:
    if n < 0 or n > MAX_ORDER:
        raise CapacityError(f"generation limited to 0..{MAX_ORDER} vertices, got {n}")
    if n == 0:
        if edges in (None, 0) and (partition is None or partition[0] == 0):
            yield []
        return
    split = max(1, n - 2)
    yield from _vertex_tree([0], (), n, edges, split, partition, [0])


def generate_graphs(n: int, edges: int | None = None,
                    partition: tuple[int, int] | None = None) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices, in a fixed order.

    ``edges`` restricts to that edge count (the tree is pruned, not filtered).
    ``partition=(i, k)`` yields only the i-th of k disjoint slices; the union
    over i equals the full output.
    """
    if edges is not None:
        total = n * (n - 1) // 2
        if not 0 <= edges <= total:
            return
        if 2 * edges > total:
            full = (1 << n) - 1
            for rows in generate_rows(n, total - edges, partition):
                yield Graph.trusted(n, [full & ~r & ~(1 << i) for i, r in enumerate(rows)])
            return
    for rows in generate_rows(n, edges, partition):
        yield Graph.trusted(n, rows)


# -- by edge count --------------------------------------------------------


def _edge_orbit(edge: tuple[int, int], generators) -> set[tuple[int, int]]:
    seen = {edge}
    stack = [edge]
    while stack:
        a, b = stack.pop()
        for g in generators:
            x, y = g[a], g[b]
            img = (x, y) if x < y else (y, x)
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return seen


def _canonical_edge(rows: list[int], lab) -> tuple[int, int]:
    """The edge with the highest (degree-sum, canonical positions) key."""
    pos = {v: p for p, v in enumerate(lab.order)}
    degs = [r.bit_count() for r in rows]
    best = None
    best_key = None
    for u, r in enumerate(rows):
        for v in range(u + 1, len(rows)):
            if (r >> v) & 1:
                pu, pv = pos[u], pos[v]
                key = (degs[u] + degs[v], max(pu, pv), min(pu, pv))
                if best_key is None or key > best_key:
                    best_key = key
                    best = (u, v)
    return best


def _edge_children(rows: list[int]) -> Iterator[tuple[list[int], tuple[int, int]]]:
    k = len(rows)
    for u in range(k):
        for v in range(u + 1, k):
            if not (rows[u] >> v) & 1:
                child = list(rows)
                child[u] |= 1 << v
                child[v] |= 1 << u
                yield child, (u, v)
    for u in range(k):
        child = list(rows)
        child[u] |= 1 << k
        child.append(1 << u)
        yield child, (u, k)
    child = list(rows) + [1 << (k + 1), 1 << k]
    yield child, (k, k + 1)


def generate_by_edges(m: int) -> Iterator[Graph]:
    """One graph per isomorphism class with ``m`` edges and no isolated vertices."""
    if m < 0 or m > MAX_EDGE_PATTERN:
        raise CapacityError(f"edge patterns limited to 0..{MAX_EDGE_PATTERN} edges, got {m}")
    if m == 0:
        yield Graph.trusted(0, [])
        return
    for rows in _edge_tree([2, 1], m):
        yield Graph.trusted(len(rows), rows)


def _edge_tree(rows: list[int], m: int) -> Iterator[list[int]]:
    e = sum(r.bit_count() for r in rows) // 2
    if e == m:
        yield rows
        return
    seen = set()
    accepted = []
    for child, added in _edge_children(rows):
        lab = label_rows(child, len(child))
        if lab.form in seen:
            continue
        star = _canonical_edge(child, lab)
        if added not in _edge_orbit(star, lab.generators):
            continue
        seen.add(lab.form)
        accepted.append(child)
    for child in accepted:
        yield from _edge_tree(child, m)
