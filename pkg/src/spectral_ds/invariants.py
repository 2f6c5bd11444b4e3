"""Small-subgraph counts and the complement walk formulas.

Counts are of not-necessarily-induced subgraphs, one per edge set: a 4-cycle
is counted once, not eight times.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable

from .errors import CapacityError
from .graph import Graph
from .spectra import multiplicity_by_rank

BRUTE_FORCE_MAX_N = 12


@dataclass(frozen=True, slots=True)
class SubgraphCounts:
    m: int   # edges
    m1: int  # P_3
    m2: int  # 2K_2
    m3: int  # P_4
    m4: int  # C_4
    t: int   # triangles


@dataclass(frozen=True, slots=True, order=True)
class InvariantProfile:
    n: int
    m: int
    t: int
    w4: int
    mult_minus1: int

    def csv_row(self) -> str:
        return ",".join(str(v) for v in astuple(self))


def _codegree_traces(g: Graph) -> tuple[int, int]:
    """(trace A^3, trace A^4) from common-neighbour counts."""
    adj = g.adj
    tr3 = 0
    tr4 = 0
    for i in range(g.n):
        ai = adj[i]
        for j in range(g.n):
            c = (ai & adj[j]).bit_count()
            tr4 += c * c
            if (ai >> j) & 1:
                tr3 += c
    return tr3, tr4


def closed_4walks(g: Graph) -> int:
    return _codegree_traces(g)[1]


def triangle_count(g: Graph) -> int:
    return _codegree_traces(g)[0] // 6


def subgraph_counts(g: Graph) -> SubgraphCounts:
    degs = g.degrees()
    m = sum(degs) // 2
    tr3, tr4 = _codegree_traces(g)
    t = tr3 // 6
    m1 = sum(comb(d, 2) for d in degs)
    m2 = comb(m, 2) - m1
    m3 = sum((degs[u] - 1) * (degs[v] - 1) for u, v in g.edges()) - 3 * t
    m4, rem = divmod(tr4 - 2 * m - 4 * m1, 8)
    assert rem == 0
    return SubgraphCounts(m=m, m1=m1, m2=m2, m3=m3, m4=m4, t=t)


def brute_force_counts(g: Graph) -> SubgraphCounts:
    """Same counts by walking explicit vertex sequences.  Independent oracle."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise CapacityError(f"brute force limited to {BRUTE_FORCE_MAX_N} vertices")
    nbrs = [g.neighbors(v) for v in range(g.n)]
    edges = list(g.edges())
    t = sum(1 for a, b, c in combinations(range(g.n), 3)
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c))
    p3 = p4 = c4 = 0
    for a in range(g.n):
        for b in nbrs[a]:
            for c in nbrs[b]:
                if c == a:
                    continue
                p3 += 1
                for d in nbrs[c]:
                    if d == a or d == b:
                        continue
                    p4 += 1
                    if g.has_edge(d, a):
                        c4 += 1
    indep = sum(1 for (a, b), (c, d) in combinations(edges, 2) if len({a, b, c, d}) == 4)
    # ordered sequences: P_3 and P_4 twice each, C_4 eight times
    return SubgraphCounts(m=len(edges), m1=p3 // 2, m2=indep, m3=p4 // 2, m4=c4 // 8, t=t)


def complement_triangles(g: Graph) -> int:
    """Triangles of the complement from n, m, the degrees and t."""
    n = g.n
    degs = g.degrees()
    m = sum(degs) // 2
    t = triangle_count(g)
    twice = 2 * comb(n, 3) - 2 * (n - 1) * m + sum(d * d for d in degs) - 2 * t
    return twice // 2


def complete_graph_4walks(n: int) -> int:
    return (n - 1) ** 4 + n - 1


def complement_4walks(g: Graph) -> int:
    """Closed 4-walks of the complement from n, m and the P_3/2K_2/P_4/C_4 counts."""
    n = g.n
    s = subgraph_counts(g)
    return (complete_graph_4walks(n)
            - (8 * n * n - 32 * n + 34) * s.m
            + (8 * n - 20) * s.m1
            + 16 * s.m2
            - 8 * s.m3
            + 8 * s.m4)


def walks_through_edges(n: int, edge_set: Iterable[tuple[int, int]]) -> int:
    """Closed 4-walks of K_n whose edges include every edge in ``edge_set``."""
    wanted = {frozenset(e) for e in edge_set}
    count = 0
    for walk in product(range(n), repeat=4):
        steps = [frozenset((walk[i], walk[(i + 1) % 4])) for i in range(4)]
        if any(len(s) == 1 for s in steps):
            continue
        if wanted.issubset(steps):
            count += 1
    return count


def profile(g: Graph) -> InvariantProfile:
    tr3, tr4 = _codegree_traces(g)
    return InvariantProfile(n=g.n, m=g.edge_count, t=tr3 // 6, w4=tr4,
                            mult_minus1=multiplicity_by_rank(g, -1))
