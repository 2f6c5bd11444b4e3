"""Builders for cospectral and R-cospectral pairs.

Every pair verifies its own claim when it is built, using the exact
characteristic polynomials from :mod:`spectral_ds.spectra`.  A construction
that does not deliver what it promises raises :class:`ContractViolation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator

from .canon import canonical_labeling, is_isomorphic
from .errors import ContractViolation, GraphArgumentError, SwitchingSetError
from .graph import (Graph, complete, cycle, disjoint_union, join, kn_minus,
                    path, spider222, y_graph)
from .graph6 import from_graph6, to_graph6
from .spectra import char_poly, is_r_cospectral
from .graph import complement


class PairKind(str, Enum):
    COSPECTRAL = "claimed_cospectral"
    R_COSPECTRAL = "claimed_r_cospectral"


@dataclass(frozen=True)
class CospectralPair:
    left: Graph
    right: Graph
    kind: PairKind

    def __post_init__(self):
        if self.left.n != self.right.n:
            raise ContractViolation(
                f"pair sides have {self.left.n} and {self.right.n} vertices")
        if char_poly(self.left) != char_poly(self.right):
            raise ContractViolation("pair sides are not cospectral")
        if self.kind is PairKind.R_COSPECTRAL and \
                char_poly(complement(self.left)) != char_poly(complement(self.right)):
            raise ContractViolation("pair sides have non-cospectral complements")

    def to_line(self) -> str:
        return f"{to_graph6(self.left)} {to_graph6(self.right)} {self.kind.value}"

    @classmethod
    def from_line(cls, line: str) -> "CospectralPair":
        left, right, kind = line.split()
        return cls(from_graph6(left), from_graph6(right), PairKind(kind))

    def is_isomorphic(self) -> bool:
        return is_isomorphic(self.left, self.right)


def trivial_pair(g: Graph) -> CospectralPair:
    return CospectralPair(g, g, PairKind.R_COSPECTRAL)


def _require_r(*pairs: CospectralPair) -> None:
    for p in pairs:
        if p.kind is not PairKind.R_COSPECTRAL:
            raise ContractViolation("input pair is not claimed R-cospectral")


def join_pair(gs: CospectralPair, hs: CospectralPair) -> CospectralPair:
    _require_r(gs, hs)
    return CospectralPair(join(gs.left, hs.left), join(gs.right, hs.right), PairKind.R_COSPECTRAL)


def union_pair(gs: CospectralPair, hs: CospectralPair) -> CospectralPair:
    _require_r(gs, hs)
    return CospectralPair(disjoint_union(gs.left, hs.left),
                          disjoint_union(gs.right, hs.right), PairKind.R_COSPECTRAL)


def kn_minus_pair(n: int, gs: CospectralPair) -> CospectralPair:
    _require_r(gs)
    return CospectralPair(kn_minus(n, gs.left), kn_minus(n, gs.right), PairKind.R_COSPECTRAL)


# -- Godsil-McKay switching ----------------------------------------------------


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_switching_set(g: Graph, cmask: int) -> list[int]:
    """Validate; return the outside vertices with exactly half their C-edges."""
    size = cmask.bit_count()
    if size == 0:
        raise SwitchingSetError("switching set is empty")
    inside = [v for v in range(g.n) if (cmask >> v) & 1]
    degs = {(g.adj[v] & cmask).bit_count() for v in inside}
    if len(degs) > 1:
        raise SwitchingSetError("switching set does not induce a regular graph", inside[0])
    half = []
    for v in range(g.n):
        if (cmask >> v) & 1:
            continue
        k = (g.adj[v] & cmask).bit_count()
        if 2 * k == size:
            half.append(v)
        elif k not in (0, size):
            raise SwitchingSetError(
                f"vertex {v} has {k} neighbours in a switching set of size {size}", v)
    return half


def is_switching_set(g: Graph, c: Iterable[int]) -> bool:
    try:
        _check_switching_set(g, _mask(c))
    except SwitchingSetError:
        return False
    return True


def gm_switch(g: Graph, c: Iterable[int]) -> Graph:
    """Godsil-McKay switch of ``g`` with respect to the vertex set ``c``."""
    c = list(c)
    if any(not 0 <= v < g.n for v in c) or len(set(c)) != len(c):
        raise GraphArgumentError("switching set must be distinct vertices of the graph")
    cmask = _mask(c)
    rows = list(g.adj)
    for v in _check_switching_set(g, cmask):
        flipped = rows[v] ^ cmask
        rows[v] = flipped
        for u in c:
            rows[u] ^= 1 << v
    return Graph.trusted(g.n, rows)


def switching_sets(g: Graph, min_size: int = 2) -> Iterator[tuple[int, ...]]:
    """Every valid switching set with at least one vertex that actually switches."""
    for size in range(max(min_size, 2), g.n, 2):
        for c in combinations(range(g.n), size):
            try:
                if _check_switching_set(g, _mask(c)):
                    yield c
            except SwitchingSetError:
                continue


# -- named families -------------------------------------------------------------


def figure1_pair() -> CospectralPair:
    """C_6 + K_1 and the spider S(2,2,2)."""
    return CospectralPair(disjoint_union(cycle(6), complete(1)), spider222(),
                          PairKind.R_COSPECTRAL)


def attach_path(g: Graph, vertex: int, length: int) -> Graph:
    """Join one endpoint of a new P_length to ``vertex``."""
    if length == 0:
        return g
    tail = path(length)
    rows = list(disjoint_union(g, tail).adj)
    rows[vertex] |= 1 << g.n
    rows[g.n] |= 1 << vertex
    return Graph.trusted(len(rows), rows)


def _first_degree2_vertex(g: Graph) -> int:
    degs = g.degrees()
    return next(v for v in canonical_labeling(g).order if degs[v] == 2)


def figure1_family(ell: int) -> CospectralPair:
    """The C_6 + K_1 / S(2,2,2) pair with a pendant P_ell on a degree-2 vertex."""
    if ell < 0:
        raise GraphArgumentError(f"path length must be >= 0, got {ell}")
    base = figure1_pair()
    left = attach_path(base.left, _first_degree2_vertex(base.left), ell)
    right = attach_path(base.right, _first_degree2_vertex(base.right), ell)
    return CospectralPair(left, right, PairKind.R_COSPECTRAL)


def path_mates(m: int) -> CospectralPair:
    """P_{2m+1} + K_1 and P_m + Y_{m+2}: cospectral, complements not cospectral."""
    if m < 2:
        raise GraphArgumentError(f"path_mates needs m >= 2, got {m}")
    pair = CospectralPair(disjoint_union(path(2 * m + 1), complete(1)),
                          disjoint_union(path(m), y_graph(m)), PairKind.COSPECTRAL)
    if is_r_cospectral(pair.left, pair.right):
        raise ContractViolation("path mates unexpectedly have cospectral complements")
    if pair.is_isomorphic():
        raise ContractViolation("path mates are isomorphic")
    return pair
