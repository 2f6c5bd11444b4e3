"""Exact adjacency spectra.

Characteristic polynomials are computed with the Faddeev-LeVerrier recurrence
over Python integers; the division by ``k`` at step ``k`` is always exact for
an integer matrix.  Every spectral decision in the package compares these
integer coefficient tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import sturm
from .errors import GraphArgumentError
from .graph import Graph, complement

MAX_WALK_LENGTH = 8


@dataclass(frozen=True, slots=True, order=True)
class CharPoly:
    """det(xI - A) as integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def text(self) -> str:
        """Space-separated coefficients, low to high."""
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, text: str) -> "CharPoly":
        return cls(tuple(int(tok) for tok in text.split()))

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True, slots=True, order=True)
class GeneralizedSpectralKey:
    self_poly: CharPoly
    co_poly: CharPoly

    def text(self) -> str:
        return f"{self.self_poly.text()} | {self.co_poly.text()}"


def char_poly(g: Graph) -> CharPoly:
    n = g.n
    adj = g.adj
    nbrs = [[j for j in range(n) if (adj[i] >> j) & 1] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # M_k = A M_{k-1} + c_{n-k+1} I, with M_1 = I;  c_{n-k} = -tr(A M_k) / k
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = []
        for i in range(n):
            row = [0] * n
            for j in nbrs[i]:
                mj = m[j]
                for c in range(n):
                    row[c] += mj[c]
            am.append(row)
        trace = sum(am[i][i] for i in range(n))
        c = -trace // k
        if c * k != -trace:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                am[i][i] += c
            m = am
    return CharPoly(tuple(coeffs))


def generalized_key(g: Graph) -> GeneralizedSpectralKey:
    return GeneralizedSpectralKey(char_poly(g), char_poly(complement(g)))


# -- walks -------------------------------------------------------------------


def power_sums(p: CharPoly, kmax: int) -> list[int]:
    """Newton's identities: s_k = sum of k-th powers of the roots, k = 0..kmax."""
    n = p.degree
    a = [p.coeffs[n - i] for i in range(n + 1)]  # a_0 = 1, a_i = c_{n-i}
    s = [n]
    for k in range(1, kmax + 1):
        total = 0
        for i in range(1, min(k - 1, n) + 1):
            total += a[i] * s[k - i]
        if k <= n:
            total += k * a[k]
        s.append(-total)
    return s


def closed_walks(g: Graph, k: int) -> int:
    """Number of closed walks of length ``k`` (trace of A^k)."""
    if not 0 <= k <= MAX_WALK_LENGTH:
        raise GraphArgumentError(f"walk length must be in 0..{MAX_WALK_LENGTH}, got {k}")
    return power_sums(char_poly(g), k)[k]


def closed_walks_by_powers(g: Graph, k: int) -> int:
    """trace(A^k) by repeated integer matrix products."""
    if not 0 <= k <= MAX_WALK_LENGTH:
        raise GraphArgumentError(f"walk length must be in 0..{MAX_WALK_LENGTH}, got {k}")
    a = g.adjacency_matrix()
    n = g.n
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        m = [[sum(m[i][t] * a[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    return sum(m[i][i] for i in range(n))


# -- multiplicities ----------------------------------------------------------


def root_multiplicity(p: CharPoly, root: int) -> int:
    """Largest k with (x - root)^k dividing p, by repeated synthetic division."""
    coeffs = list(p.coeffs)
    k = 0
    while len(coeffs) > 1:
        # divide high-to-low; remainder is the value at ``root``
        quotient = []
        acc = 0
        for c in reversed(coeffs):
            acc = acc * root + c
            quotient.append(acc)
        if quotient.pop() != 0:
            break
        coeffs = list(reversed(quotient))
        k += 1
    return k


def integer_eigenvalue_multiplicity(g: Graph, eigenvalue: int) -> int:
    return root_multiplicity(char_poly(g), eigenvalue)


def exact_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(rank + 1, len(rows)):
            row = rows[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (pr[col] * row[c] - f * pr[c]) // prev
            row[col] = 0
        prev = pr[col]
        rank += 1
        if rank == len(rows):
            break
    return rank


def multiplicity_by_rank(g: Graph, eigenvalue: int) -> int:
    """n - rank(A - eigenvalue*I), independent of the characteristic polynomial."""
    a = g.adjacency_matrix()
    for i in range(g.n):
        a[i][i] = -eigenvalue
    return g.n - exact_rank(a)


# -- real roots --------------------------------------------------------------


def count_roots_greater_than(p: CharPoly, q) -> int:
    """Exact count (with multiplicity) of roots of ``p`` strictly above ``q``."""
    return sturm.count_roots_above(p.coeffs, Fraction(q))


def spectral_radius_below(p: CharPoly, q) -> bool:
    """True iff every root of ``p`` is strictly less than ``q``."""
    q = Fraction(q)
    return count_roots_greater_than(p, q) == 0 and sturm.evaluate(p.coeffs, q) != 0


def approximate_spectrum(p: CharPoly) -> list[float]:
    """Eigenvalues to about 1e-9, ascending.  For display only."""
    return sturm.approximate_roots(p.coeffs)


def spectrum_summary(p: CharPoly) -> str:
    """Human-readable multiset, e.g. ``-1^2, 2`` for K_3."""
    groups: list[list] = []
    for x in approximate_spectrum(p):
        if groups and abs(groups[-1][0] - x) < 1e-6:
            groups[-1][1] += 1
        else:
            groups.append([x, 1])
    parts = []
    for value, mult in groups:
        label = str(round(value)) if abs(value - round(value)) < 1e-7 else f"{value:.6f}"
        parts.append(label if mult == 1 else f"{label}^{mult}")
    return ", ".join(parts)


# -- predicates --------------------------------------------------------------


def is_cospectral(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return char_poly(g) == char_poly(h)


def is_r_cospectral(g: Graph, h: Graph) -> bool:
    """Cospectral with cospectral complements (equivalently, R-cospectral)."""
    if g == h:
        return True
    return is_cospectral(g, h) and char_poly(complement(g)) == char_poly(complement(h))


def structure_check_one_positive(g: Graph) -> bool:
    """True iff ``g`` is complete multipartite plus isolated vertices."""
    live = [v for v in range(g.n) if g.adj[v]]
    for a, u in enumerate(live):
        for v in live[a + 1:]:
            if not (g.adj[u] >> v) & 1 and g.adj[u] != g.adj[v]:
                return False
    return True
