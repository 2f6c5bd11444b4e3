"""Exact real-root counting for rational polynomials.

Polynomials are lists of coefficients, lowest degree first.  Everything runs
over :class:`fractions.Fraction`; nothing here touches floating point except
:func:`approximate_roots`, whose output is for display only.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list  # list[Fraction], low to high, no trailing zeros (zero poly is [])


def normalize(p: Sequence) -> Poly:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def evaluate(p: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return normalize([k * p[k] for k in range(1, len(p))])


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = a[-1] / lead
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a = normalize(a)
    return normalize(q), a


def gcd_poly(a: Poly, b: Poly) -> Poly:
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = lead * prod f_i^i with f_i squarefree and coprime."""
    p = normalize(p)
    if len(p) <= 1:
        return []
    out = []
    dp = derivative(p)
    a = gcd_poly(p, dp)
    b, _ = divmod_poly(p, a)
    c, _ = divmod_poly(dp, a)
    d = _sub(c, derivative(b))
    i = 1
    while len(b) > 1:
        a = gcd_poly(b, d)
        if len(a) > 1:
            out.append((a, i))
        b, _ = divmod_poly(b, a)
        c, _ = divmod_poly(d, a)
        d = _sub(c, derivative(b))
        i += 1
    return out


def _sub(a: Poly, b: Poly) -> Poly:
    size = max(len(a), len(b))
    return normalize([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(size)])


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, derivative(p)]
    while chain[-1]:
        _, r = divmod_poly(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [s for s in chain if s]


def _variations(values: list) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _distinct_roots_above(f: Poly, q: Fraction) -> int:
    """Distinct real roots of the squarefree ``f`` strictly greater than ``q``."""
    if evaluate(f, q) == 0:
        f, _ = divmod_poly(f, [-q, Fraction(1)])
    if len(f) <= 1:
        return 0
    chain = sturm_chain(f)
    at_q = _variations([evaluate(s, q) for s in chain])
    at_inf = _variations([s[-1] for s in chain])
    return at_q - at_inf


def count_roots_above(p: Sequence, q) -> int:
    """Real roots of ``p`` strictly greater than ``q``, counted with multiplicity."""
    q = Fraction(q)
    return sum(mult * _distinct_roots_above(f, q)
               for f, mult in squarefree_decomposition(normalize(p)))


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every root has absolute value strictly below this."""
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def approximate_roots(p: Sequence, tol: float = 1e-9) -> list[float]:
    """Real roots with multiplicity, ascending, by Sturm-guided bisection."""
    p = normalize(p)
    tol_q = Fraction(tol)
    roots: list[float] = []
    for f, mult in squarefree_decomposition(p):
        bound = root_bound(f)
        found = []
        stack = [(-bound, bound)]
        while stack:
            lo, hi = stack.pop()
            count = _distinct_roots_above(f, lo) - _distinct_roots_above(f, hi)
            if count == 0:
                continue
            if count > 1:
                mid = (lo + hi) / 2
                stack.append((lo, mid))
                stack.append((mid, hi))
                continue
            if evaluate(f, hi) == 0:
                found.append(float(hi))
                continue
            flo = evaluate(f, lo)
            if flo == 0:
                # lo is a (simple) root outside (lo, hi]; f has the sign of f' just right of it
                flo = evaluate(derivative(f), lo)
            while hi - lo > tol_q:
                mid = (lo + hi) / 2
                fm = evaluate(f, mid)
                if fm == 0:
                    lo = hi = mid
                    break
                if (fm > 0) == (flo > 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            found.append(float((lo + hi) / 2))
        roots.extend(r for r in found for _ in range(mult))
    return sorted(roots)
