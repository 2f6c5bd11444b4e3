"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line (collected again in
the pytest terminal summary) and then asserts the same verdict.  Run directly
with ``python tests/test_acceptance.py`` for just the verdict lines.
"""

import os
import random
import sys
import time
from itertools import product

import pytest
import sympy

from spectral_ds.canon import canonical_form, is_isomorphic
from spectral_ds.constructions import (figure1_family, figure1_pair, gm_switch, join_pair,
                                       kn_minus_pair, path_mates, switching_sets, trivial_pair,
                                       union_pair)
from spectral_ds.enumeration import ds_verify, expected_multiplicity_forms, multiplicity_survey, survey_kn_minus
from spectral_ds.generate import generate_by_edges, generate_graphs
from spectral_ds.graph import (Graph, complement, complete, complete_bipartite, cycle,
                               disjoint_union, kn_minus, matching, path, star)
from spectral_ds.invariants import (brute_force_counts, complement_4walks, complement_triangles,
                                    subgraph_counts, walks_through_edges)
from spectral_ds.spectra import (char_poly, closed_walks, closed_walks_by_powers,
                                 count_roots_greater_than, integer_eigenvalue_multiplicity,
                                 is_cospectral, is_r_cospectral, multiplicity_by_rank,
                                 structure_check_one_positive)

RESULTS: list[str] = []

K4_MINUS_K2 = complement(disjoint_union(complete(2), complete(1), complete(1)))
K14_PLUS_K2 = disjoint_union(star(4), complete(2))


def verdict(number: int, title: str, checks: dict[str, bool], elapsed: float) -> None:
    failed = [name for name, ok in checks.items() if not ok]
    status = "FAIL" if failed else "PASS"
    detail = f"failed: {'; '.join(failed)}" if failed else f"{len(checks)} checks"
    line = f"ACCEPTANCE {number:2d} {status} {title} ({detail}; {elapsed:.2f}s)"
    RESULTS.append(line)
    print(line)
    assert not failed, line


def all_graphs(n_max: int) -> list[Graph]:
    return [g for n in range(1, n_max + 1) for g in generate_graphs(n)]


def expand(factors) -> tuple[int, ...]:
    """Coefficients, low to high, of a product given as sympy expressions in x."""
    x = sympy.symbols("x")
    poly = sympy.Poly(sympy.expand(sympy.Mul(*factors(x))), x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def test_criterion_01_exceptional_pair():
    t0 = time.perf_counter()
    report = survey_kn_minus(7, 5)
    elapsed = time.perf_counter() - t0
    a, b = kn_minus(7, K4_MINUS_K2), kn_minus(7, K14_PLUS_K2)
    classes = report.nontrivial
    stated = expand(lambda x: [x, x + 2, (x + 1) ** 3, x ** 2 - 6 * x + 3])
    checks = {
        "exactly one nontrivial class": len(classes) == 1,
        "class is {K7\\(K4\\K2), K7\\(K1,4+K2)}": len(classes) == 1 and
            sorted(canonical_form(g) for g in classes[0].members) == sorted(map(canonical_form, (a, b))),
        "both char polys equal x(x+2)(x+1)^3(x^2-6x+3)":
            char_poly(a).coeffs == stated and char_poly(b).coeffs == stated,
        "survey < 1 s": elapsed < 1.0,
    }
    verdict(1, "K_7 minus five edges: exceptional pair", checks, elapsed)


def test_criterion_02_five_edge_slice():
    t0 = time.perf_counter()
    empty_slices = all(not survey_kn_minus(n, 5).nontrivial for n in range(8, 13))
    shares = differs = by_one = True
    for n in range(6, 13):
        g = kn_minus(n, path(6))
        h = kn_minus(n, disjoint_union(cycle(4), complete(2)))
        tg = brute_force_counts(g).t, closed_walks(g, 4)
        th = brute_force_counts(h).t, closed_walks(h, 4)
        shares &= tg == th
        mg, mh = integer_eigenvalue_multiplicity(g, -1), integer_eigenvalue_multiplicity(h, -1)
        differs &= mg != mh
        by_one &= abs(mg - mh) == 1
    elapsed = time.perf_counter() - t0
    checks = {
        "n=8..12 no nontrivial classes": empty_slices,
        "K_n\\P6, K_n\\(C4+K2) share (t, w4)": shares,
        "mult(-1) differs": differs,
        "mult(-1) differs by exactly 1": by_one,
        "< 10 s": elapsed < 10.0,
    }
    verdict(2, "five deleted edges, n = 8..12", checks, elapsed)


def test_criterion_03_four_edges():
    t0 = time.perf_counter()
    patterns = list(generate_by_edges(4))
    polys = {char_poly(kn_minus(8, h)) for h in patterns}
    elapsed = time.perf_counter() - t0
    checks = {"11 patterns": len(patterns) == 11, "11 distinct spectra at n=8": len(polys) == 11,
              "< 1 s": elapsed < 1.0}
    verdict(3, "four deleted edges", checks, elapsed)


def test_criterion_04_five_edge_patterns():
    t0 = time.perf_counter()
    patterns = list(generate_by_edges(5))
    distinct = len({canonical_form(h) for h in patterns})
    checks = {"26 patterns": len(patterns) == 26, "pairwise non-isomorphic": distinct == 26}
    verdict(4, "five-edge pattern tally", checks, time.perf_counter() - t0)


def test_criterion_05_formulas_vs_oracles():
    t0 = time.perf_counter()
    graphs = all_graphs(7)
    tri = walks = counts = True
    for g in graphs:
        co = complement(g)
        tri &= complement_triangles(g) == brute_force_counts(co).t
        walks &= complement_4walks(g) == closed_walks_by_powers(co, 4)
        counts &= subgraph_counts(g) == brute_force_counts(g)
    elapsed = time.perf_counter() - t0
    checks = {"1044 graphs on 7 vertices": sum(1 for g in graphs if g.n == 7) == 1044,
              "complement triangles": tri, "complement 4-walks": walks,
              "subgraph counts": counts, "< 30 s": elapsed < 30.0}
    verdict(5, "closed forms against brute force, n <= 7", checks, elapsed)


def test_criterion_06_one_positive_eigenvalue():
    t0 = time.perf_counter()
    forward = converse = True
    for g in all_graphs(7):
        positive = count_roots_greater_than(char_poly(g), 0)
        structured = structure_check_one_positive(g)
        if positive == 1:
            forward &= structured
        if structured and g.edge_count:
            converse &= positive == 1
    checks = {"one positive eigenvalue => structure": forward,
              "nonempty structure => one positive eigenvalue": converse}
    verdict(6, "one positive eigenvalue, n <= 7", checks, time.perf_counter() - t0)


def test_criterion_07_multiplicity_classification():
    t0 = time.perf_counter()
    checks = {}
    for n, d in product((6, 7), (1, 2, 3)):
        found = {canonical_form(g) for g in multiplicity_survey(n, d)}
        expected = {canonical_form(g) for g in expected_multiplicity_forms(n, d)}
        by_rank = all(multiplicity_by_rank(g.graph(), -1) == n - d for g in found)
        checks[f"n={n} deficiency={d}"] = found == expected and by_rank
    elapsed = time.perf_counter() - t0
    checks["< 20 s"] = elapsed < 20.0
    verdict(7, "multiplicity of -1 classification", checks, elapsed)


def _ds_fixtures(n: int):
    plain = [kn_minus(n, matching(k)) for k in range(1, n // 2 + 1)]
    plain += [kn_minus(n, complete(m)) for m in range(2, n - 1)]
    plain += [kn_minus(n, complete_bipartite(l, m))
              for l in range(1, n) for m in range(l, n - l + 1)]
    generalized = [kn_minus(n, path(ell)) for ell in range(2, n + 1)]

    def dedup(gs):
        seen = {}
        for g in gs:
            seen.setdefault(canonical_form(g), g)
        return list(seen.values())

    return dedup(plain), dedup(generalized)


@pytest.mark.slow
def test_criterion_08_ds_fixtures():
    jobs = min(8, os.cpu_count() or 1)
    t0 = time.perf_counter()
    plain_ok = general_ok = True
    bad = []
    for n in range(2, 10):
        plain, generalized = _ds_fixtures(n)
        for g in plain:
            if ds_verify(g, "plain", jobs):
                plain_ok = False
                bad.append(("plain", g))
        for g in generalized:
            if ds_verify(g, "generalized", jobs):
                general_ok = False
                bad.append(("generalized", g))
    star_mates = ds_verify(star(4), "plain", jobs)
    verify_time = time.perf_counter() - t0
    t1 = time.perf_counter()
    total9 = sum(1 for _ in generate_graphs(9))
    gen_time = time.perf_counter() - t1
    elapsed = time.perf_counter() - t0
    checks = {
        "matchings, cliques, complete bipartite: no mates": plain_ok,
        "K_n\\P_l: no generalized mates": general_ok,
        "K_1,4 mates = {K_2,2+K_1}": [canonical_form(g) for g in star_mates] ==
            [canonical_form(disjoint_union(complete_bipartite(2, 2), complete(1)))],
        "274668 graphs on 9 vertices": total9 == 274668,
        f"< 5 min with {jobs} worker(s)": elapsed < 300.0,
    }
    if jobs >= 8:
        checks["< 1 min with 8 workers"] = elapsed < 60.0
    else:
        print(f"note: 8-worker target not measurable on {os.cpu_count()} CPU(s)")
    print(f"ds_verify fixtures {verify_time:.1f}s, full n=9 generation {gen_time:.1f}s")
    verdict(8, "DS fixtures, n <= 9", checks, elapsed)


def test_criterion_09_construction_gates():
    t0 = time.perf_counter()
    fam = all(is_r_cospectral(p.left, p.right) for p in map(figure1_family, range(9)))
    knm = all(is_r_cospectral(p.left, p.right) and not p.is_isomorphic()
              for p in (kn_minus_pair(n, figure1_pair()) for n in range(7, 13)))
    pairs = [figure1_pair()]
    extras = [trivial_pair(complete(1)), figure1_pair(), trivial_pair(path(2))]
    comp = True
    for depth in range(3):
        pairs = [f(p, extras[depth]) for p in pairs for f in (join_pair, union_pair)]
        comp &= all(is_r_cospectral(p.left, p.right) for p in pairs)
    switches = 0
    gm = True
    for g in all_graphs(7):
        for c in switching_sets(g):
            switches += 1
            gm &= is_r_cospectral(g, gm_switch(g, c))
    mates = all(is_cospectral(p.left, p.right) and not is_r_cospectral(p.left, p.right)
                and not is_isomorphic(p.left, p.right) for p in map(path_mates, range(2, 6)))
    elapsed = time.perf_counter() - t0
    print(f"GM switches checked: {switches}")
    checks = {"figure1_family l=0..8": fam, "kn_minus_pair n=7..12": knm,
              "join/union depth 3": comp, "every GM switch n<=7": gm and switches > 0,
              "path_mates m=2..5": mates}
    verdict(9, "construction gates", checks, elapsed)


def test_criterion_10_inclusion_exclusion_terms():
    t0 = time.perf_counter()
    checks = {}
    for n in range(5, 10):
        checks[f"n={n}"] = (
            walks_through_edges(n, [(0, 1)]) == 8 * (n - 2) * (n - 3) + 8 * (n - 2) + 2
            and walks_through_edges(n, [(0, 1), (1, 2)]) == 8 * (n - 3) + 4
            and walks_through_edges(n, [(0, 1), (2, 3)]) == 16
            and walks_through_edges(n, [(0, 1), (1, 2), (2, 3)]) == 8
            and walks_through_edges(n, [(0, 1), (1, 2), (2, 3), (3, 0)]) == 8)
    verdict(10, "4-walk inclusion-exclusion terms", checks, time.perf_counter() - t0)


def test_criterion_11_coefficient_identities():
    t0 = time.perf_counter()
    rng = random.Random(11)
    sample = all_graphs(7)
    for _ in range(1000):
        n = rng.randint(1, 12)
        p = rng.random()
        sample.append(Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                           if rng.random() < p]))
    coeffs = newton = True
    for g in sample:
        c, n = char_poly(g).coeffs, g.n
        t = brute_force_counts(g).t
        coeffs &= c[n - 1] == 0 and (n < 2 or c[n - 2] == -g.edge_count) and \
            (n < 3 or c[n - 3] == -2 * t)
        if n <= 8:
            newton &= all(closed_walks(g, k) == closed_walks_by_powers(g, k) for k in range(9))
    checks = {"c_(n-1)=0, c_(n-2)=-m, c_(n-3)=-2t": coeffs,
              "Newton walk counts = matrix powers": newton}
    verdict(11, "characteristic polynomial identities", checks, time.perf_counter() - t0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
