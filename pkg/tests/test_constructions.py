import pytest

from spectral_ds.canon import is_isomorphic
from spectral_ds.constructions import (CospectralPair, PairKind, attach_path, figure1_family,
                                       figure1_pair, gm_switch, is_switching_set, join_pair,
                                       kn_minus_pair, path_mates, switching_sets, trivial_pair,
                                       union_pair)
from spectral_ds.errors import ContractViolation, GraphArgumentError, SwitchingSetError
from spectral_ds.generate import generate_graphs
from spectral_ds.graph import (Graph, complete, complete_bipartite, cycle, disjoint_union,
                               join, kn_minus, path, spider222, star, y_graph)
from spectral_ds.graph6 import from_graph6, to_graph6
from spectral_ds.spectra import generalized_key, is_cospectral, is_r_cospectral

# first hit of a scan over graphs on 7 vertices: a switch giving a non-isomorphic graph
GM_FIXTURE = Graph.from_edges(7, [(0, 4), (0, 5), (1, 4), (1, 6), (2, 5), (2, 6), (3, 5), (4, 6)])
GM_FIXTURE_SET = (3, 4, 5, 6)


def test_pair_checks_itself():
    with pytest.raises(ContractViolation):
        CospectralPair(path(3), complete(3), PairKind.COSPECTRAL)
    with pytest.raises(ContractViolation):
        CospectralPair(disjoint_union(path(5), complete(1)),
                       disjoint_union(path(2), y_graph(2)), PairKind.R_COSPECTRAL)
    with pytest.raises(ContractViolation):
        join_pair(path_mates(2), trivial_pair(complete(1)))


def test_pair_line_round_trip():
    pair = figure1_pair()
    assert CospectralPair.from_line(pair.to_line()) == pair
    assert pair.to_line().endswith(" claimed_r_cospectral")


def test_join_and_union_examples():
    k1 = trivial_pair(complete(1))
    joined = join_pair(figure1_pair(), k1)
    assert joined.left.n == 8 and is_r_cospectral(joined.left, joined.right)
    for m in (1, 2, 3):
        p = union_pair(figure1_pair(), trivial_pair(complete(m)))
        assert is_r_cospectral(p.left, p.right)
    g, h = path(3), cycle(4)
    same = join_pair(trivial_pair(g), trivial_pair(h))
    assert same.left == same.right == join(g, h)


def test_compositions_to_depth_three():
    pairs = [figure1_pair()]
    extras = [trivial_pair(complete(1)), trivial_pair(path(2)), figure1_pair()]
    for depth in range(3):
        nxt = []
        for p in pairs:
            nxt.append(join_pair(p, extras[depth]))
            nxt.append(union_pair(p, extras[depth]))
        pairs = nxt
    for p in pairs:
        assert is_r_cospectral(p.left, p.right)


def test_kn_minus_pair():
    for n in (7, 10):
        p = kn_minus_pair(n, figure1_pair())
        assert is_r_cospectral(p.left, p.right)
        assert not p.is_isomorphic()
    same = kn_minus_pair(8, trivial_pair(star(3)))
    assert same.is_isomorphic()


@pytest.mark.parametrize("n", range(7, 13))
def test_six_deleted_edges_not_ds(n):
    p = kn_minus_pair(n, figure1_family(0))
    assert n * (n - 1) // 2 - p.left.edge_count == 6
    assert generalized_key(p.left) == generalized_key(p.right)
    assert not p.is_isomorphic()


def test_gm_switch_trivial_and_errors():
    g = join(complete(2), path(3))
    c = [0, 1]
    assert is_switching_set(g, c)
    assert gm_switch(g, c) == g
    with pytest.raises(SwitchingSetError) as err:
        gm_switch(path(4), [0, 1, 2])
    assert err.value.vertex is not None
    with pytest.raises(SwitchingSetError):
        gm_switch(star(3), [0, 1, 2, 3])   # induced subgraph not regular
    with pytest.raises(GraphArgumentError):
        gm_switch(path(3), [0, 0])


def test_gm_fixture():
    h = gm_switch(GM_FIXTURE, GM_FIXTURE_SET)
    assert to_graph6(GM_FIXTURE) == "F?qrO"
    assert to_graph6(h) == "FFHSO"
    assert not is_isomorphic(GM_FIXTURE, h)
    assert is_r_cospectral(GM_FIXTURE, h)
    assert gm_switch(h, GM_FIXTURE_SET) == GM_FIXTURE


def test_gm_switch_exhaustive_six():
    for n in range(2, 7):
        for g in generate_graphs(n):
            for c in switching_sets(g):
                h = gm_switch(g, c)
                assert is_r_cospectral(g, h)
                assert gm_switch(h, c) == g


def test_figure1_family():
    base = figure1_family(0)
    assert (base.left.n, base.left.edge_count, base.right.edge_count) == (7, 6, 6)
    one = figure1_family(1)
    assert one.left.n == 8 and one.left.edge_count == 7
    assert is_r_cospectral(one.left, one.right)
    three = figure1_family(3)
    assert is_r_cospectral(three.left, three.right) and not three.is_isomorphic()
    with pytest.raises(GraphArgumentError):
        figure1_family(-1)


@pytest.mark.parametrize("ell", range(1, 9))
def test_every_degree2_attachment(ell):
    # which degree-2 vertex takes the path is left open; all choices are checked
    left, right = disjoint_union(cycle(6), complete(1)), spider222()
    lefts = [attach_path(left, v, ell) for v in range(left.n) if left.degrees()[v] == 2]
    rights = [attach_path(right, v, ell) for v in range(right.n) if right.degrees()[v] == 2]
    for a in lefts:
        for b in rights:
            assert is_r_cospectral(a, b)
            assert not is_isomorphic(a, b)
    # the choices are all equivalent up to isomorphism
    assert all(is_isomorphic(lefts[0], a) for a in lefts)
    assert all(is_isomorphic(rights[0], b) for b in rights)


def test_path_mates():
    p = path_mates(2)
    assert is_isomorphic(p.right, disjoint_union(path(2), star(3)))
    assert path_mates(3).left.n == 8
    for m in range(2, 6):
        p = path_mates(m)
        assert is_cospectral(p.left, p.right)
        assert not is_r_cospectral(p.left, p.right)
        assert not p.is_isomorphic()
    with pytest.raises(GraphArgumentError):
        path_mates(1)


def test_star_mates_are_cospectral():
    for n in range(3, 9):
        for a in range(1, n):
            for b in range(a, n - a + 1):
                if a + b > n or (a == 1 and b == n - 1):
                    continue
                mate = disjoint_union(complete_bipartite(a, b), *[complete(1)] * (n - a - b)) \
                    if a + b < n else complete_bipartite(a, b)
                assert is_cospectral(star(n - 1), mate) == (a * b == n - 1)
