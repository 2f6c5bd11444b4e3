import pytest
from hypothesis import given, settings, strategies as st

from spectral_ds.errors import Graph6Error
from spectral_ds.graph import Graph, complete, empty, path
from spectral_ds.graph6 import from_graph6, read_graph6_lines, to_graph6


def _hand_encode(g: Graph) -> str:
    # independent encoder: literal reading of the format definition, n <= 62
    bits = [1 if g.has_edge(i, j) else 0 for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = chr(63 + g.n)
    for k in range(0, len(bits), 6):
        out += chr(63 + int("".join(map(str, bits[k:k + 6])), 2))
    return out


def test_known_strings():
    assert to_graph6(complete(3)) == "Bw"
    assert to_graph6(path(3)) == "Bg"
    assert to_graph6(empty(0)) == "?"


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 64))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=60)) if pairs else set()
    return Graph.from_edges(n, sorted(edges))


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_round_trip(g):
    text = to_graph6(g)
    assert from_graph6(text) == g
    if g.n <= 62:
        assert text == _hand_encode(g)


@pytest.mark.parametrize("text, offset", [
    ("B", 1),        # truncated body
    ("Bw?", 2),      # trailing garbage
    ("B\x7f", 1),    # out-of-range character
    ("Bx", 1),       # nonzero padding bits
    ("", 0),
])
def test_malformed_reports_offset(text, offset):
    with pytest.raises(Graph6Error) as err:
        from_graph6(text)
    assert err.value.offset == offset
    assert f"byte {offset}" in str(err.value)


def test_header_and_comments():
    assert from_graph6(">>graph6<<Bw") == complete(3)
    lines = ["# comment", "", "Bw", "Bg\n"]
    assert list(read_graph6_lines(lines)) == [complete(3), path(3)]
