import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphaspec.formats import (ParseError, detect_format, encode_graph6, format_edge_list, parse_edge_list,
                               parse_graph6, parse_graphs, read_graphs)
from alphaspec.graphs import Graph, generate_family, generate_random_connected


@pytest.mark.parametrize("text, n, edges", [
    # bits x01 x02 x12 = 1 0 1 -> 101000 = 40, +63 = 'g'
    ("Bg", 3, {(0, 1), (1, 2)}),
    # 100000 = 32, +63 = '_'
    ("B_", 3, {(0, 1)}),
    ("A_", 2, {(0, 1)}),
    ("@", 1, set()),
    (b">>graph6<<Bo\n", 3, {(0, 1), (0, 2)}),
])
def test_graph6_examples(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n and g.edges == edges


def test_graph6_encodes_small_graphs():
    assert encode_graph6(generate_family("path", 3)) == b"Bg"
    assert encode_graph6(generate_family("complete", 2)) == b"A_"
    assert encode_graph6(Graph(1)) == b"@"


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("B", 1),          # missing adjacency byte
    ("Bgg", 2),        # one byte too many
    ("B ", 1),         # byte 32 below range
    ("A`", 1),         # n=2 uses one bit; '`' = 33 = 100001 has padding set
    ("~??", 3),        # truncated extended header
])
def test_graph6_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_graph6_error_offset_skips_header():
    with pytest.raises(ParseError) as info:
        parse_graph6(b">>graph6<<B!")
    assert info.value.offset == 11


@st.composite
def graphs(draw, max_n=62):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=60)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
@settings(max_examples=200, deadline=None)
def test_graph6_roundtrip(g):
    assert parse_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize("n", [1, 2, 5, 62, 63, 64, 100, 300])
def test_graph6_matches_networkx(n):
    nx = pytest.importorskip("networkx")
    g = generate_random_connected(n, min(n, n * (n - 1) // 2 - (n - 1)), n)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(g.edges)
    expected = nx.to_graph6_bytes(h, header=False).strip()
    assert encode_graph6(g) == expected
    assert parse_graph6(expected) == g


def test_extended_header_bytes():
    g = Graph(63)
    assert encode_graph6(g)[:4] == bytes([126, 63, 63 + 0, 63 + 63])


def test_edge_list_examples():
    assert parse_edge_list("3\n0 1\n1 2") == generate_family("path", 3)
    assert parse_edge_list("4\n0 1\n0 2\n0 3") == generate_family("star", 4)
    assert parse_edge_list("3\n0 1\n1 0\n# comment\n\n2 1  # trailing\n").m == 2


@pytest.mark.parametrize("text, message, line", [
    ("2\n0 0", "self-loop", 2),
    ("2\n0 2", "out of range", 2),
    ("2\n0 x", "non-integer", 2),
    ("two\n0 1", "non-integer", 1),
    ("3\n0 1 2", "expected", 2),
    ("", "empty", None),
])
def test_edge_list_errors(text, message, line):
    with pytest.raises(ParseError, match=message) as info:
        parse_edge_list(text)
    assert info.value.offset == line


def test_edge_list_roundtrip():
    g = generate_random_connected(9, 7, 1)
    assert parse_edge_list(format_edge_list(g)) == g


def test_detect_and_parse_many(tmp_path):
    assert detect_format("3\n0 1\n") == "edgelist"
    assert detect_format("Bg\n") == "graph6"
    assert detect_format(">>graph6<<Bg") == "graph6"
    path = tmp_path / "two.g6"
    path.write_bytes(b"Bg\nA_\n\n")
    assert [g.n for g in read_graphs(path)] == [3, 2]
    assert parse_graphs("3\n0 1\n1 2\n")[0].m == 2
    with pytest.raises(ParseError):
        parse_graphs("\n\n", "graph6")
