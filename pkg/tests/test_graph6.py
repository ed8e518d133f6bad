import networkx as nx
import pytest
from hypothesis import given

from indset.errors import CapacityError, ParseError
from indset.graph import Graph, clique, empty_graph, path_graph, petersen
from indset.graph6 import emit_graph6, parse_graph6
from strategies import graphs, to_networkx


@pytest.mark.parametrize(
    "text, n, m",
    [
        ("?", 0, 0),
        ("@", 1, 0),
        ("A_", 2, 1),
        ("Bw", 3, 3),
        ("C~", 4, 6),
    ],
)
def test_known_strings(text, n, m):
    g = parse_graph6(text)
    assert (g.n, g.m) == (n, m)
    assert emit_graph6(g) == text


def test_header_and_newline_are_accepted():
    assert parse_graph6(">>graph6<<C~\n") == clique(4)


@given(graphs(min_n=1, max_n=9))
def test_emit_matches_networkx(g):
    expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
    assert emit_graph6(g) == expected


def test_petersen_round_trip_through_networkx():
    text = emit_graph6(petersen())
    back = nx.from_graph6_bytes(text.encode())
    assert nx.is_isomorphic(back, nx.petersen_graph())
    assert parse_graph6(text) == petersen()


def test_long_header_for_63_vertices():
    g = path_graph(63)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_character_out_of_range_reports_offset():
    with pytest.raises(ParseError) as info:
        parse_graph6("C~ ")
    assert info.value.offset == 2


def test_truncated_body():
    with pytest.raises(ParseError):
        parse_graph6("D")


def test_trailing_bytes():
    with pytest.raises(ParseError) as info:
        parse_graph6("A_?")
    assert info.value.offset == 2


def test_nonzero_padding_bits():
    with pytest.raises(ParseError) as info:
        parse_graph6("D?@")
    assert info.value.offset == 2
    assert parse_graph6("D??") == empty_graph(5)


def test_empty_string():
    with pytest.raises(ParseError):
        parse_graph6("")


def test_too_many_vertices():
    with pytest.raises(CapacityError):
        parse_graph6("~?A?" + "?" * 400)


def test_empty_graph_bits_are_zero():
    assert emit_graph6(empty_graph(5)) == "D??"
    assert parse_graph6("D??") == Graph(5, (0,) * 5)
