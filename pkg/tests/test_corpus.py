from fractions import Fraction
from pathlib import Path

import pytest

from harness.corpus import (
    NAMED_GRAPHS,
    REGULAR_GRAPHS,
    CorpusEntry,
    build_corpus,
    generate_exhaustive,
    graph_from_bits,
    load_corpus_file,
    lookup_named,
    looks_like_edge_list,
    named_corpus,
    regular_corpus,
)
from harness.inputs import resolve_graph
from harness.runconfig import RunConfig, load_run_config, parse_rational, parse_weight_grid
from indset.errors import CapacityError, DomainError, ParseError
from indset.graph import clique, complete_bipartite, is_regular, petersen
from indset.graph6 import emit_graph6


@pytest.mark.parametrize("n, size", [(1, 1), (2, 2), (3, 8), (4, 64)])
def test_exhaustive_tier_sizes(n, size):
    entries = generate_exhaustive(n)
    assert len(entries) == size
    assert entries[0].graph_id == f"ex{n}-0"
    assert all(e.tag == f"exhaustive-{n}" for e in entries)


@pytest.mark.slow
def test_exhaustive_tier_six():
    assert len(generate_exhaustive(6)) == 32768


def test_exhaustive_bits_follow_graph6_column_order():
    assert emit_graph6(graph_from_bits(3, 7)) == "Bw"
    assert graph_from_bits(3, 0b100).adj == (0, 0b100, 0b010)


def test_exhaustive_tier_bounds():
    with pytest.raises(DomainError):
        generate_exhaustive(0)
    with pytest.raises(CapacityError):
        generate_exhaustive(8)


def test_named_fixtures():
    named = {e.graph_id: e.graph for e in named_corpus()}
    assert named["petersen"] == petersen()
    assert named["k3,3"] == complete_bipartite(3, 3).graph
    assert named["k3+k3"].m == 6
    assert "c4+k1+k1" in NAMED_GRAPHS
    assert lookup_named("k4") == clique(4)
    assert lookup_named("no-such-graph") is None


def test_regular_fixtures_are_tagged_by_degree():
    for entry in regular_corpus():
        d = is_regular(entry.graph)
        assert d
        assert entry.tag == f"regular-({entry.graph.n},{d})"
    assert len(REGULAR_GRAPHS) == len(regular_corpus())


def test_payload_round_trip():
    entry = CorpusEntry("petersen", petersen(), "named")
    assert CorpusEntry.from_payload(entry.to_payload()) == entry


def test_build_corpus_order_and_ids():
    entries = build_corpus(3, include_named=True, include_regular=False)
    ids = [e.graph_id for e in entries]
    assert ids[:4] == ["ex1-0", "ex2-0", "ex2-1", "ex3-0"]
    assert len(ids) == len(set(ids))
    assert len(entries) == 1 + 2 + 8 + len(NAMED_GRAPHS)


def test_build_corpus_rejects_duplicate_ids(tmp_path):
    first = tmp_path / "a" / "dup.g6"
    second = tmp_path / "b" / "dup.g6"
    first.parent.mkdir()
    second.parent.mkdir()
    first.write_text("A_\n")
    second.write_text("Bw\n")
    with pytest.raises(DomainError):
        build_corpus(0, include_named=False, include_regular=False, files=(first, second))


def test_graph6_file(tmp_path):
    path = tmp_path / "small.g6"
    path.write_text("A_\n\nBw\n")
    entries = load_corpus_file(path)
    assert [e.graph_id for e in entries] == ["small-1", "small-3"]
    assert entries[1].graph == clique(3)


def test_bad_graph6_line_reports_file_and_line(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("A_\nA_?\n")
    with pytest.raises(ParseError) as info:
        load_corpus_file(path)
    assert info.value.line == 2
    assert "bad.g6" in str(info.value)


def test_edge_list_file(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text("# a square\n4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert looks_like_edge_list(path.read_text())
    [entry] = load_corpus_file(path)
    assert entry.graph_id == "square-1"
    assert is_regular(entry.graph) == 2


def test_missing_file():
    with pytest.raises(DomainError):
        load_corpus_file(Path("/nonexistent/graphs.g6"))


def test_resolve_graph(tmp_path):
    assert resolve_graph("k3,3") == ("k3,3", complete_bipartite(3, 3).graph)
    assert resolve_graph("Bw") == ("Bw", clique(3))
    path = tmp_path / "tri.g6"
    path.write_text("Bw\n")
    assert resolve_graph(str(path)) == ("tri-1", clique(3))
    with pytest.raises(ParseError):
        resolve_graph("not a graph")


def test_rational_parsing():
    assert parse_rational(" 3/4 ") == Fraction(3, 4)
    assert parse_weight_grid("1/2:2, 1:1") == ((Fraction(1, 2), Fraction(2)), (Fraction(1), Fraction(1)))
    with pytest.raises(DomainError):
        parse_rational("half")
    with pytest.raises(DomainError):
        parse_weight_grid("1/2")


def test_default_weights_cover_the_full_grid():
    config = RunConfig(workers=1)
    halves = (Fraction(1, 2), Fraction(1), Fraction(2))
    assert set(config.lambdas) == set(halves) | {Fraction(5)}
    assert set(config.weight_grid) == {(lam, mu) for lam in halves for mu in halves}


def test_run_config_validation():
    with pytest.raises(DomainError):
        RunConfig(tolerance=0)
    with pytest.raises(DomainError):
        RunConfig(max_exhaustive_n=8)
    with pytest.raises(DomainError):
        RunConfig(workers=0)
    with pytest.raises(DomainError):
        RunConfig(backend="threads")
    with pytest.raises(DomainError):
        RunConfig(formats=("xml",))
    with pytest.raises(DomainError):
        RunConfig(lambdas=(Fraction(0),))


def test_load_run_config_file_and_overrides(tmp_path):
    path = tmp_path / "sweep.env"
    path.write_text(
        "MAX_EXHAUSTIVE_N=3\n"
        "INCLUDE_REGULAR=false\n"
        "LAMBDAS=1/3,1\n"
        "WEIGHT_GRID=1:2\n"
        "FORMATS=json,csv\n"
        "WORKERS=2\n"
    )
    config = load_run_config(path, workers=1, tolerance=None)
    assert config.max_exhaustive_n == 3
    assert config.include_regular is False
    assert config.include_named is True
    assert config.lambdas == (Fraction(1, 3), Fraction(1))
    assert config.weight_grid == ((Fraction(1), Fraction(2)),)
    assert config.formats == ("json", "csv")
    assert config.workers == 1
    assert config.tolerance == 1e-9


def test_load_run_config_rejects_unknown_keys(tmp_path):
    path = tmp_path / "sweep.env"
    path.write_text("COLOR=blue\n")
    with pytest.raises(DomainError):
        load_run_config(path)
    with pytest.raises(DomainError):
        load_run_config(tmp_path / "missing.env")
