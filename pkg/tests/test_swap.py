import pytest
from hypothesis import given, settings

from indset.bitset import mask_of
from indset.counting import count_independent_sets, iter_independent_masks
from indset.errors import CapacityError, DomainError
from indset.graph import clique, complete_bipartite, cycle_graph, empty_graph, path_graph, petersen
from indset.swap import (
    BipartiteSwap,
    IndependentPair,
    SwapPair,
    count_J,
    count_cross_independent_pairs,
    cross_edges,
    enumerate_J,
    pairs_of_sets,
    swap_backward,
    swap_forward,
    verify_double_cover_inequality,
    verify_swap_bijection,
)
from strategies import graphs


@pytest.mark.parametrize("g, expected", [(empty_graph(0), 1), (clique(2), 9), (clique(3), 16), (cycle_graph(5), 121)])
def test_j_size_is_count_squared(g, expected):
    assert count_J(g) == expected
    assert sum(1 for _ in enumerate_J(g)) == expected


def test_identical_sets_map_to_themselves():
    g = cycle_graph(6)
    s = mask_of([0, 2, 4])
    assert swap_forward(g, IndependentPair(s, s)) == SwapPair(s, s)


def test_forward_on_a_path():
    g = path_graph(3)
    image = swap_forward(g, IndependentPair(mask_of([0]), mask_of([1])))
    assert image == SwapPair(mask_of([0, 1]), 0)
    assert swap_backward(g, image) == IndependentPair(mask_of([0]), mask_of([1]))


def test_forward_rejects_dependent_sets():
    with pytest.raises(DomainError):
        swap_forward(path_graph(3), IndependentPair(mask_of([0, 1]), 0))
    with pytest.raises(DomainError):
        IndependentPair.of(path_graph(3), 0, mask_of([1, 2]))


def test_backward_rejects_pairs_outside_j():
    with pytest.raises(DomainError):
        swap_backward(path_graph(3), SwapPair(mask_of([0]), mask_of([1])))
    with pytest.raises(DomainError):
        swap_backward(clique(3), SwapPair(mask_of([0, 1, 2]), 0))
    with pytest.raises(DomainError):
        BipartiteSwap(clique(3)).backward(mask_of([0, 1]), mask_of([2]))


def test_cross_edges():
    g = path_graph(3)
    assert cross_edges(g, mask_of([0]), mask_of([1]))
    assert not cross_edges(g, mask_of([0]), mask_of([2]))


def test_swap_preserves_the_union():
    g = petersen()
    swapper = BipartiteSwap(g)
    isets = list(iter_independent_masks(g))[:40]
    for a in isets:
        for b in isets:
            fa, fb = swapper.forward(a, b)
            assert fa | fb == a | b
            assert not cross_edges(g, fa, fb)


@pytest.mark.parametrize("g", [path_graph(4), cycle_graph(5), clique(3), complete_bipartite(2, 2).graph, empty_graph(3)])
def test_bijection_on_small_graphs(g):
    result = verify_swap_bijection(g)
    assert result.passed, result.witness
    assert result.j_size == count_independent_sets(g) ** 2
    assert result.witness is None


@settings(max_examples=25)
@given(graphs(max_n=6))
def test_bijection_on_random_graphs(g):
    assert verify_swap_bijection(g).passed


def test_bijection_capacity():
    with pytest.raises(CapacityError):
        verify_swap_bijection(empty_graph(15))


def test_pairs_of_sets_covers_the_square():
    assert sum(1 for _ in pairs_of_sets(clique(3))) == 16


@pytest.mark.parametrize("g, cover", [(cycle_graph(5), 123), (clique(3), 18), (petersen(), None)])
def test_double_cover_inequality(g, cover):
    result = verify_double_cover_inequality(g)
    assert result.passed
    assert result.count ** 2 <= result.cover_count
    assert result.cross_independent_pairs == result.cover_count
    assert result.regular_degree is not None
    assert result.half_log2_cover <= result.regular_bound + 1e-9
    if cover is not None:
        assert result.cover_count == cover
        assert result.j_size == result.count ** 2


def test_double_cover_on_irregular_graph_has_no_regular_bound(p4):
    result = verify_double_cover_inequality(p4)
    assert result.passed
    assert result.regular_bound is None
    assert result.to_dict()["count_squared"] == "64"


def test_double_cover_capacity():
    with pytest.raises(CapacityError):
        verify_double_cover_inequality(empty_graph(16))


@settings(max_examples=30)
@given(graphs(max_n=7))
def test_cross_independent_pairs_count_the_cover(g):
    result = verify_double_cover_inequality(g)
    assert result.passed
    assert count_cross_independent_pairs(g) == result.cover_count
