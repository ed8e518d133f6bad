from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings

from indset.counting import (
    bigraph_polynomial,
    brute_force_count,
    count_in_mask,
    count_independent_sets,
    enumerate_independent_sets,
    highest_max_degree_pivot,
    independence_polynomial,
    iter_independent_masks,
)
from indset.errors import CapacityError, DomainError
from indset.graph import (
    bipartition,
    clique,
    complete_bipartite,
    cycle_graph,
    disjoint_union,
    double_cover,
    empty_graph,
    heawood,
    path_graph,
    petersen,
    star,
)
from strategies import graphs, to_networkx


@pytest.mark.parametrize(
    "g, expected",
    [
        (empty_graph(0), 1),
        (empty_graph(1), 2),
        (empty_graph(3), 8),
        (clique(2), 3),
        (clique(3), 4),
        (path_graph(4), 8),
        (cycle_graph(5), 11),
        (cycle_graph(6), 18),
        (cycle_graph(10), 123),
        (petersen(), 76),
        (star(3), 9),
    ],
)
def test_known_counts(g, expected):
    assert count_independent_sets(g) == expected
    assert brute_force_count(g) == expected


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_complete_bipartite_count(d):
    assert count_independent_sets(complete_bipartite(d, d).graph) == 2 ** (d + 1) - 1


def test_disjoint_union_multiplies():
    g = disjoint_union(complete_bipartite(3, 3).graph, complete_bipartite(3, 3).graph)
    assert count_independent_sets(g) == 225


def test_isolated_vertex_doubles():
    g = disjoint_union(complete_bipartite(1, 1).graph, empty_graph(1))
    assert count_independent_sets(g) == 6


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_recursion_agrees_with_brute_force(g):
    count = count_independent_sets(g)
    assert count == brute_force_count(g)
    assert count == count_independent_sets(g, pivot=highest_max_degree_pivot)
    assert count == independence_polynomial(g).count


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_polynomial_coefficients_count_sets_by_size(g):
    poly = independence_polynomial(g)
    sizes = [0] * (g.n + 1)
    for s in enumerate_independent_sets(g):
        sizes[len(s)] += 1
    while len(sizes) > 1 and sizes[-1] == 0:
        sizes.pop()
    assert poly.coeffs == tuple(sizes)


@settings(max_examples=30)
@given(graphs(min_n=1, max_n=7))
def test_degree_is_independence_number(g):
    complement = nx.complement(to_networkx(g))
    alpha = max(len(c) for c in nx.find_cliques(complement))
    assert independence_polynomial(g).degree == alpha


def test_cycle_polynomial(c5):
    poly = independence_polynomial(c5)
    assert poly.coeffs == (1, 5, 5)
    assert str(poly) == "1 + 5λ + 5λ^2"
    assert poly.evaluate(1) == 11
    assert poly.evaluate(Fraction(1, 2)) == Fraction(19, 4)


def test_petersen_polynomial():
    assert independence_polynomial(petersen()).coeffs == (1, 10, 30, 30, 5)


def test_enumeration_is_in_increasing_mask_order():
    masks = list(iter_independent_masks(path_graph(3)))
    assert masks == [0b000, 0b001, 0b010, 0b100, 0b101]
    assert masks == sorted(masks)


def test_enumeration_yields_frozensets():
    sets = list(enumerate_independent_sets(clique(2)))
    assert sets == [frozenset(), frozenset({0}), frozenset({1})]


def test_count_in_mask():
    g = cycle_graph(6)
    assert count_in_mask(g, 0b001111) == 8
    assert count_in_mask(g, 0) == 1


def test_brute_force_cap():
    with pytest.raises(CapacityError):
        brute_force_count(empty_graph(31))


def test_recursion_handles_large_sparse_graph():
    g = disjoint_union(heawood(), disjoint_union(heawood(), heawood()))
    single = count_independent_sets(heawood())
    assert count_independent_sets(g) == single ** 3


def test_bigraph_polynomial_of_k23():
    bg = complete_bipartite(2, 3)
    poly = bigraph_polynomial(bg)
    assert (poly.size_a, poly.size_b) == (2, 3)
    assert poly.get(0, 0) == 1
    assert poly.get(2, 0) == 1
    assert poly.get(0, 3) == 1
    assert poly.get(1, 1) == 0
    assert poly.evaluate2(1, 1) == 4 + 8 - 1
    assert poly.evaluate2(Fraction(1, 2), 2) == Fraction(9, 4) + 27 - 1


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_bigraph_polynomial_methods_agree(g):
    bg = bipartition(g)
    if bg is None:
        return
    recursion = bigraph_polynomial(bg)
    assert recursion == bigraph_polynomial(bg, method="enumeration")
    assert recursion.collapse() == independence_polynomial(g)
    assert recursion.evaluate2(1, 1) == count_independent_sets(g)


def test_bigraph_polynomial_of_double_cover_marginals():
    bg = double_cover(cycle_graph(5))
    poly = bigraph_polynomial(bg)
    assert poly.count == 123
    assert sum(poly.marginal_a()) == 123
    assert poly.marginal_a()[0] == 2 ** 5


def test_unknown_bigraph_method():
    with pytest.raises(DomainError):
        bigraph_polynomial(complete_bipartite(1, 1), method="magic")
