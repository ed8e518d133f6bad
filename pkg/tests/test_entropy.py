import math
from collections import defaultdict
from fractions import Fraction

import pytest
from hypothesis import given

from indset.bitset import mask_of
from indset.entropy import (
    ChainAudit,
    ISetDistribution,
    audit_kahn_chain,
    binary_entropy,
    conditional_entropy,
    entropy,
    kahn_maximizer,
    kahn_objective,
    kahn_objective_maximum,
    marginals,
    shearer_instance,
    verify_shearer,
)
from indset.errors import CapacityError, DomainError
from indset.graph import (
    Bigraph,
    bipartition,
    clique,
    complete_bipartite,
    crown,
    cycle_graph,
    disjoint_union,
    empty_graph,
    hypercube,
    path_graph,
)
from strategies import joints

STEPS = [
    "chain_rule", "subadditivity", "conditioning", "q_determined", "indicator_identity",
    "combined_first_chain", "shearer", "split", "range_bound", "combined", "maximizer", "final",
]


def test_entropy_of_simple_distributions():
    assert entropy({"a": Fraction(1, 3), "b": Fraction(1, 3), "c": Fraction(1, 3)}) == pytest.approx(math.log2(3))
    assert entropy({"only": 1}) == 0.0
    assert entropy({0: Fraction(1, 2), 1: Fraction(1, 2), 2: 0}) == 1.0


def test_entropy_rejects_bad_distributions():
    with pytest.raises(DomainError):
        entropy({0: Fraction(1, 2), 1: Fraction(1, 3)})
    with pytest.raises(DomainError):
        entropy({0: Fraction(3, 2), 1: Fraction(-1, 2)})


def test_conditional_entropy():
    same = {(0, 0): Fraction(1, 2), (1, 1): Fraction(1, 2)}
    assert conditional_entropy(same) == 0.0
    independent = {(x, y): Fraction(1, 4) for x in (0, 1) for y in (0, 1)}
    assert conditional_entropy(independent) == pytest.approx(1.0)


@given(joints())
def test_conditioning_never_increases_entropy(joint):
    marginal: dict[int, Fraction] = defaultdict(Fraction)
    for (x, _), p in joint.items():
        marginal[x] += p
    h = conditional_entropy(joint)
    assert -1e-12 <= h <= entropy(marginal) + 1e-12


def test_binary_entropy():
    assert binary_entropy(Fraction(1, 2)) == 1.0
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0) == binary_entropy(1) == 0.0
    with pytest.raises(DomainError):
        binary_entropy(Fraction(3, 2))


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_maximizer_is_the_peak(d):
    x0 = kahn_maximizer(d)
    assert x0 == Fraction(2 ** d, 2 ** (d + 1) - 1)
    peak = kahn_objective_maximum(d)
    assert kahn_objective(x0, d) == pytest.approx(peak, abs=1e-12)
    grid = [Fraction(k, 1000) for k in range(1001)]
    assert max(kahn_objective(x, d) for x in grid) <= peak + 1e-12


def test_maximizer_for_one():
    assert kahn_maximizer(1) == Fraction(2, 3)
    assert kahn_objective_maximum(1) == pytest.approx(math.log2(3))
    with pytest.raises(DomainError):
        kahn_maximizer(0)


def test_distribution_of_an_edge():
    dist = ISetDistribution.of(clique(2))
    assert dist.total == 3
    assert dist.entropy() == pytest.approx(math.log2(3))
    assert dist.probability(0b11) == 0
    assert dist.probability(0b01) == Fraction(1, 3)
    assert dist.restricted(0b01) == {0: Fraction(2, 3), 1: Fraction(1, 3)}


def test_distribution_capacity():
    with pytest.raises(CapacityError):
        ISetDistribution.of(empty_graph(26))


def test_marginals():
    edge = marginals(clique(2))
    assert edge[0].p == Fraction(1, 3) and edge[0].q == Fraction(2, 3)
    square = marginals(cycle_graph(4))
    assert all(m.p == Fraction(2, 7) and m.q == Fraction(4, 7) for m in square.values())
    isolated = marginals(disjoint_union(path_graph(2), empty_graph(1)))
    assert isolated[2].q == 1
    assert isolated[2].p == Fraction(1, 2)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_audit_is_tight_on_complete_bipartite(d):
    audit = audit_kahn_chain(complete_bipartite(d, d), d)
    assert audit.passed
    assert len(audit.steps) == 2 * len(STEPS)
    for orientation in ("A|B", "B|A"):
        final = audit.step("final", orientation)
        assert abs(final.slack) <= 1e-9
    assert audit.log2_count == pytest.approx(math.log2(2 ** (d + 1) - 1))


@pytest.mark.parametrize("g, d", [(cycle_graph(6), 2), (hypercube(3), 3), (crown(4), 3), (cycle_graph(8), 2)])
def test_audit_is_strict_on_other_regular_bigraphs(g, d):
    audit = audit_kahn_chain(bipartition(g), d)
    assert audit.passed, [s.to_dict() for s in audit.steps if not s.passed]
    assert audit.step("final", "A|B").slack > 1e-6
    assert audit.step("q_determined", "B|A").passed


def test_chain_rule_step_uses_the_exact_conditional():
    bg = bipartition(cycle_graph(6))
    dist = ISetDistribution.of(bg.graph)
    p = Fraction(1, dist.total)
    joint = {(mask & bg.part_a, mask & bg.part_b): p for mask in dist.sets}
    expected = entropy(dist.restricted(bg.part_b)) + conditional_entropy(joint)
    step = audit_kahn_chain(bg, 2).step("chain_rule", "A|B")
    assert step.lhs == pytest.approx(dist.entropy(), abs=1e-12)
    assert step.rhs == pytest.approx(expected, abs=1e-12)
    assert step.passed


def test_audit_records_both_orientations():
    audit = audit_kahn_chain(bipartition(cycle_graph(6)), 2)
    names = [s.name for s in audit.steps if s.orientation == "A|B"]
    assert names == STEPS
    assert {s.orientation for s in audit.steps} == {"A|B", "B|A"}
    document = audit.to_dict()
    assert document["passed"] is True
    assert set(document["steps"][0]) == {"name", "orientation", "relation", "lhs_bits", "rhs_bits", "slack_bits", "pass"}


def test_audit_preconditions():
    with pytest.raises(DomainError):
        audit_kahn_chain(bipartition(cycle_graph(6)), 3)
    with pytest.raises(DomainError):
        audit_kahn_chain(bipartition(path_graph(3)), 1)
    with pytest.raises(DomainError):
        audit_kahn_chain(bipartition(empty_graph(0)), 1)
    with pytest.raises(CapacityError):
        audit_kahn_chain(complete_bipartite(12, 12), 12)


def test_chain_audit_record_relations():
    audit = ChainAudit(n=2, d=1, log2_count=1.0, tolerance=1e-9)
    assert audit.record("eq", "A|B", "=", 1.0, 1.0 + 1e-12).passed
    assert not audit.record("le", "A|B", "<=", 2.0, 1.0).passed
    with pytest.raises(DomainError):
        audit.record("bad", "A|B", "<", 1.0, 2.0)
    with pytest.raises(KeyError):
        audit.step("missing")


def test_shearer_on_the_uniform_square():
    dist = {s: Fraction(1, 4) for s in range(4)}
    result = verify_shearer(dist, 0b11, [0b01, 0b10], 1)
    assert result.passed
    assert result.lhs == pytest.approx(2.0)
    assert result.rhs == pytest.approx(2.0)
    doubled = verify_shearer(dist, 0b11, [0b11, 0b01, 0b10], 2)
    assert doubled.passed and doubled.rhs == pytest.approx(2.0)


def test_shearer_preconditions():
    dist = {s: Fraction(1, 4) for s in range(4)}
    with pytest.raises(DomainError):
        verify_shearer(dist, 0b11, [0b01, 0b10], 0)
    with pytest.raises(DomainError):
        verify_shearer(dist, 0b11, [0b01], 1)
    with pytest.raises(DomainError):
        verify_shearer({0b100: 1}, 0b11, [0b11], 1)
    with pytest.raises(DomainError):
        verify_shearer({0: Fraction(1, 2)}, 0b11, [0b11], 1)


@pytest.mark.parametrize("g", [complete_bipartite(2, 3).graph, cycle_graph(6), path_graph(5), hypercube(3)])
def test_shearer_instances_from_neighborhoods(g):
    bg = bipartition(g)
    for oriented in (bg, bg.swapped()):
        instance = shearer_instance(oriented)
        assert instance is not None
        assert verify_shearer(*instance).passed


def test_shearer_instance_needs_covered_part():
    g = empty_graph(2)
    assert shearer_instance(Bigraph(g, mask_of([0]), mask_of([1]))) is None
