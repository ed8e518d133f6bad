"""
Exact entropy audit of the regular bipartite upper bound.

Every probability is an exact rational (or an integer count over i(G))
until the final logarithm; sums of logarithms use math.fsum. 0*log(1/0)
is taken as 0 throughout.
"""

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping

from indset.bitset import iter_bits, to_list
from indset.bounds import DEFAULT_TOLERANCE, log2_int, log2_rational, regular_upper_bound
from indset.counting import iter_independent_masks
from indset.errors import DomainError
from indset.graph import Bigraph, Graph, is_regular
from indset.polynomial import Rational
from limits import MAX_DISTRIBUTION, MAX_KAHN_AUDIT, check_capacity
from logging_utils import get_module_logger

entropy_logger = get_module_logger("entropy")


# --- generic entropies ---

def _normalized(dist: Mapping[Hashable, Rational]) -> dict[Hashable, Fraction]:
    probs = {}
    for outcome, p in dist.items():
        p = Fraction(p)
        if p < 0:
            raise DomainError(f"Negative probability {p} for outcome {outcome!r}")
        probs[outcome] = p
    total = sum(probs.values(), Fraction(0))
    if total != 1:
        raise DomainError(f"Probabilities sum to {total}, not 1")
    return probs


def _plogp(p: Fraction) -> float:
    """p * log2(1/p), with 0 at p = 0."""
    if p == 0:
        return 0.0
    return -float(p) * log2_rational(p)


def entropy(dist: Mapping[Hashable, Rational]) -> float:
    """Shannon entropy in bits of an exact distribution {outcome: probability}."""
    probs = _normalized(dist)
    return math.fsum(_plogp(p) for p in probs.values())


def conditional_entropy(joint: Mapping[tuple[Hashable, Hashable], Rational]) -> float:
    """H(X | Y) from a joint distribution keyed by (x, y)."""
    probs = _normalized(joint)
    p_y: dict[Hashable, Fraction] = defaultdict(Fraction)
    for (_, y), p in probs.items():
        p_y[y] += p
    terms = []
    for (_, y), p in probs.items():
        if p:
            terms.append(float(p) * log2_rational(p_y[y] / p))
    return math.fsum(terms)


def binary_entropy(x: Rational | float) -> float:
    if not 0 <= x <= 1:
        raise DomainError(f"Binary entropy needs 0 <= x <= 1, got {x}")
    if x == 0 or x == 1:
        return 0.0
    if isinstance(x, (Fraction, int)):
        x = Fraction(x)
        return _plogp(x) + _plogp(1 - x)
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def _check_degree(d: int) -> None:
    if d < 1:
        raise DomainError(f"Degree must be positive, got {d}")


def kahn_maximizer(d: int) -> Fraction:
    """x0 = 2^d / (2^{d+1} - 1), where H(x) + x*log2(2^d/(2^d-1)) peaks."""
    _check_degree(d)
    return Fraction(2 ** d, 2 ** (d + 1) - 1)


def kahn_objective(x: Rational | float, d: int) -> float:
    _check_degree(d)
    return binary_entropy(x) + float(x) * (d - log2_int(2 ** d - 1))


def kahn_objective_maximum(d: int) -> float:
    """Closed form of the peak: log2(2^{d+1} - 1) - log2(2^d - 1)."""
    _check_degree(d)
    return log2_int(2 ** (d + 1) - 1) - log2_int(2 ** d - 1)


# --- counts over a uniform distribution ---

def _entropy_of_counts(counts: Iterable[int], total: int) -> float:
    """H of the distribution {c / total}: log2(total) - (1/total) * sum c*log2(c)."""
    weighted = math.fsum(c * log2_int(c) for c in counts if c > 1)
    return log2_int(total) - weighted / total


def _conditional_of_counts(joint: Mapping[tuple[Hashable, Hashable], int], total: int) -> float:
    """H(X | Y) = sum over (x, y) of c_xy/total * log2(c_y / c_xy)."""
    c_y: Counter = Counter()
    for (_, y), c in joint.items():
        c_y[y] += c
    return math.fsum(c * (log2_int(c_y[y]) - log2_int(c)) for (_, y), c in joint.items() if c) / total


@dataclass(frozen=True)
class ISetDistribution:
    """The uniform distribution over all independent sets of a graph."""

    graph: Graph
    sets: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, limit: int = MAX_DISTRIBUTION) -> "ISetDistribution":
        check_capacity("independent set distribution", g.n, limit)
        return cls(g, tuple(iter_independent_masks(g)))

    @property
    def total(self) -> int:
        return len(self.sets)

    def probability(self, mask: int) -> Fraction:
        return Fraction(1, self.total) if self.graph.is_independent(mask) else Fraction(0)

    def restriction_counts(self, within: int) -> Counter:
        """Counts of I n within over all I."""
        return Counter(mask & within for mask in self.sets)

    def restricted(self, within: int) -> dict[int, Fraction]:
        return {s: Fraction(c, self.total) for s, c in self.restriction_counts(within).items()}

    def entropy(self) -> float:
        return _entropy_of_counts((1 for _ in self.sets), self.total)


@dataclass(frozen=True)
class VertexMarginal:
    p: Fraction
    q: Fraction


def marginals(g: Graph) -> dict[int, VertexMarginal]:
    """p(v) = Pr(v in I), q(v) = Pr(I n N(v) is empty) under the uniform distribution."""
    dist = ISetDistribution.of(g)
    out = {}
    for v in range(g.n):
        hit = sum(1 for mask in dist.sets if mask >> v & 1)
        free = sum(1 for mask in dist.sets if not mask & g.adj[v])
        out[v] = VertexMarginal(Fraction(hit, dist.total), Fraction(free, dist.total))
    return out


# --- the two-chain audit ---

EQ = "="
LE = "<="


@dataclass
class StepRecord:
    name: str
    orientation: str
    relation: str
    lhs: float
    rhs: float
    passed: bool = False
    slack: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "orientation": self.orientation,
            "relation": self.relation,
            "lhs_bits": self.lhs,
            "rhs_bits": self.rhs,
            "slack_bits": self.slack,
            "pass": self.passed,
        }


@dataclass
class ChainAudit:
    n: int
    d: int
    log2_count: float
    tolerance: float
    steps: list[StepRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps)

    def step(self, name: str, orientation: str = "A|B") -> StepRecord:
        for record in self.steps:
            if record.name == name and record.orientation == orientation:
                return record
        raise KeyError(f"No audit step {name!r} for orientation {orientation}")

    def record(self, name: str, orientation: str, relation: str, lhs: float, rhs: float) -> StepRecord:
        slack = rhs - lhs
        match relation:
            case "=":
                passed = abs(slack) <= self.tolerance
            case "<=":
                passed = slack >= -self.tolerance
            case _:
                raise DomainError(f"Unknown relation {relation!r}")
        entry = StepRecord(name, orientation, relation, lhs, rhs, passed, slack)
        self.steps.append(entry)
        return entry

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "log2_count": self.log2_count,
            "passed": self.passed,
            "steps": [step.to_dict() for step in self.steps],
        }


def _audit_orientation(audit: ChainAudit, dist: ISetDistribution, even: int, odd: int, d: int, label: str) -> None:
    """One pass of both chains with the sums running over `even` and the conditioning on I n `odd`."""
    g = dist.graph
    total = dist.total
    h_i = dist.entropy()

    by_odd = dist.restriction_counts(odd)
    h_odd = _entropy_of_counts(by_odd.values(), total)
    h_even_given_odd = _conditional_of_counts(Counter((mask & even, mask & odd) for mask in dist.sets), total)
    audit.record("chain_rule", label, EQ, h_i, h_odd + h_even_given_odd)

    cond_on_odd, cond_on_q, q_sum, determined = [], [], [], True
    for v in iter_bits(even):
        nbrs = g.adj[v]
        joint_odd: Counter = Counter()
        joint_q: Counter = Counter()
        q_of_restriction: dict[int, bool] = {}
        for mask in dist.sets:
            inside = bool(mask >> v & 1)
            q_event = not mask & nbrs
            joint_odd[(inside, mask & odd)] += 1
            joint_q[(inside, q_event)] += 1
            previous = q_of_restriction.setdefault(mask & odd, q_event)
            if previous != q_event:
                determined = False
        cond_on_odd.append(_conditional_of_counts(joint_odd, total))
        cond_on_q.append(_conditional_of_counts(joint_q, total))
        q_sum.append(sum(c for (_, q_event), c in joint_q.items() if q_event) / total)

    sum_on_odd = math.fsum(cond_on_odd)
    sum_on_q = math.fsum(cond_on_q)
    sum_q = math.fsum(q_sum)
    audit.record("subadditivity", label, LE, h_even_given_odd, sum_on_odd)
    audit.record("conditioning", label, LE, sum_on_odd, sum_on_q)
    audit.record("q_determined", label, EQ, 0.0, 0.0 if determined else 1.0)
    audit.record("indicator_identity", label, EQ, sum_on_q, sum_q)
    audit.record("combined_first_chain", label, LE, h_i, h_odd + sum_q)

    range_log = log2_int(2 ** d - 1)
    h_x, split_terms, tail_terms, range_terms, objective_terms = [], [], [], [], []
    for v in iter_bits(even):
        x_counts = Counter(mask & g.adj[v] for mask in dist.sets)
        empty = x_counts.get(0, 0)
        nonempty = total - empty
        q = Fraction(empty, total)
        h_x.append(_entropy_of_counts(x_counts.values(), total))
        tail = 0.0
        if nonempty:
            tail = _entropy_of_counts((c for s, c in x_counts.items() if s), nonempty)
        split_terms.append(binary_entropy(q) + float(1 - q) * tail)
        tail_terms.append(float(1 - q) * tail)
        range_terms.append(float(1 - q) * range_log)
        objective_terms.append(kahn_objective(q, d))

    shearer_rhs = math.fsum(h_x) / d
    audit.record("shearer", label, LE, h_odd, shearer_rhs)
    audit.record("split", label, EQ, math.fsum(h_x), math.fsum(split_terms))
    audit.record("range_bound", label, LE, math.fsum(tail_terms), math.fsum(range_terms))

    combined = (math.fsum(split_terms) - math.fsum(tail_terms) + math.fsum(range_terms)) / d + sum_q
    audit.record("combined", label, LE, h_i, combined)

    size_even = even.bit_count()
    audit.record("maximizer", label, LE, math.fsum(objective_terms), size_even * kahn_objective_maximum(d))
    audit.record("final", label, LE, h_i, regular_upper_bound(g.n, d))


def audit_kahn_chain(bg: Bigraph, d: int, tolerance: float = DEFAULT_TOLERANCE) -> ChainAudit:
    """
    Every step of the two entropy chains for a d-regular bigraph, once with
    the sums over part A (conditioning on I n B) and once with the parts
    exchanged. Orientation labels are "A|B" and "B|A".
    """
    _check_degree(d)
    g = bg.graph
    if g.n == 0:
        raise DomainError("The entropy audit needs at least one vertex")
    if is_regular(g) != d:
        raise DomainError(f"The entropy audit needs a {d}-regular graph")
    check_capacity("entropy audit", g.n, MAX_KAHN_AUDIT)

    dist = ISetDistribution.of(g, MAX_KAHN_AUDIT)
    audit = ChainAudit(n=g.n, d=d, log2_count=log2_int(dist.total), tolerance=tolerance)
    _audit_orientation(audit, dist, bg.part_a, bg.part_b, d, "A|B")
    _audit_orientation(audit, dist, bg.part_b, bg.part_a, d, "B|A")

    failed = [f"{s.name}[{s.orientation}]" for s in audit.steps if not s.passed]
    if failed:
        entropy_logger.error(f"Entropy audit failed on {g} at {', '.join(failed)}")
    else:
        entropy_logger.debug(f"Entropy audit passed on {g} with {len(audit.steps)} steps")
    return audit


# --- Shearer's inequality ---

@dataclass
class ShearerResult:
    lhs: float
    rhs: float
    multiplicity: int
    passed: bool

    def to_dict(self) -> dict:
        return {
            "lhs_bits": self.lhs,
            "rhs_bits": self.rhs,
            "slack_bits": self.rhs - self.lhs,
            "multiplicity": self.multiplicity,
            "pass": self.passed,
        }


def verify_shearer(dist: Mapping[int, Rational], ground: int, cover: Iterable[int], m: int,
                   tolerance: float = DEFAULT_TOLERANCE) -> ShearerResult:
    """
    H(X) <= (1/m) * sum over A in cover of H(X_A), for X a random subset of
    `ground` (outcomes are masks) and every ground element in >= m members.
    """
    cover = list(cover)
    if m < 1:
        raise DomainError(f"Multiplicity must be positive, got {m}")
    for x in iter_bits(ground):
        hits = sum(1 for member in cover if member >> x & 1)
        if hits < m:
            raise DomainError(f"Element {x} lies in {hits} cover members, fewer than {m}")
    probs = _normalized(dist)
    for outcome in probs:
        if outcome & ~ground:
            raise DomainError(f"Outcome {to_list(outcome)} is not a subset of the ground set")

    lhs = entropy(probs)
    restricted_entropies = []
    for member in cover:
        marginal: dict[int, Fraction] = defaultdict(Fraction)
        for outcome, p in probs.items():
            marginal[outcome & member] += p
        restricted_entropies.append(entropy(marginal))
    rhs = math.fsum(restricted_entropies) / m
    return ShearerResult(lhs=lhs, rhs=rhs, multiplicity=m, passed=lhs <= rhs + tolerance)


def shearer_instance(bg: Bigraph) -> tuple[dict[int, Fraction], int, list[int], int] | None:
    """
    The instance used by the audit: X = I n B, cover {N(v): v in A}, m the
    least number of times a vertex of B is covered. None when some vertex
    of B is isolated.
    """
    g = bg.graph
    cover = [g.adj[v] for v in iter_bits(bg.part_a)]
    m = min((sum(1 for member in cover if member >> x & 1) for x in iter_bits(bg.part_b)), default=0)
    if m < 1:
        return None
    dist = ISetDistribution.of(g)
    return dist.restricted(bg.part_b), bg.part_b, cover, m
