"""
Closed-form extremal bounds on i(G) and P_G(lambda), evaluated in log2
space, together with the equality-case checks and the j-functional audit
of the max-degree recursion step.
"""

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from mpmath import mp, mpf

from indset.bitset import bit
from indset.counting import bigraph_polynomial, count_in_mask, count_independent_sets, independence_polynomial
from indset.errors import DomainError
from indset.graph import (
    Bigraph,
    Graph,
    bipartition,
    delete_closed_neighborhood,
    delete_vertex,
    is_bipartite,
    is_clique_union,
    is_complete_bipartite_component_union,
    is_connected,
    is_regular,
    isolated_count,
    layer_decomposition,
    max_degree_vertex,
)
from indset.polynomial import Rational
from logging_utils import get_module_logger

bounds_logger = get_module_logger("bounds")

DEFAULT_TOLERANCE = 1e-9
_MANTISSA_BITS = 64


# --- log2 of exact values ---

def log2_int(x: int) -> float:
    """log2 of a positive integer from its bit length and a 64-bit leading window."""
    if x <= 0:
        raise DomainError(f"log2 needs a positive integer, got {x}")
    shift = max(0, x.bit_length() - _MANTISSA_BITS)
    return math.log2(x >> shift) + shift


def log2_rational(q: Rational) -> float:
    q = Fraction(q)
    if q <= 0:
        raise DomainError(f"log2 needs a positive value, got {q}")
    return log2_int(q.numerator) - log2_int(q.denominator)


def _positive(name: str, value: Rational) -> Fraction:
    value = Fraction(value)
    if value <= 0:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


# --- bounds ---

def regular_upper_bound(n: int, d: int) -> float:
    """(n/2d) * log2(2^{d+1} - 1), the value at disjoint unions of K_{d,d}."""
    if n < 1 or d < 1:
        raise DomainError(f"Regular bound needs n >= 1 and d >= 1, got ({n}, {d})")
    return n / (2 * d) * log2_int(2 ** (d + 1) - 1)


def regular_lower_bound(n: int, d: int) -> float:
    """(n/(d+1)) * log2(d+2), the value at disjoint unions of K_{d+1}."""
    if n < 1 or d < 0:
        raise DomainError(f"Regular lower bound needs n >= 1 and d >= 0, got ({n}, {d})")
    return n / (d + 1) * log2_int(d + 2)


def _edge_product_log2(g: Graph, one_plus_lam: Fraction) -> float:
    degrees = g.degrees()
    terms = [isolated_count(g) * log2_rational(one_plus_lam)]
    for u, v in g.edges():
        du, dv = degrees[u], degrees[v]
        terms.append(log2_rational(one_plus_lam ** du + one_plus_lam ** dv - 1) / (du * dv))
    return math.fsum(terms)


def irregular_upper_bound(g: Graph) -> float:
    """iso(G) + sum over edges of log2(2^du + 2^dv - 1) / (du dv)."""
    return _edge_product_log2(g, Fraction(2))


def upper_bound_no_isolated(g: Graph) -> float:
    """The irregular upper bound restricted to graphs without isolated vertices."""
    if isolated_count(g):
        raise DomainError("This form of the upper bound excludes isolated vertices")
    return irregular_upper_bound(g)


def j_value(g: Graph) -> float:
    """log2 j(G); the same quantity as the irregular upper bound."""
    return irregular_upper_bound(g)


def weighted_upper_bound(g: Graph, lam: Rational) -> float:
    """log2 of prod over edges P_{K_{du,dv}}(lambda)^{1/(du dv)}, times (1+lambda) per isolated vertex."""
    lam = _positive("lambda", lam)
    return _edge_product_log2(g, 1 + lam)


def bigraph_upper_bound(bg: Bigraph, lam: Rational, mu: Rational) -> float:
    """
    Sum over edges uv (u in A, v in B) of
    log2((1+lambda)^{dv} + (1+mu)^{du} - 1) / (du dv), plus log2(1+lambda)
    per isolated A-vertex and log2(1+mu) per isolated B-vertex.
    """
    lam = _positive("lambda", lam)
    mu = _positive("mu", mu)
    g = bg.graph
    degrees = g.degrees()
    terms = []
    for v in range(g.n):
        if degrees[v] == 0:
            terms.append(log2_rational(1 + lam) if bg.part_a >> v & 1 else log2_rational(1 + mu))
    for x, y in g.edges():
        u, v = (x, y) if bg.part_a >> x & 1 else (y, x)
        du, dv = degrees[u], degrees[v]
        terms.append(log2_rational((1 + lam) ** dv + (1 + mu) ** du - 1) / (du * dv))
    return math.fsum(terms)


def weighted_lower_bound(g: Graph, lam: Rational) -> float:
    """Sum over vertices of log2((dv+1) lambda + 1) / (dv+1)."""
    lam = _positive("lambda", lam)
    return math.fsum(log2_rational((d + 1) * lam + 1) / (d + 1) for d in g.degrees())


def lower_bound(g: Graph) -> float:
    """Sum over vertices of log2(dv + 2) / (dv + 1)."""
    return weighted_lower_bound(g, 1)


# --- reports ---

UPPER = "upper"
LOWER = "lower"

EQUALITY_PREDICATES = {
    "irregular_upper": is_complete_bipartite_component_union,
    "lower": is_clique_union,
}


@dataclass
class BoundEntry:
    name: str
    kind: str
    log2_bound: float
    log2_value: float
    slack: float
    numeric_equality: bool
    structural_equality: bool
    biconditional: bool


@dataclass
class BoundReport:
    graph_id: str
    log2_count: float
    entries: list[BoundEntry] = field(default_factory=list)
    tolerance: float = DEFAULT_TOLERANCE

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise DomainError(f"No bound named {name!r} in the report")

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "log2_count": self.log2_count,
            "tolerance": self.tolerance,
            "bounds": [
                asdict(e) | {"holds": bound_holds(e, self.tolerance)}
                for e in self.entries
            ],
        }


def bound_holds(entry: BoundEntry, tolerance: float) -> bool:
    if entry.kind == UPPER:
        return entry.slack >= -tolerance
    return entry.slack <= tolerance


def _entry(name: str, kind: str, log2_bound: float, log2_value: float, structural: bool,
           biconditional: bool, tolerance: float) -> BoundEntry:
    slack = log2_bound - log2_value
    return BoundEntry(
        name=name,
        kind=kind,
        log2_bound=log2_bound,
        log2_value=log2_value,
        slack=slack,
        numeric_equality=abs(slack) <= tolerance,
        structural_equality=structural,
        biconditional=biconditional,
    )


def bound_report(g: Graph, graph_id: str = "", lam: Rational | None = None, mu: Rational | None = None,
                 tolerance: float = DEFAULT_TOLERANCE) -> BoundReport:
    """
    Exact log2 i(G) against every applicable bound.

    With lam the weighted bounds are compared with log2 P_G(lambda); with lam
    and mu on a bipartite graph the bigraph bound is compared with the exact
    two-variable value under the canonical bipartition.
    """
    count = count_independent_sets(g)
    log2_count = log2_int(count)
    complete_bipartite_union = is_complete_bipartite_component_union(g)
    clique_union = is_clique_union(g)
    report = BoundReport(graph_id=graph_id, log2_count=log2_count, tolerance=tolerance)

    report.entries.append(_entry("irregular_upper", UPPER, irregular_upper_bound(g), log2_count,
                                 complete_bipartite_union, True, tolerance))
    report.entries.append(_entry("lower", LOWER, lower_bound(g), log2_count, clique_union, True, tolerance))

    d = is_regular(g)
    if d and g.n:
        report.entries.append(_entry("regular_upper", UPPER, regular_upper_bound(g.n, d), log2_count,
                                     complete_bipartite_union, False, tolerance))
        report.entries.append(_entry("regular_lower", LOWER, regular_lower_bound(g.n, d), log2_count,
                                     clique_union, False, tolerance))

    if lam is not None:
        lam = _positive("lambda", lam)
        log2_p = log2_rational(independence_polynomial(g).evaluate(lam))
        report.entries.append(_entry(f"weighted_upper[{lam}]", UPPER, weighted_upper_bound(g, lam), log2_p,
                                     complete_bipartite_union, False, tolerance))
        report.entries.append(_entry(f"weighted_lower[{lam}]", LOWER, weighted_lower_bound(g, lam), log2_p,
                                     clique_union, False, tolerance))
        bg = bipartition(g)
        if mu is not None and bg is not None:
            mu = _positive("mu", mu)
            log2_p2 = log2_rational(bigraph_polynomial(bg).evaluate2(lam, mu))
            report.entries.append(_entry(f"bigraph_upper[{lam},{mu}]", UPPER, bigraph_upper_bound(bg, lam, mu),
                                         log2_p2, complete_bipartite_union, True, tolerance))

    bounds_logger.debug(f"Bound report for {graph_id or g}: log2 i = {log2_count:.6f}")
    return report


@dataclass(frozen=True)
class EqualityCheck:
    numeric: bool
    structural: bool

    @property
    def consistent(self) -> bool:
        return self.numeric == self.structural


def equality_case_check(g: Graph, bound: str, tolerance: float = DEFAULT_TOLERANCE) -> EqualityCheck:
    """Numeric equality at tolerance against the structural characterization of the extremal graphs."""
    match bound:
        case "irregular_upper":
            log2_bound = irregular_upper_bound(g)
        case "lower":
            log2_bound = lower_bound(g)
        case _:
            raise DomainError(f"Unknown bound {bound!r}; expected one of {sorted(EQUALITY_PREDICATES)}")
    log2_count = log2_int(count_independent_sets(g))
    result = EqualityCheck(
        numeric=abs(log2_bound - log2_count) <= tolerance,
        structural=EQUALITY_PREDICATES[bound](g),
    )
    if not result.consistent:
        bounds_logger.warning(f"Equality case mismatch for {bound} on {g}: {result}")
    return result


# --- j-functional recursion step ---

_J_PRECISION = 60


def j_linear(g: Graph) -> mpf:
    """j(G) itself, at high precision."""
    with mp.workdps(_J_PRECISION):
        degrees = g.degrees()
        value = mpf(2) ** isolated_count(g)
        for u, v in g.edges():
            du, dv = degrees[u], degrees[v]
            value *= mpf(2 ** du + 2 ** dv - 1) ** (mpf(1) / (du * dv))
        return +value


@dataclass
class JDecomposition:
    pivot: int
    j_g: float
    j_g_minus_w: float
    j_g_minus_w_minus_nw: float
    iso_g: int
    iso_g_minus_w: int
    iso_g_minus_w_minus_nw: int
    isolated_layer_1: int
    isolated_layer_2: int
    layer_form_agrees: bool
    recursion_agrees: bool
    linear_lhs: str
    linear_rhs: str
    passed: bool

    @property
    def iso_consistent(self) -> bool:
        return (self.iso_g == 0 and self.iso_g_minus_w == self.isolated_layer_1
                and self.iso_g_minus_w_minus_nw == self.isolated_layer_2)

    def to_dict(self) -> dict:
        return asdict(self) | {"iso_consistent": self.iso_consistent}


def layer_j_terms(g: Graph, w: int) -> tuple[float, float]:
    """
    log2 j(G - w) and log2 j(G - w - N(w)) rebuilt from the layers around w
    of a connected bipartite G.

    In G - w a vertex of V_1 keeps only its forward edges; in G - w - N(w) a
    vertex of V_2 keeps only its forward edges; every other degree is
    unchanged. Isolated vertices are exactly I_1, resp. I_2.
    """
    layers = layer_decomposition(g, w)
    degrees = g.degrees()

    def term(du: int, dv: int) -> float:
        return log2_int(2 ** du + 2 ** dv - 1) / (du * dv)

    def after_removal(first_layer: int) -> float:
        terms = [float(len(layers.isolated_layers[first_layer])) if first_layer < len(layers.layers) else 0.0]
        for k in range(first_layer + 1, len(layers.edge_layers)):
            for u, v in layers.edge_layers[k]:
                du = layers.forward_degree[u] if k == first_layer + 1 else degrees[u]
                terms.append(term(du, degrees[v]))
        return math.fsum(terms)

    return after_removal(1), after_removal(2)


def verify_j_inequality(g: Graph, tolerance: float = DEFAULT_TOLERANCE) -> JDecomposition:
    """
    Check j(G - w) + j(G - w - N(w)) <= j(G) for the lowest-index
    maximum-degree vertex w, comparing in linear space.
    """
    if g.n < 2:
        raise DomainError("The j-inequality needs at least 2 vertices")
    if not is_connected(g):
        raise DomainError("The j-inequality needs a connected graph")
    if not is_bipartite(g):
        raise DomainError("The j-inequality needs a bipartite graph")
    if isolated_count(g):
        raise DomainError("The j-inequality needs a graph without isolated vertices")

    w = max_degree_vertex(g)
    g_w = delete_vertex(g, w).graph
    g_wn = delete_closed_neighborhood(g, w).graph
    layers = layer_decomposition(g, w)

    with mp.workdps(_J_PRECISION):
        lhs = j_linear(g_w) + j_linear(g_wn)
        rhs = j_linear(g)
        passed = bool(lhs <= rhs * (1 + mpf(tolerance)))
        lhs_text, rhs_text = mp.nstr(lhs, 20), mp.nstr(rhs, 20)

    j_g, j_g_w, j_g_wn = j_value(g), j_value(g_w), j_value(g_wn)
    layer_w, layer_wn = layer_j_terms(g, w)
    layer_form_agrees = abs(layer_w - j_g_w) <= tolerance and abs(layer_wn - j_g_wn) <= tolerance
    # i(G) = i(G - w) + i(G - w - N(w)), counted on masks of G
    rest = g.vertex_mask & ~bit(w)
    recursion_agrees = count_in_mask(g, rest) + count_in_mask(g, rest & ~g.adj[w]) == count_independent_sets(g)

    result = JDecomposition(
        pivot=w,
        j_g=j_g,
        j_g_minus_w=j_g_w,
        j_g_minus_w_minus_nw=j_g_wn,
        iso_g=isolated_count(g),
        iso_g_minus_w=isolated_count(g_w),
        iso_g_minus_w_minus_nw=isolated_count(g_wn),
        isolated_layer_1=len(layers.isolated_layers[1]),
        isolated_layer_2=len(layers.isolated_layers[2]) if len(layers.layers) > 2 else 0,
        layer_form_agrees=layer_form_agrees,
        recursion_agrees=recursion_agrees,
        linear_lhs=lhs_text,
        linear_rhs=rhs_text,
        passed=passed,
    )
    bounds_logger.debug(f"j-inequality at pivot {w} on {g}: {lhs_text} <= {rhs_text} -> {passed}")
    return result
