"""
Per-graph verification checks.

Each check declares a precondition (a skip reason, or None when the graph
is in its domain) and a body producing one outcome per variant. Bodies
never see out-of-domain graphs; exceptions raised inside a body become a
recorded failure carrying the error text.
"""

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from indset.bounds import (
    LOWER,
    UPPER,
    bigraph_upper_bound,
    bound_holds,
    bound_report,
    log2_int,
    log2_rational,
    verify_j_inequality,
    weighted_lower_bound,
    weighted_upper_bound,
)
from indset.counting import (
    bigraph_polynomial,
    brute_force_count,
    count_independent_sets,
    highest_max_degree_pivot,
    independence_polynomial,
)
from indset.entropy import (
    audit_kahn_chain,
    kahn_maximizer,
    kahn_objective,
    kahn_objective_maximum,
    shearer_instance,
    verify_shearer,
)
from indset.errors import DomainError
from indset.graph import (
    Graph,
    bipartition,
    is_clique_union,
    is_complete_bipartite_component_union,
    is_connected,
    is_regular,
    isolated_count,
)
from indset.graph6 import emit_graph6
from indset.swap import verify_double_cover_inequality, verify_swap_bijection
from harness.corpus import CorpusEntry
from limits import MAX_COVER_COUNT, MAX_DISTRIBUTION, MAX_KAHN_AUDIT
from logging_utils import get_module_logger

checks_logger = get_module_logger("checks")

PASSED = "passed"
FAILED = "failed"
SKIPPED = "skipped"

ORACLE_LIMIT = 20
SWAP_LIMIT = 6
MAXIMIZER_DEGREES = range(1, 7)
MAXIMIZER_GRID = 1000


@dataclass
class CheckContext:
    lambdas: tuple[Fraction, ...] = (Fraction(1),)
    weight_grid: tuple[tuple[Fraction, Fraction], ...] = ((Fraction(1), Fraction(1)),)
    tolerance: float = 1e-9

    @classmethod
    def from_dict(cls, data: dict) -> "CheckContext":
        return cls(
            lambdas=tuple(Fraction(x) for x in data.get("lambdas", ["1"])),
            weight_grid=tuple((Fraction(a), Fraction(b)) for a, b in data.get("weight_grid", [["1", "1"]])),
            tolerance=float(data.get("tolerance", 1e-9)),
        )


@dataclass
class Outcome:
    variant: str
    passed: bool
    lhs_bits: float | None = None
    rhs_bits: float | None = None
    equality: bool = False
    detail: dict = field(default_factory=dict)


@dataclass
class CheckResult:
    graph_id: str
    graph6: str
    n: int
    m: int
    check: str
    variant: str
    result: str
    lhs_bits: float | None = None
    rhs_bits: float | None = None
    slack_bits: float | None = None
    equality: bool = False
    detail: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        return f"{self.check}[{self.variant}]" if self.variant else self.check

    def row(self) -> dict:
        """One CSV row."""
        return {
            "graph_id": self.graph_id,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "check": self.label,
            "result": self.result,
            "lhs_bits": "" if self.lhs_bits is None else repr(self.lhs_bits),
            "rhs_bits": "" if self.rhs_bits is None else repr(self.rhs_bits),
            "slack_bits": "" if self.slack_bits is None else repr(self.slack_bits),
        }

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        return cls(**data)


@dataclass(frozen=True)
class Check:
    name: str
    precondition: Callable[[Graph], str | None]
    body: Callable[[Graph, CheckContext], list[Outcome]]
    description: str = ""


REGISTRY: dict[str, Check] = {}


def register(name: str, precondition: Callable[[Graph], str | None], description: str = ""):
    def wrap(body: Callable[[Graph, CheckContext], list[Outcome]]):
        REGISTRY[name] = Check(name, precondition, body, description)
        return body
    return wrap


def check_names() -> list[str]:
    return list(REGISTRY)


# --- preconditions ---

def _always(g: Graph) -> str | None:
    return None


def _oracle_domain(g: Graph) -> str | None:
    return f"n > {ORACLE_LIMIT}" if g.n > ORACLE_LIMIT else None


def _bipartite_domain(g: Graph) -> str | None:
    return None if bipartition(g) is not None else "not bipartite"


def _distribution_domain(g: Graph) -> str | None:
    if g.n > MAX_DISTRIBUTION:
        return f"n > {MAX_DISTRIBUTION}"
    return _bipartite_domain(g)


def _swap_domain(g: Graph) -> str | None:
    return f"n > {SWAP_LIMIT}" if g.n > SWAP_LIMIT else None


def _cover_domain(g: Graph) -> str | None:
    return f"2n > {MAX_COVER_COUNT}" if 2 * g.n > MAX_COVER_COUNT else None


def _j_domain(g: Graph) -> str | None:
    if g.n < 2:
        return "fewer than 2 vertices"
    if not is_connected(g):
        return "not connected"
    if bipartition(g) is None:
        return "not bipartite"
    if isolated_count(g):
        return "has isolated vertices"
    return None


def _regular_bipartite_domain(g: Graph) -> str | None:
    if g.n > MAX_KAHN_AUDIT:
        return f"n > {MAX_KAHN_AUDIT}"
    if not is_regular(g):
        return "not d-regular with d >= 1"
    return None if bipartition(g) is not None else "not bipartite"


def _regular_domain(g: Graph) -> str | None:
    return None if is_regular(g) else "not d-regular with d >= 1"


# --- bodies ---

@register("oracle", _oracle_domain, "pivot recursion, polynomial and reversed pivot rule against brute force")
def _oracle(g: Graph, ctx: CheckContext) -> list[Outcome]:
    count = count_independent_sets(g)
    brute = brute_force_count(g)
    poly = independence_polynomial(g).count
    reversed_pivot = count_independent_sets(g, pivot=highest_max_degree_pivot)
    bits = log2_int(count)
    return [Outcome(
        variant="",
        passed=count == brute == poly == reversed_pivot,
        lhs_bits=bits,
        rhs_bits=log2_int(brute),
        detail={"recursion": str(count), "brute_force": str(brute), "polynomial": str(poly),
                "highest_pivot": str(reversed_pivot)},
    )]


def _bound_outcomes(g: Graph, ctx: CheckContext, kind: str) -> list[Outcome]:
    report = bound_report(g, tolerance=ctx.tolerance)
    outcomes = []
    for entry in report.entries:
        if entry.kind != kind:
            continue
        holds = bound_holds(entry, ctx.tolerance)
        consistent = entry.numeric_equality == entry.structural_equality
        outcomes.append(Outcome(
            variant=entry.name,
            passed=holds and (consistent or not entry.biconditional),
            lhs_bits=entry.log2_value if kind == UPPER else entry.log2_bound,
            rhs_bits=entry.log2_bound if kind == UPPER else entry.log2_value,
            equality=entry.numeric_equality,
            detail={"structural_equality": entry.structural_equality, "biconditional": entry.biconditional},
        ))
    return outcomes


@register("upper-bound", _always, "log2 i(G) against the irregular and regular upper bounds, with equality cases")
def _upper(g: Graph, ctx: CheckContext) -> list[Outcome]:
    return _bound_outcomes(g, ctx, UPPER)


@register("lower-bound", _always, "clique-union lower bounds, with equality cases")
def _lower(g: Graph, ctx: CheckContext) -> list[Outcome]:
    return _bound_outcomes(g, ctx, LOWER)


@register("weighted-upper", _always, "log2 P_G(lambda) against the weighted upper bound")
def _weighted_upper(g: Graph, ctx: CheckContext) -> list[Outcome]:
    poly = independence_polynomial(g)
    outcomes = []
    for lam in ctx.lambdas:
        value = log2_rational(poly.evaluate(lam))
        bound = weighted_upper_bound(g, lam)
        outcomes.append(Outcome(str(lam), value <= bound + ctx.tolerance, value, bound,
                                abs(bound - value) <= ctx.tolerance))
    return outcomes


@register("weighted-lower", _always, "log2 P_G(lambda) against the weighted lower bound")
def _weighted_lower(g: Graph, ctx: CheckContext) -> list[Outcome]:
    poly = independence_polynomial(g)
    outcomes = []
    for lam in ctx.lambdas:
        value = log2_rational(poly.evaluate(lam))
        bound = weighted_lower_bound(g, lam)
        outcomes.append(Outcome(str(lam), bound <= value + ctx.tolerance, bound, value,
                                abs(bound - value) <= ctx.tolerance,
                                {"clique_union": is_clique_union(g)}))
    return outcomes


@register("bigraph-bound", _bipartite_domain, "two-variable partition function against the bigraph bound")
def _bigraph(g: Graph, ctx: CheckContext) -> list[Outcome]:
    bg = bipartition(g)
    poly = bigraph_polynomial(bg)
    structural = is_complete_bipartite_component_union(g)
    outcomes = []
    for lam, mu in ctx.weight_grid:
        value = log2_rational(poly.evaluate2(lam, mu))
        bound = bigraph_upper_bound(bg, lam, mu)
        numeric = abs(bound - value) <= ctx.tolerance
        outcomes.append(Outcome(
            variant=f"{lam}:{mu}",
            passed=value <= bound + ctx.tolerance and numeric == structural,
            lhs_bits=value,
            rhs_bits=bound,
            equality=numeric,
            detail={"structural_equality": structural},
        ))
    return outcomes


@register("swap-bijection", _swap_domain, "forward swap is a bijection onto J(G) with the backward swap as inverse")
def _swap(g: Graph, ctx: CheckContext) -> list[Outcome]:
    result = verify_swap_bijection(g)
    lhs = log2_int(result.j_size) if result.j_size else None
    return [Outcome("", result.passed, lhs, 2 * log2_int(result.independent_sets),
                    result.passed, result.to_dict())]


@register("double-cover", _cover_domain, "i(G)^2 = |J(G)| <= cross-independent pairs = i(G x K2)")
def _double_cover(g: Graph, ctx: CheckContext) -> list[Outcome]:
    result = verify_double_cover_inequality(g, ctx.tolerance)
    lhs = 2 * log2_int(result.count)
    rhs = log2_int(result.cover_count)
    return [Outcome("", result.passed, lhs, rhs, abs(rhs - lhs) <= ctx.tolerance, result.to_dict())]


@register("j-inequality", _j_domain, "j(G - w) + j(G - w - N(w)) <= j(G) at the max-degree pivot")
def _j_inequality(g: Graph, ctx: CheckContext) -> list[Outcome]:
    result = verify_j_inequality(g, ctx.tolerance)
    a, b = result.j_g_minus_w, result.j_g_minus_w_minus_nw
    lhs = max(a, b) + math.log2(1 + 2 ** -abs(a - b))
    passed = result.passed and result.layer_form_agrees and result.recursion_agrees and result.iso_consistent
    return [Outcome("", passed, lhs, result.j_g, abs(result.j_g - lhs) <= ctx.tolerance, result.to_dict())]


@register("kahn-chain", _regular_bipartite_domain, "every step of both entropy chains, in both part orientations")
def _kahn(g: Graph, ctx: CheckContext) -> list[Outcome]:
    d = is_regular(g)
    audit = audit_kahn_chain(bipartition(g), d, ctx.tolerance)
    final = audit.step("final")
    structural = is_complete_bipartite_component_union(g)
    identity = abs(audit.step("chain_rule").lhs - audit.log2_count) <= 1e-12
    numeric = abs(final.slack) <= ctx.tolerance
    return [Outcome(
        variant=f"d={d}",
        passed=audit.passed and identity and numeric == structural,
        lhs_bits=final.lhs,
        rhs_bits=final.rhs,
        equality=numeric,
        detail=audit.to_dict(),
    )]


@register("shearer", _distribution_domain, "Shearer's inequality for X = I n O covered by the neighborhoods of the other part")
def _shearer(g: Graph, ctx: CheckContext) -> list[Outcome]:
    bg = bipartition(g)
    outcomes = []
    for label, oriented in (("A|B", bg), ("B|A", bg.swapped())):
        instance = shearer_instance(oriented)
        if instance is None:
            continue
        dist, ground, cover, m = instance
        result = verify_shearer(dist, ground, cover, m, ctx.tolerance)
        outcomes.append(Outcome(label, result.passed, result.lhs, result.rhs,
                                abs(result.rhs - result.lhs) <= ctx.tolerance, result.to_dict()))
    return outcomes


def maximizer_outcome(d: int, tolerance: float) -> Outcome:
    """
    The objective H(x) + x*log2(2^d/(2^d-1)) peaks at x0 with the closed-form
    value, and a grid of step 1/1000 never exceeds it.
    """
    x0 = kahn_maximizer(d)
    peak = kahn_objective_maximum(d)
    at_x0 = kahn_objective(x0, d)
    grid = [(kahn_objective(Fraction(k, MAXIMIZER_GRID), d), k) for k in range(MAXIMIZER_GRID + 1)]
    best, best_k = max(grid)
    passed = (abs(at_x0 - peak) <= tolerance
              and best <= peak + tolerance
              and abs(Fraction(best_k, MAXIMIZER_GRID) - x0) <= Fraction(1, MAXIMIZER_GRID))
    return Outcome(f"d={d}", passed, at_x0, peak, passed,
                   {"x0": str(x0), "grid_max": best, "grid_argmax": best_k / MAXIMIZER_GRID})


@register("maximizer", _regular_domain, "closed-form peak of the entropy objective for the graph's degree")
def _maximizer(g: Graph, ctx: CheckContext) -> list[Outcome]:
    return [maximizer_outcome(is_regular(g), ctx.tolerance)]


# --- running ---

def _result(entry_id: str, graph6: str, g: Graph | None, check: str, outcome: Outcome | None,
            status: str, detail: dict | None = None) -> CheckResult:
    n = g.n if g is not None else 0
    m = g.m if g is not None else 0
    if outcome is None:
        return CheckResult(entry_id, graph6, n, m, check, "", status, detail=detail or {})
    slack = None
    if outcome.lhs_bits is not None and outcome.rhs_bits is not None:
        slack = outcome.rhs_bits - outcome.lhs_bits
    return CheckResult(entry_id, graph6, n, m, check, outcome.variant, status,
                       outcome.lhs_bits, outcome.rhs_bits, slack, outcome.equality, outcome.detail)


def run_check(entry: CorpusEntry, name: str, ctx: CheckContext) -> list[CheckResult]:
    if name not in REGISTRY:
        raise DomainError(f"Unknown check {name!r}; choose one of {', '.join(REGISTRY)}")
    check = REGISTRY[name]
    g = entry.graph
    graph6 = emit_graph6(g)

    reason = check.precondition(g)
    if reason is not None:
        return [_result(entry.graph_id, graph6, g, name, None, SKIPPED, {"reason": reason})]

    try:
        outcomes = check.body(g, ctx)
    except Exception as exc:
        checks_logger.opt(exception=True).error(f"Check {name} raised on {entry.graph_id}: {exc}")
        return [_result(entry.graph_id, graph6, g, name, None, FAILED, {"error": f"{type(exc).__name__}: {exc}"})]

    if not outcomes:
        return [_result(entry.graph_id, graph6, g, name, None, SKIPPED, {"reason": "no applicable variant"})]

    results = []
    for outcome in outcomes:
        status = PASSED if outcome.passed else FAILED
        if status == FAILED:
            checks_logger.error(f"Check {name}[{outcome.variant}] failed on {entry.graph_id} ({graph6})")
        results.append(_result(entry.graph_id, graph6, g, name, outcome, status))
    return results


def run_checks_for_entry(entry: CorpusEntry, ctx: CheckContext, names: list[str] | None = None) -> list[CheckResult]:
    results = []
    for name in names or check_names():
        results += run_check(entry, name, ctx)
    return results


def maximizer_results(ctx: CheckContext) -> list[CheckResult]:
    """Graph-independent rows for d = 1..6, ids "maximizer-d{d}"."""
    results = []
    for d in MAXIMIZER_DEGREES:
        outcome = maximizer_outcome(d, ctx.tolerance)
        results.append(_result(f"maximizer-d{d}", "", None, "maximizer", outcome,
                               PASSED if outcome.passed else FAILED))
    return results
