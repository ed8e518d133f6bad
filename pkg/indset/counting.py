"""
Exact independent-set counting.

The recursive engine splits a vertex set into components and multiplies,
otherwise pivots on a maximum-degree vertex w:

    value(S) = value(S - w) + x_w * value(S - w - N(w))

where x_w is 1 for i(G), lambda for P_G(lambda), and lambda or mu for the
bigraph polynomial depending on the part of w. Results are memoized on the
surviving vertex mask for the duration of one query.
"""

from dataclasses import dataclass
from typing import Callable, Generic, Iterator, TypeVar

from indset.bitset import bit, iter_bits
from indset.errors import DomainError
from indset.graph import Bigraph, Graph, components, max_degree_vertex
from indset.polynomial import (
    BigraphPolynomial,
    IndependencePolynomial,
    grid_add,
    grid_mul,
    grid_shift,
    poly_add,
    poly_mul,
    poly_shift,
)
from limits import MAX_BRUTE_FORCE, MAX_ENUMERATION, check_capacity
from logging_utils import get_module_logger

count_logger = get_module_logger("counting")

T = TypeVar("T")
PivotRule = Callable[[Graph, int], int]


def lowest_max_degree_pivot(g: Graph, within: int) -> int:
    return max_degree_vertex(g, within)


def highest_max_degree_pivot(g: Graph, within: int) -> int:
    return max_degree_vertex(g, within, prefer_highest=True)


@dataclass(frozen=True)
class _Algebra(Generic[T]):
    one: T
    add: Callable[[T, T], T]
    mul: Callable[[T, T], T]
    shift: Callable[[int, T], T]


class _PivotEngine(Generic[T]):
    """Component split + closed-neighborhood recursion over one graph."""

    def __init__(self, g: Graph, algebra: _Algebra[T], pivot: PivotRule | None = None):
        self.g = g
        self.algebra = algebra
        self.pivot = pivot or lowest_max_degree_pivot
        self.memo: dict[int, T] = {}

    def run(self) -> T:
        value = self.value(self.g.vertex_mask)
        count_logger.debug(f"Pivot recursion on {self.g} finished with {len(self.memo)} memo entries")
        return value

    def value(self, mask: int) -> T:
        if mask == 0:
            return self.algebra.one
        cached = self.memo.get(mask)
        if cached is not None:
            return cached

        parts = components(self.g, mask)
        if len(parts) > 1:
            value = self.algebra.one
            for part in parts:
                value = self.algebra.mul(value, self.value(part))
        else:
            w = self.pivot(self.g, mask)
            without = self.value(mask & ~bit(w))
            with_w = self.value(mask & ~(bit(w) | self.g.adj[w]))
            value = self.algebra.add(without, self.algebra.shift(w, with_w))

        self.memo[mask] = value
        return value


_COUNT = _Algebra[int](
    one=1,
    add=lambda x, y: x + y,
    mul=lambda x, y: x * y,
    shift=lambda w, x: x,
)

_POLY = _Algebra[tuple[int, ...]](
    one=(1,),
    add=poly_add,
    mul=poly_mul,
    shift=lambda w, p: poly_shift(p),
)


def count_independent_sets(g: Graph, pivot: PivotRule | None = None) -> int:
    """Exact i(G) by the pivot recursion; the empty graph has exactly one independent set."""
    return _PivotEngine(g, _COUNT, pivot).run()


def independence_polynomial(g: Graph, pivot: PivotRule | None = None) -> IndependencePolynomial:
    return IndependencePolynomial(_PivotEngine(g, _POLY, pivot).run())


def bigraph_polynomial(bg: Bigraph, method: str = "recursion") -> BigraphPolynomial:
    """
    Two-variable polynomial of a bigraph.

    method is "recursion" (pivot recursion tracking the pivot's part) or
    "enumeration" (walk every independent set; n <= 30).
    """
    rows, cols = bg.size_a + 1, bg.size_b + 1
    match method:
        case "recursion":
            algebra = _Algebra[tuple[tuple[int, ...], ...]](
                one=((1,),),
                add=grid_add,
                mul=grid_mul,
                shift=lambda w, p: grid_shift(p, bool(bg.part_a >> w & 1)),
            )
            grid = _PivotEngine(bg.graph, algebra).run()
            padded = [[grid[a][b] if a < len(grid) and b < len(grid[0]) else 0 for b in range(cols)] for a in range(rows)]
        case "enumeration":
            check_capacity("bigraph enumeration", bg.graph.n, MAX_ENUMERATION)
            padded = [[0] * cols for _ in range(rows)]
            for mask in iter_independent_masks(bg.graph):
                padded[(mask & bg.part_a).bit_count()][(mask & bg.part_b).bit_count()] += 1
        case _:
            raise DomainError(f"Unknown bigraph polynomial method {method!r}")
    return BigraphPolynomial(tuple(tuple(row) for row in padded))


def brute_force_count(g: Graph) -> int:
    """Oracle: test all 2^n vertex subsets for independence."""
    check_capacity("brute-force count", g.n, MAX_BRUTE_FORCE)
    adj = g.adj
    total = 0
    for mask in range(1 << g.n):
        rest = mask
        while rest:
            low = rest & -rest
            if adj[low.bit_length() - 1] & mask:
                break
            rest ^= low
        else:
            total += 1
    return total


def iter_independent_masks(g: Graph) -> Iterator[int]:
    """
    Every independent set as a mask, in increasing numeric order.

    Vertices are decided from the highest index down, exclusion before
    inclusion, which is exactly increasing mask order.
    """
    check_capacity("independent set enumeration", g.n, MAX_ENUMERATION)
    adj = g.adj

    def walk(v: int, chosen: int, blocked: int) -> Iterator[int]:
        if v < 0:
            yield chosen
            return
        yield from walk(v - 1, chosen, blocked)
        if not blocked >> v & 1:
            yield from walk(v - 1, chosen | bit(v), blocked | adj[v])

    return walk(g.n - 1, 0, 0)


def enumerate_independent_sets(g: Graph) -> Iterator[frozenset[int]]:
    for mask in iter_independent_masks(g):
        yield frozenset(iter_bits(mask))


def count_in_mask(g: Graph, within: int) -> int:
    """i(G[within]) without relabeling."""
    engine = _PivotEngine(g, _COUNT)
    return engine.value(within)

