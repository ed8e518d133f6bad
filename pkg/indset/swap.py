"""
Bipartite swapping: an explicit bijection between pairs of independent
sets (A, B) and pairs (A', B') with no edge from A' to B' whose union
induces a bipartite graph.

Both directions split W = A u B (resp. A' u B') with the canonical
2-coloring of G[W] (each component's minimum vertex goes to W1) and
exchange the halves that lie in W2.
"""

from dataclasses import dataclass
from typing import Iterator

from indset.bitset import iter_bits, iter_submasks, to_list
from indset.counting import count_independent_sets, iter_independent_masks
from indset.errors import DomainError
from indset.graph import Graph, double_cover, is_regular, two_coloring
from limits import MAX_COVER_COUNT, MAX_ENUMERATION, MAX_J_ENUMERATION, check_capacity
from logging_utils import get_module_logger

swap_logger = get_module_logger("swap")


@dataclass(frozen=True, slots=True)
class IndependentPair:
    a: int
    b: int

    @classmethod
    def of(cls, g: Graph, a: int, b: int) -> "IndependentPair":
        if not g.is_independent(a):
            raise DomainError(f"{to_list(a)} is not an independent set")
        if not g.is_independent(b):
            raise DomainError(f"{to_list(b)} is not an independent set")
        return cls(a, b)

    def to_dict(self) -> dict:
        return {"A": to_list(self.a), "B": to_list(self.b)}


@dataclass(frozen=True, slots=True)
class SwapPair:
    a: int
    b: int

    @classmethod
    def of(cls, g: Graph, a: int, b: int) -> "SwapPair":
        if cross_edges(g, a, b):
            raise DomainError(f"An edge joins {to_list(a)} to {to_list(b)}")
        if two_coloring(g, a | b) is None:
            raise DomainError(f"The union {to_list(a | b)} does not induce a bipartite graph")
        return cls(a, b)

    def to_dict(self) -> dict:
        return {"A'": to_list(self.a), "B'": to_list(self.b)}


def cross_edges(g: Graph, a: int, b: int) -> bool:
    """True if some edge of G joins a vertex of a to a vertex of b."""
    for v in iter_bits(a):
        if g.adj[v] & b:
            return True
    return False


class BipartiteSwap:
    """Forward/backward maps over one graph, caching the split of each union W."""

    def __init__(self, g: Graph):
        self.g = g
        self._splits: dict[int, tuple[int, int] | None] = {}

    def split(self, w: int) -> tuple[int, int] | None:
        if w not in self._splits:
            self._splits[w] = two_coloring(self.g, w)
        return self._splits[w]

    def forward(self, a: int, b: int) -> tuple[int, int]:
        """(A, B) -> (S1 u S4, S2 u S3) with S1 = A n W1, S2 = A n W2, S3 = B n W1, S4 = B n W2."""
        w1, w2 = self.split(a | b)
        return (a & w1) | (b & w2), (a & w2) | (b & w1)

    def backward(self, a: int, b: int) -> tuple[int, int]:
        """(A', B') -> (S1 u S2, S3 u S4) with S1 = A' n W1, S4 = A' n W2, S3 = B' n W1, S2 = B' n W2."""
        sides = self.split(a | b)
        if sides is None:
            raise DomainError(f"The union {to_list(a | b)} does not induce a bipartite graph")
        w1, w2 = sides
        return (a & w1) | (b & w2), (b & w1) | (a & w2)


def swap_forward(g: Graph, pair: IndependentPair) -> SwapPair:
    IndependentPair.of(g, pair.a, pair.b)
    a, b = BipartiteSwap(g).forward(pair.a, pair.b)
    return SwapPair(a, b)


def swap_backward(g: Graph, pair: SwapPair) -> IndependentPair:
    SwapPair.of(g, pair.a, pair.b)
    a, b = BipartiteSwap(g).backward(pair.a, pair.b)
    return IndependentPair(a, b)


def _bipartite_masks(g: Graph) -> bytearray:
    """flags[mask] = 1 iff G[mask] is bipartite, filled by extending from the lowest bit."""
    n = g.n
    flags = bytearray(1 << n)
    flags[0] = 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        if flags[mask ^ low]:
            flags[mask] = two_coloring(g, mask) is not None
    return flags


def iter_j_masks(g: Graph) -> Iterator[tuple[int, int]]:
    """
    All pairs (A', B') with no edge from A' to B' and G[A' u B'] bipartite,
    A' in increasing order and B' in increasing order within each A'.

    With no cross edges, G[A' u B'] is the disjoint union of G[A'] and
    G[B' - A'], so bipartiteness is checked per side.
    """
    check_capacity("J(G) enumeration", g.n, MAX_J_ENUMERATION)
    flags = _bipartite_masks(g)
    for a in range(1 << g.n):
        if not flags[a]:
            continue
        reach = 0
        for v in iter_bits(a):
            reach |= g.adj[v]
        allowed = g.vertex_mask & ~reach
        for b in iter_submasks(allowed):
            if flags[b]:
                yield a, b


def enumerate_J(g: Graph) -> Iterator[SwapPair]:
    for a, b in iter_j_masks(g):
        yield SwapPair(a, b)


def count_J(g: Graph) -> int:
    check_capacity("J(G) enumeration", g.n, MAX_J_ENUMERATION)
    flags = _bipartite_masks(g)
    total = 0
    for a in range(1 << g.n):
        if not flags[a]:
            continue
        reach = 0
        for v in iter_bits(a):
            reach |= g.adj[v]
        total += sum(flags[b] for b in iter_submasks(g.vertex_mask & ~reach))
    return total


def count_cross_independent_pairs(g: Graph) -> int:
    """|{(A, B) : no edge joins A to B}| = sum over A of 2^(n - |N(A)|)."""
    total = 0
    for a in range(1 << g.n):
        reach = 0
        for v in iter_bits(a):
            reach |= g.adj[v]
        total += 1 << (g.n - reach.bit_count())
    return total


@dataclass
class SwapBijectionResult:
    independent_sets: int
    pairs: int
    j_size: int
    injective: bool
    image_is_j: bool
    forward_round_trip: bool
    backward_round_trip: bool
    union_preserved: bool
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return (self.injective and self.image_is_j and self.forward_round_trip
                and self.backward_round_trip and self.union_preserved
                and self.j_size == self.independent_sets ** 2)

    def to_dict(self) -> dict:
        return {
            "independent_sets": self.independent_sets,
            "pairs": self.pairs,
            "j_size": self.j_size,
            "injective": self.injective,
            "image_is_j": self.image_is_j,
            "forward_round_trip": self.forward_round_trip,
            "backward_round_trip": self.backward_round_trip,
            "union_preserved": self.union_preserved,
            "passed": self.passed,
            "witness": self.witness,
        }


def verify_swap_bijection(g: Graph) -> SwapBijectionResult:
    """Exhaustive check that the forward map is a bijection I(G)^2 -> J(G) with the backward map as inverse."""
    check_capacity("swap bijection", g.n, MAX_J_ENUMERATION)
    swapper = BipartiteSwap(g)
    independent = sum(1 for _ in iter_independent_masks(g))
    j_set = set(iter_j_masks(g))

    image: set[tuple[int, int]] = set()
    injective = forward_trip = union_ok = True
    witness = None
    for pair in pairs_of_sets(g):
        a, b = pair.a, pair.b
        fa, fb = swapper.forward(a, b)
        if (fa, fb) in image:
            injective = False
            witness = witness or {"reason": "collision", "A": to_list(a), "B": to_list(b)}
        image.add((fa, fb))
        if fa | fb != a | b:
            union_ok = False
            witness = witness or {"reason": "union changed", "A": to_list(a), "B": to_list(b)}
        if swapper.backward(fa, fb) != (a, b):
            forward_trip = False
            witness = witness or {"reason": "backward(forward(p)) != p", "A": to_list(a), "B": to_list(b)}

    backward_trip = True
    for a, b in j_set:
        ba, bb = swapper.backward(a, b)
        if swapper.forward(ba, bb) != (a, b):
            backward_trip = False
            witness = witness or {"reason": "forward(backward(q)) != q", "A'": to_list(a), "B'": to_list(b)}
            break

    image_is_j = image == j_set
    if not image_is_j and witness is None:
        extra = sorted(image - j_set) or sorted(j_set - image)
        a, b = extra[0]
        witness = {"reason": "image differs from J(G)", "A'": to_list(a), "B'": to_list(b)}

    result = SwapBijectionResult(
        independent_sets=independent,
        pairs=independent ** 2,
        j_size=len(j_set),
        injective=injective,
        image_is_j=image_is_j,
        forward_round_trip=forward_trip,
        backward_round_trip=backward_trip,
        union_preserved=union_ok,
        witness=witness,
    )
    if not result.passed:
        swap_logger.error(f"Swap bijection failed on {g}: {witness}")
    return result


@dataclass
class DoubleCoverResult:
    count: int
    cover_count: int
    cross_independent_pairs: int
    j_size: int | None
    regular_degree: int | None
    half_log2_cover: float
    regular_bound: float | None
    passed: bool

    def to_dict(self) -> dict:
        return {
            "count": str(self.count),
            "count_squared": str(self.count ** 2),
            "cover_count": str(self.cover_count),
            "cross_independent_pairs": str(self.cross_independent_pairs),
            "j_size": None if self.j_size is None else str(self.j_size),
            "regular_degree": self.regular_degree,
            "half_log2_cover": self.half_log2_cover,
            "regular_bound": self.regular_bound,
            "passed": self.passed,
        }


def verify_double_cover_inequality(g: Graph, tolerance: float = 1e-9) -> DoubleCoverResult:
    """
    i(G)^2 = |J(G)| <= |cross-independent pairs| = i(G x K2), and for
    d-regular G also i(G x K2)^(1/2) <= i(K_{d,d})^(n/2d).

    |J(G)| is enumerated only for n <= 14; above that the chain skips it.
    """
    from indset.bounds import log2_int, regular_upper_bound

    check_capacity("double cover count", 2 * g.n, MAX_COVER_COUNT)
    count = count_independent_sets(g)
    cover_count = count_independent_sets(double_cover(g).graph)
    cross = count_cross_independent_pairs(g)
    j_size = count_J(g) if g.n <= MAX_J_ENUMERATION else None

    passed = count ** 2 <= cross == cover_count
    if j_size is not None:
        passed = passed and j_size == count ** 2

    d = is_regular(g)
    half_log2_cover = log2_int(cover_count) / 2
    regular_bound = None
    if d and g.n:
        regular_bound = regular_upper_bound(g.n, d)
        passed = passed and half_log2_cover <= regular_bound + tolerance

    result = DoubleCoverResult(
        count=count,
        cover_count=cover_count,
        cross_independent_pairs=cross,
        j_size=j_size,
        regular_degree=d if d else None,
        half_log2_cover=half_log2_cover,
        regular_bound=regular_bound,
        passed=passed,
    )
    swap_logger.debug(f"Double cover chain on {g}: {count}^2 <= {cover_count} -> {passed}")
    return result


def pairs_of_sets(g: Graph) -> Iterator[IndependentPair]:
    check_capacity("independent pair enumeration", g.n, MAX_ENUMERATION)
    isets = list(iter_independent_masks(g))
    for a in isets:
        for b in isets:
            yield IndependentPair(a, b)
