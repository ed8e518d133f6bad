"""
Graph substrate: immutable simple graphs on at most 64 vertices with
bitmask adjacency, constructors, products, deletions, bipartitions,
BFS layers and the structural predicates used by the equality cases.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from indset.bitset import bit, full_mask, iter_bits, lowest, to_list
from indset.errors import DomainError, InvalidVertexError
from limits import MAX_VERTICES, check_capacity


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Undirected simple graph on vertices 0..n-1.

    adj[v] is the neighbor mask of v. Construction validates symmetry,
    irreflexivity and the vertex range; instances are never mutated.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"Vertex count must be nonnegative, got {self.n}")
        check_capacity("graph", self.n, MAX_VERTICES)
        if len(self.adj) != self.n:
            raise DomainError(f"Expected {self.n} neighbor sets, got {len(self.adj)}")
        universe = full_mask(self.n)
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~universe:
                raise DomainError(f"Vertex {v} has neighbors outside 0..{self.n - 1}")
            if nbrs >> v & 1:
                raise DomainError(f"Vertex {v} is adjacent to itself")
            for u in iter_bits(nbrs):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"Adjacency is not symmetric between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        check_capacity("graph", n, MAX_VERTICES)
        adj = [0] * n
        for u, v in edges:
            if not 0 <= u < n:
                raise InvalidVertexError(u, n)
            if not 0 <= v < n:
                raise InvalidVertexError(v, n)
            if u == v:
                raise DomainError(f"Self-loop at vertex {u}")
            adj[u] |= bit(v)
            adj[v] |= bit(u)
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    @property
    def m(self) -> int:
        return sum(nbrs.bit_count() for nbrs in self.adj) // 2

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(v, self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(nbrs.bit_count() for nbrs in self.adj)

    def neighbors(self, v: int) -> list[int]:
        return to_list(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, sorted."""
        for u, nbrs in enumerate(self.adj):
            for v in iter_bits(nbrs >> (u + 1) << (u + 1)):
                yield u, v

    def is_independent(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def induced(self, keep: int) -> "Relabeled":
        """Induced subgraph on `keep`, relabeled in increasing order of original id."""
        kept = to_list(keep)
        mapping = {old: new for new, old in enumerate(kept)}
        adj = []
        for old in kept:
            nbrs = 0
            for u in iter_bits(self.adj[old] & keep):
                nbrs |= bit(mapping[u])
            adj.append(nbrs)
        return Relabeled(Graph(len(kept), tuple(adj)), mapping)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Relabeled(NamedTuple):
    graph: Graph
    mapping: dict[int, int]  # original id -> new id


@dataclass(frozen=True, slots=True)
class Bigraph:
    """A graph with a fixed bipartition: every edge joins part_a to part_b."""

    graph: Graph
    part_a: int
    part_b: int

    def __post_init__(self):
        if self.part_a & self.part_b:
            raise DomainError("Parts of a bigraph must be disjoint")
        if self.part_a | self.part_b != self.graph.vertex_mask:
            raise DomainError("Parts of a bigraph must cover every vertex")
        for v in iter_bits(self.part_a):
            if self.graph.adj[v] & self.part_a:
                raise DomainError(f"Edge inside part A at vertex {v}")
        for v in iter_bits(self.part_b):
            if self.graph.adj[v] & self.part_b:
                raise DomainError(f"Edge inside part B at vertex {v}")

    @property
    def size_a(self) -> int:
        return self.part_a.bit_count()

    @property
    def size_b(self) -> int:
        return self.part_b.bit_count()

    def swapped(self) -> "Bigraph":
        return Bigraph(self.graph, self.part_b, self.part_a)


@dataclass(frozen=True)
class LayerDecomposition:
    """
    BFS layers around a pivot w of a connected graph.

    Indices are aligned with distance: layers[k] is V_k, edge_layers[k] is
    E_k (edges between V_{k-1} and V_k, empty for k = 0), isolated_layers[k]
    is I_k (vertices of V_k with no neighbor in V_{k+1}).
    """

    pivot: int
    delta: int
    layers: tuple[tuple[int, ...], ...]
    edge_layers: tuple[tuple[tuple[int, int], ...], ...]
    isolated_layers: tuple[tuple[int, ...], ...]
    forward_degree: dict[int, int] = field(default_factory=dict)
    intra_layer_edges: tuple[tuple[int, int], ...] = ()

    def layer_of(self, v: int) -> int:
        for k, layer in enumerate(self.layers):
            if v in layer:
                return k
        raise InvalidVertexError(v, sum(len(layer) for layer in self.layers))

    def to_dict(self) -> dict:
        return {
            "pivot": self.pivot,
            "delta": self.delta,
            "layers": [list(layer) for layer in self.layers],
            "edge_layers": [[list(e) for e in layer] for layer in self.edge_layers],
            "isolated_layers": [list(layer) for layer in self.isolated_layers],
            "forward_degree": {str(v): d for v, d in sorted(self.forward_degree.items())},
            "intra_layer_edges": [list(e) for e in self.intra_layer_edges],
        }


# --- Constructors ---

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def clique(k: int) -> Graph:
    """K_k with all k(k-1)/2 edges."""
    if k < 1:
        raise DomainError(f"Clique size must be positive, got {k}")
    check_capacity("clique", k, MAX_VERTICES)
    universe = full_mask(k)
    return Graph(k, tuple(universe & ~bit(v) for v in range(k)))


def complete_bipartite(a: int, b: int) -> Bigraph:
    """K_{a,b}: part A is 0..a-1, part B is a..a+b-1."""
    if a < 1 or b < 1:
        raise DomainError(f"Complete bipartite parts must be positive, got ({a}, {b})")
    check_capacity("complete bipartite graph", a + b, MAX_VERTICES)
    part_a = full_mask(a)
    part_b = full_mask(a + b) & ~part_a
    adj = tuple(part_b if v < a else part_a for v in range(a + b))
    return Bigraph(Graph(a + b, adj), part_a, part_b)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return complete_bipartite(1, k).graph


def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def heawood() -> Graph:
    """The 3-regular bipartite Heawood graph on 14 vertices."""
    edges = [(v, (v + 1) % 14) for v in range(14)]
    edges += [(v, (v + 5) % 14) for v in range(0, 14, 2)]
    return Graph.from_edges(14, edges)


def hypercube(dim: int) -> Graph:
    n = 1 << dim
    check_capacity("hypercube", n, MAX_VERTICES)
    return Graph.from_edges(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(dim) if v < v ^ (1 << i)))


def crown(k: int) -> Graph:
    """K_{k,k} minus a perfect matching; (k-1)-regular and bipartite."""
    edges = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    return Graph.from_edges(2 * k, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertices of g2 are shifted by g1.n; no edges cross."""
    check_capacity("disjoint union", g1.n + g2.n, MAX_VERTICES)
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(nbrs << shift for nbrs in g2.adj))


def double_cover(g: Graph) -> Bigraph:
    """
    Bipartite double cover G x K2.

    (v, 0) is vertex v and (v, 1) is vertex n + v; (u, 0) ~ (v, 1) iff uv is
    an edge of G. Part A holds the (., 0) copies.
    """
    n = g.n
    check_capacity("double cover", 2 * n, MAX_VERTICES)
    low = tuple(nbrs << n for nbrs in g.adj)
    high = g.adj
    part_a = full_mask(n)
    return Bigraph(Graph(2 * n, low + high), part_a, part_a << n)


def delete_vertex(g: Graph, w: int) -> Relabeled:
    """G - w with surviving vertices relabeled in order."""
    g.check_vertex(w)
    return g.induced(g.vertex_mask & ~bit(w))


def delete_closed_neighborhood(g: Graph, w: int) -> Relabeled:
    """G - w - N(w) with surviving vertices relabeled in order."""
    g.check_vertex(w)
    return g.induced(g.vertex_mask & ~(bit(w) | g.adj[w]))


# --- Components and bipartitions ---

def component_of(g: Graph, v: int, within: int) -> int:
    """Mask of the component of v in G[within]."""
    seen = bit(v)
    frontier = seen
    while frontier:
        reach = 0
        for u in iter_bits(frontier):
            reach |= g.adj[u]
        frontier = reach & within & ~seen
        seen |= frontier
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Component masks of G[within], ordered by their minimum vertex."""
    remaining = g.vertex_mask if within is None else within
    result = []
    while remaining:
        comp = component_of(g, lowest(remaining), remaining)
        result.append(comp)
        remaining &= ~comp
    return result


def two_coloring(g: Graph, within: int | None = None) -> tuple[int, int] | None:
    """
    Canonical 2-coloring of G[within]: in each component the minimum vertex
    gets side 0. Returns (side0, side1) masks, or None on an odd cycle.
    """
    remaining = g.vertex_mask if within is None else within
    side0 = side1 = 0
    while remaining:
        root = lowest(remaining)
        color0, color1 = bit(root), 0
        frontier, depth = bit(root), 0
        seen = bit(root)
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= g.adj[u]
            reach &= remaining
            own = color0 if depth % 2 == 0 else color1
            if reach & own:
                return None
            frontier = reach & ~seen
            seen |= frontier
            depth += 1
            if depth % 2:
                color1 |= frontier
            else:
                color0 |= frontier
        side0 |= color0
        side1 |= color1
        remaining &= ~seen
    return side0, side1


def bipartition(g: Graph) -> Bigraph | None:
    """Canonical bipartition (component minimum in part A), or None if G has an odd cycle."""
    sides = two_coloring(g)
    if sides is None:
        return None
    return Bigraph(g, *sides)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


# --- Structural predicates ---

def is_connected(g: Graph) -> bool:
    return g.n == 0 or component_of(g, 0, g.vertex_mask) == g.vertex_mask


def is_regular(g: Graph) -> int | None:
    """The common degree d if G is d-regular, else None. The empty graph counts as 0-regular."""
    degrees = set(g.degrees())
    if len(degrees) > 1:
        return None
    return degrees.pop() if degrees else 0


def isolated_count(g: Graph) -> int:
    return sum(1 for nbrs in g.adj if nbrs == 0)


def is_complete_bipartite_component_union(g: Graph) -> bool:
    """Every component with at least 2 vertices is complete bipartite."""
    for comp in components(g):
        if comp.bit_count() < 2:
            continue
        sides = two_coloring(g, comp)
        if sides is None:
            return False
        side0, side1 = sides
        if any(g.adj[v] != side1 for v in iter_bits(side0)):
            return False
        if any(g.adj[v] != side0 for v in iter_bits(side1)):
            return False
    return True


def is_clique_union(g: Graph) -> bool:
    """Every component is a clique (an isolated vertex is K_1)."""
    for comp in components(g):
        if any(g.adj[v] | bit(v) != comp for v in iter_bits(comp)):
            return False
    return True


def max_degree_vertex(g: Graph, within: int | None = None, prefer_highest: bool = False) -> int:
    """Vertex of maximum degree in G[within]; ties go to the lowest index unless prefer_highest."""
    within = g.vertex_mask if within is None else within
    if not within:
        raise DomainError("No vertex to pick from an empty vertex set")
    best, best_degree = -1, -1
    for v in iter_bits(within):
        degree = (g.adj[v] & within).bit_count()
        if degree > best_degree or (prefer_highest and degree == best_degree):
            best, best_degree = v, degree
    return best


def layer_decomposition(g: Graph, w: int) -> LayerDecomposition:
    """Distance layers V_k, edge layers E_k, sets I_k and forward degrees around w."""
    g.check_vertex(w)
    if not is_connected(g):
        raise DomainError("Layer decomposition needs a connected graph")

    layer_masks = [bit(w)]
    seen = bit(w)
    while True:
        reach = 0
        for u in iter_bits(layer_masks[-1]):
            reach |= g.adj[u]
        nxt = reach & ~seen
        if not nxt:
            break
        layer_masks.append(nxt)
        seen |= nxt

    edge_layers: list[tuple[tuple[int, int], ...]] = [()]
    for k in range(1, len(layer_masks)):
        edge_layers.append(tuple(
            (u, v)
            for u in iter_bits(layer_masks[k - 1])
            for v in iter_bits(g.adj[u] & layer_masks[k])
        ))

    forward_degree: dict[int, int] = {}
    isolated_layers = []
    for k, layer in enumerate(layer_masks):
        nxt = layer_masks[k + 1] if k + 1 < len(layer_masks) else 0
        for v in iter_bits(layer):
            forward_degree[v] = (g.adj[v] & nxt).bit_count()
        isolated_layers.append(tuple(v for v in iter_bits(layer) if forward_degree[v] == 0))

    intra = tuple(
        (u, v)
        for layer in layer_masks
        for u in iter_bits(layer)
        for v in iter_bits(g.adj[u] & layer)
        if u < v
    )

    return LayerDecomposition(
        pivot=w,
        delta=g.degree(w),
        layers=tuple(tuple(iter_bits(layer)) for layer in layer_masks),
        edge_layers=tuple(edge_layers),
        isolated_layers=tuple(isolated_layers),
        forward_degree=forward_degree,
        intra_layer_edges=intra,
    )
