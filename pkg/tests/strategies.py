# Hypothesis strategies shared by the property tests
from fractions import Fraction

from hypothesis import strategies as st

from indset.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7):
    """Random labeled simple graphs on min_n..max_n vertices."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (p for p, keep in zip(pairs, chosen) if keep))


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def joints(draw, max_x: int = 3, max_y: int = 3):
    """Exact joint distributions {(x, y): p} on small grids."""
    xs = draw(st.integers(min_value=1, max_value=max_x))
    ys = draw(st.integers(min_value=1, max_value=max_y))
    weights = draw(st.lists(st.integers(min_value=0, max_value=6), min_size=xs * ys, max_size=xs * ys).filter(any))
    total = sum(weights)
    cells = [(x, y) for x in range(xs) for y in range(ys)]
    return {cell: Fraction(w, total) for cell, w in zip(cells, weights)}
