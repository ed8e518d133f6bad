"""
Corpus tiers for the verification sweep.

Every entry carries a stable id and a provenance tag:
  exhaustive-n    every labeled graph on n vertices, id "ex{n}-{bits}"
  named           fixed fixtures, ids such as "petersen" or "k3,3+k3,3"
  regular-(n,d)   regular fixtures for the entropy and double-cover checks
  file            graphs read from user files, id "{stem}-{line}"
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from indset.edgelist import parse_edge_list
from indset.errors import DomainError, ParseError
from indset.graph import (
    Graph,
    clique,
    complete_bipartite,
    crown,
    cycle_graph,
    disjoint_union,
    empty_graph,
    heawood,
    hypercube,
    is_regular,
    path_graph,
    petersen,
    star,
)
from indset.graph6 import emit_graph6, parse_graph6
from limits import MAX_EXHAUSTIVE_N, check_capacity
from logging_utils import get_module_logger

corpus_logger = get_module_logger("corpus")

EXHAUSTIVE = "exhaustive"
NAMED = "named"
FILE = "file"


@dataclass(frozen=True)
class CorpusEntry:
    graph_id: str
    graph: Graph
    tag: str

    def to_payload(self) -> dict:
        """Wire form for worker processes and Celery tasks."""
        return {"graph_id": self.graph_id, "graph6": emit_graph6(self.graph), "tag": self.tag}

    @classmethod
    def from_payload(cls, payload: dict) -> "CorpusEntry":
        return cls(payload["graph_id"], parse_graph6(payload["graph6"]), payload["tag"])


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_bits(n: int, bits: int) -> Graph:
    """Bit k of `bits` selects the k-th pair of pair_order(n) as an edge."""
    return Graph.from_edges(n, (pair for k, pair in enumerate(pair_order(n)) if bits >> k & 1))


def iter_exhaustive(n: int) -> Iterator[CorpusEntry]:
    if n < 1:
        raise DomainError(f"Exhaustive tiers start at n = 1, got {n}")
    check_capacity("exhaustive tier", n, MAX_EXHAUSTIVE_N)
    tag = f"{EXHAUSTIVE}-{n}"
    for bits in range(1 << (n * (n - 1) // 2)):
        yield CorpusEntry(f"ex{n}-{bits}", graph_from_bits(n, bits), tag)


def generate_exhaustive(n: int) -> list[CorpusEntry]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices in numeric edge-bitmask order."""
    entries = list(iter_exhaustive(n))
    corpus_logger.debug(f"Exhaustive tier n={n}: {len(entries)} graphs")
    return entries


def _kdd(a: int, b: int) -> Graph:
    return complete_bipartite(a, b).graph


def _named_builders() -> dict[str, Callable[[], Graph]]:
    builders: dict[str, Callable[[], Graph]] = {}
    for d in range(1, 6):
        builders[f"k{d},{d}"] = lambda d=d: _kdd(d, d)
    for k in range(1, 7):
        builders[f"k{k}"] = lambda k=k: clique(k)
    for k in range(2, 6):
        builders[f"k1,{k}"] = lambda k=k: star(k)
    for k in range(1, 13):
        builders[f"p{k}"] = lambda k=k: path_graph(k)
    for k in range(3, 13):
        builders[f"c{k}"] = lambda k=k: cycle_graph(k)
    builders["petersen"] = petersen
    builders["k2,3"] = lambda: _kdd(2, 3)
    builders["k3,4"] = lambda: _kdd(3, 4)
    builders["k1,1+k1,1"] = lambda: disjoint_union(_kdd(1, 1), _kdd(1, 1))
    builders["k2,2+k2,2"] = lambda: disjoint_union(_kdd(2, 2), _kdd(2, 2))
    builders["k3,3+k3,3"] = lambda: disjoint_union(_kdd(3, 3), _kdd(3, 3))
    builders["k3+k3"] = lambda: disjoint_union(clique(3), clique(3))
    builders["k4+k2"] = lambda: disjoint_union(clique(4), clique(2))
    builders["k2,3+k1,2"] = lambda: disjoint_union(_kdd(2, 3), star(2))
    builders["c5+k1,1"] = lambda: disjoint_union(cycle_graph(5), _kdd(1, 1))
    builders["k1,1+k1"] = lambda: disjoint_union(_kdd(1, 1), empty_graph(1))
    builders["k3,3+k1"] = lambda: disjoint_union(_kdd(3, 3), empty_graph(1))
    builders["p3+k1"] = lambda: disjoint_union(path_graph(3), empty_graph(1))
    builders["c4+k1+k1"] = lambda: disjoint_union(cycle_graph(4), empty_graph(2))
    builders["e3"] = lambda: empty_graph(3)
    return builders


def _regular_builders() -> dict[str, Callable[[], Graph]]:
    builders: dict[str, Callable[[], Graph]] = {}
    for k in range(2, 8):
        builders[f"reg-c{2 * k}"] = lambda k=k: cycle_graph(2 * k)
    for k in range(3, 8):
        builders[f"reg-crown{k}"] = lambda k=k: crown(k)
    builders["reg-cube3"] = lambda: hypercube(3)
    builders["reg-heawood"] = heawood
    for d in range(1, 5):
        builders[f"reg-k{d},{d}"] = lambda d=d: _kdd(d, d)
    return builders


NAMED_GRAPHS = _named_builders()
REGULAR_GRAPHS = _regular_builders()


def named_corpus() -> list[CorpusEntry]:
    return [CorpusEntry(graph_id, build(), NAMED) for graph_id, build in NAMED_GRAPHS.items()]


def regular_corpus() -> list[CorpusEntry]:
    entries = []
    for graph_id, build in REGULAR_GRAPHS.items():
        g = build()
        entries.append(CorpusEntry(graph_id, g, f"regular-({g.n},{is_regular(g)})"))
    return entries


def lookup_named(name: str) -> Graph | None:
    build = NAMED_GRAPHS.get(name) or REGULAR_GRAPHS.get(name)
    return build() if build else None


def looks_like_edge_list(text: str) -> bool:
    """True when the first content line is two whitespace-separated integers."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def load_corpus_file(path: str | Path) -> list[CorpusEntry]:
    """A file is either one edge list or one graph6 string per line."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DomainError(f"Cannot read {path}: {exc}") from exc

    if looks_like_edge_list(text):
        return [CorpusEntry(f"{path.stem}-1", parse_edge_list(text), FILE)]

    entries = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graph = parse_graph6(line)
        except ParseError as exc:
            raise ParseError(f"{path.name}: {exc}", line=number) from exc
        entries.append(CorpusEntry(f"{path.stem}-{number}", graph, FILE))
    return entries


def build_corpus(max_exhaustive_n: int, include_named: bool = True, include_regular: bool = True,
                 files: tuple[Path, ...] = ()) -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    for n in range(1, max_exhaustive_n + 1):
        entries += generate_exhaustive(n)
    if include_named:
        entries += named_corpus()
    if include_regular:
        entries += regular_corpus()
    for path in files:
        entries += load_corpus_file(path)

    seen: set[str] = set()
    for entry in entries:
        if entry.graph_id in seen:
            raise DomainError(f"Duplicate corpus id {entry.graph_id!r}")
        seen.add(entry.graph_id)
    corpus_logger.info(f"Corpus built with {len(entries)} graphs")
    return entries
