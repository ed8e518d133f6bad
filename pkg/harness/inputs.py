# Resolve a CLI graph argument: named fixture, file on disk, or literal graph6
from pathlib import Path

from indset.errors import DomainError
from indset.graph import Graph
from indset.graph6 import parse_graph6
from harness.corpus import load_corpus_file, lookup_named


def resolve_graph(argument: str) -> tuple[str, Graph]:
    """
    Returns (graph id, graph). A file holding several graph6 lines resolves
    to its first graph.
    """
    named = lookup_named(argument)
    if named is not None:
        return argument, named

    path = Path(argument)
    if path.is_file():
        entries = load_corpus_file(path)
        if not entries:
            raise DomainError(f"No graph found in {path}")
        return entries[0].graph_id, entries[0].graph

    return argument, parse_graph6(argument)
