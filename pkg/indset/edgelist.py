# Plain edge-list text: "n m" header, then m lines "u v" (0-based), '#' starts a comment
from indset.errors import DomainError, ParseError
from indset.graph import Graph


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _two_ints(line: str, number: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"Expected two integers, got {line!r}", line=number)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"Expected two integers, got {line!r}", line=number) from None


def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("Missing 'n m' header", line=1)
    header_line, header = lines[0]
    n, m = _two_ints(header, header_line)
    if n < 0 or m < 0:
        raise ParseError("Vertex and edge counts must be nonnegative", line=header_line)

    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise ParseError(f"Header announces {m} edges, found {len(body)}", line=last)

    edges = []
    seen = set()
    for number, line in body:
        u, v = _two_ints(line, number)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"Edge ({u}, {v}) uses a vertex outside 0..{n - 1}", line=number)
        if u == v:
            raise ParseError(f"Self-loop at vertex {u}", line=number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"Duplicate edge {key}", line=number)
        seen.add(key)
        edges.append(key)
    try:
        return Graph.from_edges(n, edges)
    except DomainError as exc:
        raise ParseError(str(exc), line=header_line) from exc


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
