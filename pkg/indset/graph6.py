"""
graph6 codec.

Size header: one byte n + 63 for n <= 62, otherwise '~' followed by three
bytes carrying n in 18 bits. Body: the upper triangle read column by
column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte,
each byte offset by 63, zero padded.
"""

from indset.bitset import bit
from indset.errors import ParseError
from indset.graph import Graph
from limits import MAX_GRAPH6_SHORT, MAX_VERTICES, check_capacity

HEADER = ">>graph6<<"


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str) -> Graph:
    """Parse a single graph6 string (optional '>>graph6<<' header, trailing newline allowed)."""
    data = text.rstrip("\r\n")
    base = 0
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        base = len(HEADER)
    if not data:
        raise ParseError("Empty graph6 string", offset=base)

    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"Character {ch!r} is outside the graph6 range", offset=base + i)

    if data[0] != "~":
        n = ord(data[0]) - 63
        pos = 1
    else:
        if len(data) < 4:
            raise ParseError("Truncated long size header", offset=base + len(data))
        if data[1] == "~":
            raise ParseError("Eight-byte size headers exceed the vertex limit", offset=base + 1)
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    check_capacity("graph6 graph", n, MAX_VERTICES)

    body = data[pos:]
    expected = _body_length(n)
    if len(body) < expected:
        raise ParseError(f"Truncated bitstream: expected {expected} data bytes, got {len(body)}", offset=base + len(data))
    if len(body) > expected:
        raise ParseError(f"Unexpected trailing bytes after {expected} data bytes", offset=base + pos + expected)
    padding = -(n * (n - 1) // 2) % 6
    if padding and (ord(body[-1]) - 63) & ((1 << padding) - 1):
        raise ParseError("Nonzero padding bits in the last data byte", offset=base + pos + expected - 1)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= bit(j)
                adj[j] |= bit(i)
            k += 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    """Encode g; canonical single-byte header for n <= 62."""
    n = g.n
    if n <= MAX_GRAPH6_SHORT:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)]

    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)
