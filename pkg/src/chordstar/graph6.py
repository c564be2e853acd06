"""graph6 encoding (McKay's format): size header N(n) then the upper triangle
in column order, six bits per printable byte."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .errors import Graph6Error, InputError
from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 68719476735


def _encode_n(n: int) -> str:
    if n < 0 or n > MAX_N:
        raise InputError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        a = adj[j]
        for i in range(j):
            bits.append(a >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        b = bits[k:k + 6]
        body.append(chr(63 + (b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5])))
    return _encode_n(g.n) + "".join(body)


def _sextet(text: str, pos: int) -> int:
    c = ord(text[pos])
    if not 63 <= c <= 126:
        raise Graph6Error(f"illegal character {text[pos]!r}", pos)
    return c - 63


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.  A leading ``>>graph6<<`` header is accepted."""
    line = text.rstrip("\n")
    start = len(HEADER) if line.startswith(HEADER) else 0
    pos = start
    if pos >= len(line):
        raise Graph6Error("empty graph6 string", pos)
    first = _sextet(line, pos)
    if first < 63:
        n = first
        pos += 1
    else:
        if pos + 1 < len(line) and line[pos + 1] == "~":
            width, pos = 6, pos + 2
        else:
            width, pos = 3, pos + 1
        if pos + width > len(line):
            raise Graph6Error("truncated size header", len(line))
        n = 0
        for k in range(width):
            n = n << 6 | _sextet(line, pos + k)
        pos += width
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(line) - pos < nbytes:
        raise Graph6Error(f"body too short: need {nbytes} bytes for n={n}", len(line))
    adj = [0] * n
    k = 0
    i, j = 0, 1
    for off in range(nbytes):
        val = _sextet(line, pos + off)
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if val >> shift & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    if len(line) - pos > nbytes:
        raise Graph6Error("trailing bytes after graph body", pos + nbytes)
    return Graph(n, tuple(adj))


def read_graph6_file(path: str | Path) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors carry the line."""
    with open(path, encoding="ascii", errors="replace") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield lineno, parse_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from exc
