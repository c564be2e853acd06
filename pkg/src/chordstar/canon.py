"""Canonical labelling and isomorph-free enumeration of small graphs.

The canonical form is the minimum relabelled adjacency over the leaves of an
individualisation/refinement search tree.  Refinement is equitable-partition
refinement; branches on twin vertices are pruned because swapping twins is an
automorphism fixing the current partition.  That is enough at n <= 16.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import UnsupportedError
from .graph import Graph, iter_bits, relabel
from .graph6 import parse_graph6, write_graph6

MAX_CANON_N = 16
MAX_ENUM_N = 9


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    n = len(adj)
    queue = deque(splitters)
    while queue and len(cells) < n:
        w = queue.popleft()
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            for count in sorted(groups):
                frag = groups[count]
                out.append(frag)
                mask = 0
                for v in frag:
                    mask |= 1 << v
                queue.append(mask)
        cells = out
    return cells


def _leaf_key(adj: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(adj)
    for k, v in enumerate(order):
        pos[v] = 1 << k
    key = []
    for v in order:
        m = 0
        for u in iter_bits(adj[v]):
            m |= pos[u]
        key.append(m)
    return tuple(key)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabelling is the canonical representative of ``g``."""
    if g.n > MAX_CANON_N:
        raise UnsupportedError(f"canonical form limited to n <= {MAX_CANON_N}, got {g.n}")
    n = g.n
    if n <= 1:
        return list(range(n))
    adj = g.adj
    best_key: tuple[int, ...] | None = None
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_key, best_order
        if len(cells) == n:
            order = [c[0] for c in cells]
            key = _leaf_key(adj, order)
            if best_key is None or key < best_key:
                best_key, best_order = key, order
            return
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        reps: list[int] = []
        for v in target:
            av = adj[v]
            bv = 1 << v
            if any((adj[u] & ~bv) == (av & ~(1 << u)) for u in reps):
                continue
            reps.append(v)
            rest = [u for u in target if u != v]
            child = cells[:t] + [[v], rest] + cells[t + 1:]
            search(_refine(adj, child, [bv]))

    search(_refine(adj, [list(range(n))], [(1 << n) - 1]))
    return best_order


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-class identifier: graph6 bytes of the canonical relabelling."""
    return write_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)


def _children(parent: Graph) -> Iterator[tuple[int, ...]]:
    """Adjacency tuples of one-vertex extensions whose new vertex has minimum degree.

    Deleting a minimum-degree vertex from any graph leaves a graph on one
    vertex fewer, so these extensions reach every isomorphism class.
    """
    m = parent.n
    adj = parent.adj
    degs = [a.bit_count() for a in adj]
    mindeg = min(degs) if degs else 0
    new_bit = 1 << m
    for s in range(1 << m):
        d = s.bit_count()
        if d > mindeg + 1:
            continue
        low = 0
        for v in range(m):
            if degs[v] < d:
                low |= 1 << v
        if low & ~s:
            continue
        child = tuple(a | new_bit if s >> v & 1 else a for v, a in enumerate(adj)) + (s,)
        yield child


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[bytes, ...]:
    if n == 1:
        return (canonical_form(Graph(1, (0,))),)
    seen: set[bytes] = set()
    for code in _level(n - 1):
        parent = parse_graph6(code.decode("ascii"))
        for child in _children(parent):
            seen.add(canonical_form(Graph(n, child)))
    return tuple(sorted(seen))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Order is by canonical graph6 string, so it is deterministic.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise UnsupportedError(
            f"built-in enumeration covers 1 <= n <= {MAX_ENUM_N}; ingest larger corpora as graph6")
    for code in _level(n):
        yield parse_graph6(code.decode("ascii"))


def count_graphs(n: int) -> int:
    if not 1 <= n <= MAX_ENUM_N:
        raise UnsupportedError(f"built-in enumeration covers 1 <= n <= {MAX_ENUM_N}")
    return len(_level(n))
