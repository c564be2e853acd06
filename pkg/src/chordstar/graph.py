"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Use :meth:`from_edges`
    to build one from an edge list; the raw constructor trusts its input.
    """

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def is_complete(self) -> bool:
        full = self.vertex_mask
        return all(a | (1 << v) == full for v, a in enumerate(self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges})"


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~(a | (1 << v)) for v, a in enumerate(g.adj)))


def induced_subgraph(g: Graph, keep: Iterable[int] | int) -> Graph:
    """Subgraph induced on ``keep`` (an iterable of vertices or a bitmask).

    Kept vertices are relabelled ``0..k-1`` in increasing original order.
    """
    if isinstance(keep, int):
        if keep >> g.n:
            raise InputError(f"vertex mask {keep:#x} exceeds n={g.n}")
        order = list(iter_bits(keep))
    else:
        members = set(keep)
        for v in members:
            if not 0 <= v < g.n:
                raise InputError(f"vertex {v} out of range for n={g.n}")
        order = sorted(members)
    adj = []
    for v in order:
        a = g.adj[v]
        new = 0
        for i, u in enumerate(order):
            if a >> u & 1:
                new |= 1 << i
        adj.append(new)
    return Graph(len(order), tuple(adj))


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced on the bitmask ``within``."""
    parts = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & within & ~comp
            comp |= frontier
        parts.append(comp)
        rest &= ~comp
    return parts


def count_components(adj: Sequence[int], within: int) -> int:
    return len(component_masks(adj, within))


def connected_components(g: Graph) -> list[list[int]]:
    """Partition of the vertices into connected components, ordered by least vertex."""
    return [list(iter_bits(m)) for m in component_masks(g.adj, g.vertex_mask)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g.adj, g.vertex_mask)) <= 1


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(a << offset for a in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between ``g`` and ``h``."""
    g_mask = g.vertex_mask
    h_mask = h.vertex_mask << g.n
    adj = [a | h_mask for a in g.adj] + [(a << g.n) | g_mask for a in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``k`` is the old vertex ``order[k]``."""
    pos = [0] * g.n
    for k, v in enumerate(order):
        pos[v] = k
    adj = []
    for v in order:
        new = 0
        for u in iter_bits(g.adj[v]):
            new |= 1 << pos[u]
        adj.append(new)
    return Graph(g.n, tuple(adj))


# Named families.

def complete(n: int) -> Graph:
    if n < 0:
        raise InputError("complete graph needs n >= 0")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path(n: int) -> Graph:
    if n < 0:
        raise InputError("path needs n >= 0")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_minus_perfect_matching(n: int) -> Graph:
    """K_n with the edges {0,1}, {2,3}, ... removed (n even)."""
    if n < 2 or n % 2:
        raise InputError(f"complete_minus_perfect_matching needs even n >= 2, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) & ~(1 << (v ^ 1)) for v in range(n)))


def h_graph(n: int) -> Graph:
    """complete_minus_perfect_matching(n - 1) plus vertex n-1 joined to 1..n-2 (n odd)."""
    if n < 3 or n % 2 == 0:
        raise InputError(f"h_graph needs odd n >= 3, got {n}")
    base = complete_minus_perfect_matching(n - 1)
    extra = [(v, n - 1) for v in range(1, n - 1)]
    return Graph.from_edges(n, base.edges + extra)


def path_power(n: int, k: int) -> Graph:
    """i ~ j iff 0 < |i - j| <= k."""
    if n < 0 or k < 0:
        raise InputError(f"path_power needs n, k >= 0, got n={n}, k={k}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, min(n, i + k + 1))])


def clique_with_pendants(m: int, pendants: Sequence[int]) -> Graph:
    """K_m on vertices 0..m-1 where vertex i carries ``pendants[i]`` leaves.

    Leaves are numbered after the clique, grouped by hub.
    """
    if m < 1 or len(pendants) != m:
        raise InputError(f"clique_with_pendants needs m >= 1 and {m} pendant counts")
    if any(p < 1 for p in pendants):
        raise InputError("every pendant count must be >= 1")
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    nxt = m
    for hub, p in enumerate(pendants):
        for _ in range(p):
            edges.append((hub, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


FAMILIES = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "complete_minus_perfect_matching": complete_minus_perfect_matching,
    "h_graph": h_graph,
    "path_power": path_power,
    "clique_with_pendants": clique_with_pendants,
}


def family(name: str, *params) -> Graph:
    try:
        build = FAMILIES[name]
    except KeyError:
        raise InputError(f"unknown family {name!r}") from None
    return build(*params)
