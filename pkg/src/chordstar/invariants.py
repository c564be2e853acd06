"""Combinatorial and spectral invariants: universality, chordality, gapfreeness,
vertex connectivity, maximum minimal vertex covers and algebraic connectivity."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from .cliques import DEFAULT_BUDGET, maximal_cliques
from .errors import InputError, UnsupportedError
from .graph import (Graph, complement, component_masks, induced_subgraph,
                    is_connected, iter_bits)

BRUTEFORCE_MAX_N = 10


def ceil_two_sqrt_minus_two(n: int) -> int:
    """Exact ceil(2*sqrt(n) - 2): least m with (m + 2)^2 >= 4n."""
    if n < 0:
        raise InputError(f"n must be non-negative, got {n}")
    r = math.isqrt(4 * n)
    if r * r < 4 * n:
        r += 1
    return r - 2


def kappa_bound(n: int) -> int:
    """Largest connectivity a chordal* graph on ``n`` vertices can have."""
    return (n - 1) - ceil_two_sqrt_minus_two(n)


def is_universal(g: Graph, v: int) -> bool:
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for n={g.n}")
    return g.adj[v].bit_count() == g.n - 1


def universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.adj[v].bit_count() == g.n - 1]


def has_universal_vertex(g: Graph) -> bool:
    return any(a.bit_count() == g.n - 1 for a in g.adj)


def has_isolated_vertex(g: Graph) -> bool:
    return any(a == 0 for a in g.adj)


# Chordality

def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first search order (ties broken by smallest vertex)."""
    labels: list[list[int]] = [[] for _ in range(g.n)]
    order: list[int] = []
    left = set(range(g.n))
    for step in range(g.n, 0, -1):
        v = max(left, key=lambda u: (labels[u], -u))
        left.remove(v)
        order.append(v)
        for u in iter_bits(g.adj[v]):
            if u in left:
                labels[u].append(step)
    return order


def is_perfect_elimination_order(g: Graph, order: list[int]) -> bool:
    """Each vertex's neighbours later in ``order`` must be pairwise adjacent."""
    later = g.vertex_mask
    for v in order:
        later &= ~(1 << v)
        nbrs = g.adj[v] & later
        for u in iter_bits(nbrs):
            if nbrs & ~g.adj[u] & ~(1 << u):
                return False
    return True


def _find_chordless_cycle(g: Graph) -> Optional[list[int]]:
    # Any chordless cycle of length >= 4 has a vertex v whose two cycle
    # neighbours u, w are non-adjacent and the rest of the cycle avoids N[v].
    adj = g.adj
    for v in range(g.n):
        nbrs = list(iter_bits(adj[v]))
        for u, w in combinations(nbrs, 2):
            if adj[u] >> w & 1:
                continue
            allowed = g.vertex_mask & ~(adj[v] | (1 << v)) | (1 << u) | (1 << w)
            prev = {u: None}
            queue = deque([u])
            while queue:
                x = queue.popleft()
                if x == w:
                    break
                for y in iter_bits(adj[x] & allowed):
                    if y not in prev:
                        prev[y] = x
                        queue.append(y)
            if w in prev:
                walk = [w]
                while prev[walk[-1]] is not None:
                    walk.append(prev[walk[-1]])
                return [v] + walk[::-1]
    return None


@dataclass(frozen=True)
class Chordality:
    chordal: bool
    elimination_order: Optional[list[int]] = None
    chordless_cycle: Optional[list[int]] = None

    def __bool__(self) -> bool:
        return self.chordal


def chordality(g: Graph) -> Chordality:
    """Chordality test with a certificate either way.

    Chordal graphs come with a perfect elimination order (reverse LexBFS);
    the others with a chordless cycle of length at least four.
    """
    order = lex_bfs(g)[::-1]
    if is_perfect_elimination_order(g, order):
        return Chordality(True, elimination_order=order)
    cyc = _find_chordless_cycle(g)
    assert cyc is not None, "LexBFS rejected a graph with no chordless cycle"
    return Chordality(False, chordless_cycle=cyc)


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_order(g, lex_bfs(g)[::-1])


def is_chordal_star(g: Graph) -> bool:
    return not has_universal_vertex(g) and is_chordal(g)


def is_gapfree(g: Graph) -> bool:
    if not is_connected(g):
        return False
    adj = g.adj
    edges = g.edges
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        if not (adj[a] | adj[b]) & ((1 << c) | (1 << d)):
            return False
    return True


# Vertex connectivity

def _local_connectivity(adj, n: int, s: int, t: int, limit: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths, capped at ``limit``.

    Unit-capacity max flow on the split digraph: vertex v becomes v_in = 2v
    and v_out = 2v + 1 joined by a unit arc; each edge uv gives u_out -> v_in.
    """
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2 * n)}

    def arc(a: int, b: int, c: int) -> None:
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1)
        for u in iter_bits(adj[v]):
            arc(2 * v + 1, 2 * u, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            break
        y = sink
        while y != source:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity via Menger's theorem.

    Complete graphs get n - 1; disconnected graphs get 0.  Some vertex among
    the first kappa + 1 avoids a minimum separator, so the outer loop can
    stop once its index exceeds the best value found.
    """
    n = g.n
    if n == 0:
        raise InputError("vertex connectivity undefined for the empty graph")
    if g.is_complete():
        return n - 1
    adj = g.adj
    best = min(a.bit_count() for a in adj)
    for s in range(n):
        if s > best:
            break
        for t in range(n):
            if t == s or adj[s] >> t & 1:
                continue
            best = min(best, _local_connectivity(adj, n, s, t, best))
            if best == 0:
                return 0
    return best


def vertex_connectivity_bruteforce(g: Graph) -> int:
    """Smallest removal set leaving a disconnected graph, tried by increasing size."""
    n = g.n
    if n == 0:
        raise InputError("vertex connectivity undefined for the empty graph")
    if n > BRUTEFORCE_MAX_N:
        raise UnsupportedError(f"brute-force connectivity limited to n <= {BRUTEFORCE_MAX_N}")
    full = g.vertex_mask
    for k in range(n - 1):
        for removed in combinations(range(n), k):
            keep = full
            for v in removed:
                keep &= ~(1 << v)
            if len(component_masks(g.adj, keep)) > 1:
                return k
    return n - 1


# Vertex covers

def maximal_independent_sets(g: Graph, budget: int = DEFAULT_BUDGET) -> list[int]:
    return list(maximal_cliques(complement(g).adj, budget=budget))


def tau_max(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, list[int]]:
    """Largest inclusion-minimal vertex cover, with a witness cover.

    Minimal covers are the complements of maximal independent sets.
    """
    if g.n == 0:
        return 0, []
    smallest = min(maximal_independent_sets(g, budget), key=lambda m: (m.bit_count(), m))
    cover = g.vertex_mask & ~smallest
    return cover.bit_count(), list(iter_bits(cover))


def is_vertex_cover(g: Graph, cover) -> bool:
    c = set(cover)
    return all(u in c or v in c for u, v in g.edges)


def is_minimal_vertex_cover(g: Graph, cover) -> bool:
    c = set(cover)
    return is_vertex_cover(g, c) and all(not is_vertex_cover(g, c - {v}) for v in c)


def universal_vertex_reduction(g: Graph) -> tuple[Graph, int]:
    """Strip universal vertices until none is left or one vertex remains."""
    if g.n == 0:
        raise InputError("reduction needs n >= 1")
    stripped = 0
    while g.n > 1:
        univ = universal_vertices(g)
        if not univ:
            break
        g = induced_subgraph(g, g.vertex_mask & ~(1 << univ[0]))
        stripped += 1
    return g, stripped


# Spectrum

JACOBI_TOL = 1e-12


def laplacian(g: Graph) -> np.ndarray:
    lap = np.zeros((g.n, g.n))
    for v, a in enumerate(g.adj):
        lap[v, v] = a.bit_count()
        for u in iter_bits(a):
            lap[v, u] = -1.0
    return lap


def jacobi_eigenvalues(a: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    scale = max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, float(np.sum(a * a) - np.sum(np.diag(a) ** 2))))
        if off < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if abs(apq) < 1e-300:
                    continue
                theta = (float(a[q, q]) - float(a[p, p])) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    return np.sort(np.diag(a))


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue."""
    if g.n < 2:
        raise InputError(f"algebraic connectivity needs n >= 2, got {g.n}")
    return max(0.0, float(jacobi_eigenvalues(laplacian(g))[1]))


@dataclass
class InvariantRecord:
    n: int
    kappa: int
    tau_max_self: int
    tau_max_complement: int
    alg_connectivity: Optional[float]
    is_chordal: bool
    has_universal_vertex: bool
    is_chordal_star: bool
    is_gapfree: bool
    kappa_bound: int
    tau_cover_self: list[int] = field(default_factory=list)
    tau_cover_complement: list[int] = field(default_factory=list)


def invariant_record(g: Graph) -> InvariantRecord:
    if g.n == 0:
        raise InputError("invariants need n >= 1")
    tau_self, cover_self = tau_max(g)
    tau_comp, cover_comp = tau_max(complement(g))
    chordal = is_chordal(g)
    univ = has_universal_vertex(g)
    return InvariantRecord(
        n=g.n,
        kappa=vertex_connectivity(g),
        tau_max_self=tau_self,
        tau_max_complement=tau_comp,
        alg_connectivity=algebraic_connectivity(g) if g.n >= 2 else None,
        is_chordal=chordal,
        has_universal_vertex=univ,
        is_chordal_star=chordal and not univ,
        is_gapfree=is_gapfree(g),
        kappa_bound=kappa_bound(g.n),
        tau_cover_self=cover_self,
        tau_cover_complement=cover_comp,
    )
