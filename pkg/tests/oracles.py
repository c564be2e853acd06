"""Slow, definition-level oracles used only by the tests.

Nothing here calls into the code paths it is used to check.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from chordstar.graph import Graph


def edge_set(g: Graph) -> frozenset[tuple[int, int]]:
    return frozenset((u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1)


def brute_canonical(g: Graph) -> tuple:
    """Lexicographically least sorted edge list over all relabellings."""
    edges = edge_set(g)
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
        if best is None or key < best:
            best = key
    return (g.n, best)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    eg, eh = edge_set(g), edge_set(h)
    if len(eg) != len(eh):
        return False
    for perm in permutations(range(g.n)):
        if all(((min(perm[u], perm[v]), max(perm[u], perm[v]))) in eh for u, v in eg):
            return True
    return False


def labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if bits >> k & 1])


def _pair_cycles(perm) -> int:
    n = len(perm)
    seen = set()
    cycles = 0
    for u, v in combinations(range(n), 2):
        if (u, v) in seen:
            continue
        cycles += 1
        a, b = u, v
        while (a, b) not in seen:
            seen.add((a, b))
            a, b = perm[a], perm[b]
            if a > b:
                a, b = b, a
    return cycles


def burnside_count(n: int) -> int:
    """Number of unlabeled graphs on n vertices by Burnside's lemma over S_n acting on pairs."""
    total = sum(2 ** _pair_cycles(p) for p in permutations(range(n)))
    assert total % factorial(n) == 0
    return total // factorial(n)


def _connected_within(g: Graph, verts) -> bool:
    verts = list(verts)
    if not verts:
        return True
    allowed = set(verts)
    stack = [verts[0]]
    seen = {verts[0]}
    while stack:
        x = stack.pop()
        for y in allowed:
            if y not in seen and g.adj[x] >> y & 1:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(allowed)


def brute_is_chordal(g: Graph) -> bool:
    """No vertex subset of size >= 4 induces a cycle."""
    for k in range(4, g.n + 1):
        for sub in combinations(range(g.n), k):
            degs = [sum(g.adj[v] >> u & 1 for u in sub) for v in sub]
            if all(d == 2 for d in degs) and _connected_within(g, sub):
                return False
    return True


def brute_kappa(g: Graph) -> int:
    """Definition verbatim: smallest W whose removal leaves a disconnected graph."""
    n = g.n
    for k in range(n - 1):
        for w in combinations(range(n), k):
            rest = [v for v in range(n) if v not in w]
            if len(rest) >= 2 and not _connected_within(g, rest):
                return k
    return n - 1


def brute_tau_max(g: Graph) -> int:
    """Largest inclusion-minimal vertex cover, by checking every subset."""
    edges = edge_set(g)

    def covers(c):
        return all(u in c or v in c for u, v in edges)

    best = 0
    for k in range(g.n + 1):
        for c in combinations(range(g.n), k):
            s = set(c)
            if covers(s) and all(not covers(s - {v}) for v in s):
                best = max(best, k)
    return best


def cliques_of(g: Graph) -> list[tuple[int, ...]]:
    out = [()]
    for k in range(1, g.n + 1):
        found = [c for c in combinations(range(g.n), k)
                 if all(g.adj[u] >> v & 1 for u, v in combinations(c, 2))]
        if not found:
            break
        out.extend(found)
    return out


def k_polynomial(g: Graph) -> list[int]:
    """Coefficients of sum_{faces F} t^|F| (1 - t)^(n - |F|) for the clique complex.

    This equals sum_{i,j} (-1)^i beta_{i,j} t^j for S/I(G^c) (Hilbert series numerator).
    """
    n = g.n
    coeffs = [0] * (n + 1)
    binom = [[1]]
    for m in range(1, n + 1):
        row = [1] + [binom[-1][k - 1] + binom[-1][k] for k in range(1, m)] + [1]
        binom.append(row)
    for face in cliques_of(g):
        f = len(face)
        for k in range(n - f + 1):
            coeffs[f + k] += (-1) ** k * binom[n - f][k]
    return coeffs


def rank_over_q(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def rank_mod2(rows) -> int:
    m = [[x % 2 for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                m[r] = [(a + b) % 2 for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank
