"""Verified chordal* graphs with prescribed vertex connectivity.

Every graph handed out has been checked to be chordal* with exactly the
requested connectivity; the recipe alone is enough to rebuild it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

from .errors import ConstructionError, DomainError
from .graph import (Graph, clique_with_pendants, complement, disjoint_union,
                    path, path_power)
from .invariants import is_chordal_star, kappa_bound, vertex_connectivity

DISCONNECTED_PATH = "disconnected_path"
PATH_POWER = "path_power"
COMPLEMENT_CLIQUE_PENDANTS = "complement_clique_pendants"
SEARCHED = "searched"

DEFAULT_SEED = 20240517
SEARCH_STEPS = 20000


@dataclass(frozen=True)
class ConstructionRecipe:
    family: str
    params: tuple[int, ...]
    target_n: int
    target_kappa: int

    def to_dict(self) -> dict:
        return {"family": self.family, "params": list(self.params),
                "target_n": self.target_n, "target_kappa": self.target_kappa}


def realize(recipe: ConstructionRecipe) -> Graph:
    """Rebuild the graph a recipe describes (no verification)."""
    p = recipe.params
    if recipe.family == DISCONNECTED_PATH:
        return disjoint_union(path(p[0] - 1), path(1))
    if recipe.family == PATH_POWER:
        return path_power(p[0], p[1])
    if recipe.family == COMPLEMENT_CLIQUE_PENDANTS:
        return complement(clique_with_pendants(p[0], p[1:]))
    if recipe.family == SEARCHED:
        edges = list(zip(p[1::2], p[2::2]))
        return Graph.from_edges(p[0], edges)
    raise DomainError(f"unknown construction family {recipe.family!r}")


def _verified(g: Graph, n: int, kappa: int) -> bool:
    return g.n == n and is_chordal_star(g) and vertex_connectivity(g) == kappa


def _pendant_vectors(n: int, kappa: int) -> Iterator[tuple[int, ...]]:
    """Near-balanced (m, p_1..p_m) whose complement should have connectivity kappa.

    The complement of K_m with pendants p is a split graph whose connectivity
    is n - m - max(p); fix the largest pendant count and spread the rest.
    """
    for m in range(2, n):
        biggest = n - m - kappa
        rest = n - m - biggest
        if biggest < 1 or not (m - 1 <= rest <= (m - 1) * biggest):
            continue
        q, r = divmod(rest, m - 1)
        yield (m, biggest) + (q + 1,) * r + (q,) * (m - 1 - r)


def _local_search(n: int, kappa: int, seed: int, steps: int) -> Graph | None:
    rng = random.Random(seed)
    start = min(max(kappa, 1), max((n - 2) // 2, 1))
    g = path_power(n, start)
    adj = list(g.adj)
    score = abs(vertex_connectivity(g) - kappa)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(steps):
        if score == 0:
            return Graph(n, tuple(adj))
        u, v = rng.choice(pairs)
        trial = adj[:]
        trial[u] ^= 1 << v
        trial[v] ^= 1 << u
        cand = Graph(n, tuple(trial))
        if not is_chordal_star(cand):
            continue
        s = abs(vertex_connectivity(cand) - kappa)
        if s <= score:
            adj, score = trial, s
    return Graph(n, tuple(adj)) if score == 0 else None


def construct_chordal_star(n: int, kappa: int, seed: int = DEFAULT_SEED,
                           search_steps: int = SEARCH_STEPS) -> tuple[Graph, ConstructionRecipe]:
    """A chordal* graph on ``n`` vertices with connectivity ``kappa``.

    Rungs, first verified hit wins: P_{n-1} + K_1 for kappa = 0, the path
    power P_n^kappa while it has no universal vertex, complements of cliques
    with pendants, then a seeded local search.
    """
    if n < 4:
        raise DomainError(f"constructions need n >= 4, got {n}")
    if not 0 <= kappa <= kappa_bound(n):
        raise DomainError(f"kappa={kappa} outside [0, {kappa_bound(n)}] for n={n}")
    candidates: list[ConstructionRecipe] = []
    if kappa == 0:
        candidates.append(ConstructionRecipe(DISCONNECTED_PATH, (n,), n, kappa))
    if 1 <= kappa <= (n - 2) // 2:
        candidates.append(ConstructionRecipe(PATH_POWER, (n, kappa), n, kappa))
    candidates.extend(ConstructionRecipe(COMPLEMENT_CLIQUE_PENDANTS, params, n, kappa)
                      for params in _pendant_vectors(n, kappa))
    for recipe in candidates:
        g = realize(recipe)
        if _verified(g, n, kappa):
            return g, recipe
    g = _local_search(n, kappa, seed, search_steps)
    if g is not None and _verified(g, n, kappa):
        flat = tuple(x for e in g.edges for x in e)
        return g, ConstructionRecipe(SEARCHED, (n,) + flat, n, kappa)
    raise ConstructionError(f"no verified chordal* graph found for n={n}, kappa={kappa}")


def extremal_candidate(n: int) -> Graph:
    """Complement of K_s with s - 1 pendants per vertex, for n = s^2."""
    s = math.isqrt(n)
    if s < 2 or s * s != n:
        raise DomainError(f"extremal_candidate needs a perfect square n >= 4, got {n}")
    g = complement(clique_with_pendants(s, [s - 1] * s))
    if not _verified(g, n, kappa_bound(n)):
        raise ConstructionError(f"extremal candidate failed verification at n={n}")
    return g


def kappa_spectrum(n: int, seed: int = DEFAULT_SEED) -> set[int]:
    """Connectivities realised by :func:`construct_chordal_star` over the whole interval."""
    if n < 4:
        raise DomainError(f"kappa_spectrum needs n >= 4, got {n}")
    achieved: set[int] = set()
    failed: list[int] = []
    for kappa in range(kappa_bound(n) + 1):
        try:
            construct_chordal_star(n, kappa, seed)
        except ConstructionError:
            failed.append(kappa)
        else:
            achieved.add(kappa)
    if failed:
        raise ConstructionError(f"n={n}: no construction for kappa in {failed}")
    return achieved
