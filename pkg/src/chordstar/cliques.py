"""Clique enumeration on bitmask adjacency (Bron-Kerbosch with Tomita pivoting)."""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import BudgetExceeded
from .graph import iter_bits

DEFAULT_BUDGET = 5_000_000


def maximal_cliques(adj: Sequence[int], within: int | None = None,
                    budget: int = DEFAULT_BUDGET) -> Iterator[int]:
    """Yield every maximal clique (as a bitmask) of the graph induced on ``within``."""
    if within is None:
        within = (1 << len(adj)) - 1
    if not within:
        return
    nodes = 0

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"clique search exceeded {budget} nodes")
        if not p and not x:
            yield r
            return
        px = p | x
        pivot = max(iter_bits(px), key=lambda u: (p & adj[u]).bit_count())
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    yield from expand(0, within, 0)


def all_cliques(adj: Sequence[int]) -> list[list[int]]:
    """Every non-empty clique, grouped by size: ``result[k]`` holds the (k+1)-cliques."""
    by_size: list[list[int]] = []

    def grow(r: int, size: int, cand: int) -> None:
        while len(by_size) < size:
            by_size.append([])
        if size:
            by_size[size - 1].append(r)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(r | low, size + 1, cand & adj[v])

    grow(0, 0, (1 << len(adj)) - 1)
    return by_size
