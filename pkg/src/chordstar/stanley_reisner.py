"""Clique complexes, reduced homology over GF(2) and Q, and graded Betti numbers
of S/I(G^c) through Hochster's formula

    beta_{i,j}(S/I_Delta) = sum_{|W| = j} dim H~_{j-i-1}(Delta|_W; K).

The quotient ring itself is never built; for a graph G, the Stanley-Reisner
ideal of its clique complex is the edge ideal of the complement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .cliques import all_cliques, maximal_cliques
from .errors import InputError, PreconditionError, UnsupportedError
from .graph import Graph, count_components, iter_bits, to_mask
from .invariants import is_chordal, is_chordal_star, vertex_connectivity

GF2 = "gf2"
Q = "q"
FIELDS = (GF2, Q)
HOCHSTER_MAX_N = 16


def _check_field(name: str) -> str:
    if name not in FIELDS:
        raise InputError(f"unknown field {name!r}; expected one of {FIELDS}")
    return name


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on ground set ``0..n-1`` given by its facets (bitmasks).

    No facets means the void complex; the single facet ``0`` is ``{emptyset}``.
    """

    n: int
    facets: tuple[int, ...]

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = {to_mask(f) for f in facets}
        maximal = sorted(m for m in masks if not any(m != o and m & o == m for o in masks))
        return cls(n, tuple(maximal))

    def facet_sets(self) -> list[list[int]]:
        return [list(iter_bits(f)) for f in self.facets]

    def faces_by_dim(self) -> list[list[int]]:
        """``result[k]`` lists the k-dimensional faces; the empty face is omitted."""
        seen: set[int] = set()
        for f in self.facets:
            sub = f
            while sub:
                seen.add(sub)
                sub = (sub - 1) & f
        top = max((f.bit_count() for f in self.facets), default=0)
        out: list[list[int]] = [[] for _ in range(top)]
        for face in seen:
            out[face.bit_count() - 1].append(face)
        for level in out:
            level.sort()
        return out

    def restriction(self, keep: int) -> "SimplicialComplex":
        if not self.facets:
            return self
        masks = {f & keep for f in self.facets}
        maximal = sorted(m for m in masks if not any(m != o and m & o == m for o in masks))
        return SimplicialComplex(self.n, tuple(maximal))

    @property
    def is_void(self) -> bool:
        return not self.facets


def clique_complex(g: Graph) -> SimplicialComplex:
    if g.n == 0:
        return SimplicialComplex(0, (0,))
    return SimplicialComplex(g.n, tuple(sorted(maximal_cliques(g.adj))))


# Exact ranks

def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as int bitsets (XOR basis keyed by leading bit)."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = r
                break
            r ^= b
    return len(basis)


def rational_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p_row = m[rank]
        p = p_row[col]
        for r in range(rank + 1, len(m)):
            row = m[r]
            f = row[col]
            m[r] = [(p * row[c] - f * p_row[c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def _boundary_ranks(faces: list[list[int]], fld: str) -> list[int]:
    """``ranks[k]`` = rank of the boundary map from k-faces to (k-1)-faces.

    ``ranks[0]`` is the augmentation to the empty face.
    """
    ranks = [1 if faces and faces[0] else 0]
    for k in range(1, len(faces)):
        index = {f: i for i, f in enumerate(faces[k - 1])}
        if fld == GF2:
            rows = []
            for face in faces[k]:
                r = 0
                for v in iter_bits(face):
                    r |= 1 << index[face & ~(1 << v)]
                rows.append(r)
            ranks.append(gf2_rank(rows))
        else:
            width = len(faces[k - 1])
            mat = []
            for face in faces[k]:
                row = [0] * width
                for i, v in enumerate(iter_bits(face)):
                    row[index[face & ~(1 << v)]] = -1 if i % 2 else 1
                mat.append(row)
            ranks.append(rational_rank(mat))
    return ranks


@dataclass(frozen=True)
class HomologyRanks:
    field: str
    ranks: dict[int, int]

    def __getitem__(self, k: int) -> int:
        return self.ranks.get(k, 0)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * r for k, r in self.ranks.items())


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """sum_{k >= -1} (-1)^k f_k, counting the empty face; 0 for the void complex."""
    if cx.is_void:
        return 0
    return sum((-1) ** k * len(level) for k, level in enumerate(cx.faces_by_dim())) - 1


def _ranks_from_faces(faces: list[list[int]], fld: str, void: bool) -> dict[int, int]:
    if void:
        return {}
    bnd = _boundary_ranks(faces, fld) + [0]
    out = {-1: 1 - bnd[0]}
    for k, level in enumerate(faces):
        out[k] = len(level) - bnd[k] - bnd[k + 1]
    return out


def reduced_homology_ranks(cx: SimplicialComplex, field: str = GF2) -> HomologyRanks:
    fld = _check_field(field)
    h = HomologyRanks(fld, _ranks_from_faces(cx.faces_by_dim(), fld, cx.is_void))
    if fld == Q and h.euler_characteristic() != reduced_euler_characteristic(cx):
        raise ArithmeticError(f"Euler characteristic mismatch for {cx}")
    return h


# Betti tables

@dataclass
class BettiTable:
    """Graded Betti numbers of S/I; absent entries are zero."""

    n: int
    field: str
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, b) for (i, j), b in self.entries.items() if b)

    def linear_strand(self) -> list[int]:
        """beta_{i,i+1} for i = 1..n-1."""
        return [self[i, i + 1] for i in range(1, self.n)]

    def as_rows(self) -> list[dict[str, int]]:
        return [{"i": i, "j": j, "beta": b} for i, j, b in self.nonzero()]


def betti_table_hochster(g: Graph, field: str = GF2) -> BettiTable:
    """Full Betti table of S/I(G^c) by summing homology of every induced clique complex."""
    fld = _check_field(field)
    n = g.n
    if n > HOCHSTER_MAX_N:
        raise UnsupportedError(f"Hochster sweep limited to n <= {HOCHSTER_MAX_N}, got {n}")
    cliques = all_cliques(g.adj)
    table = BettiTable(n, fld, {(0, 0): 1})
    for j in range(1, n + 1):
        for combo in combinations(range(n), j):
            w = to_mask(combo)
            faces = [[c for c in level if not c & ~w] for level in cliques]
            while faces and not faces[-1]:
                faces.pop()
            ranks = _ranks_from_faces(faces, fld, void=False)
            if fld == Q:
                chi = sum((-1) ** k * len(level) for k, level in enumerate(faces)) - 1
                if sum((-1) ** k * r for k, r in ranks.items()) != chi:
                    raise ArithmeticError(f"Euler characteristic mismatch on W={combo}")
            for k, r in ranks.items():
                if r:
                    i = j - k - 1
                    table.entries[i, j] = table.entries.get((i, j), 0) + r
    return table


def linear_strand_chordal(g: Graph) -> list[int]:
    """beta_{i,i+1}(S/I(G^c)) for i = 1..n-1 from component counts alone.

    For chordal G every induced clique complex has homology only in degree 0,
    of rank (components - 1).
    """
    if not is_chordal(g):
        raise PreconditionError("linear_strand_chordal requires a chordal graph")
    n = g.n
    strand = [0] * max(n - 1, 0)
    for w in range(1, 1 << n):
        size = w.bit_count()
        if size >= 2:
            strand[size - 2] += count_components(g.adj, w) - 1
    return strand


def has_linear_resolution(t: BettiTable) -> bool:
    return all(j == i + 1 for (i, j), b in t.entries.items() if b and i >= 1)


def proj_dim(t: BettiTable) -> int:
    """Largest homological index carrying a nonzero Betti number (0 for the zero ideal)."""
    if has_linear_resolution(t):
        return max((i for i in range(1, t.n + 1) if t[i, i + 1]), default=0)
    return max((i for (i, _), b in t.entries.items() if b), default=0)


def _kappa_from_strand(n: int, strand: Sequence[int]) -> int:
    # strand[i - 1] = beta_{i,i+1}; i = 0 always qualifies because beta_{n,n+1} = 0.
    def beta(i: int) -> int:
        return strand[i - 1] if 1 <= i <= len(strand) else 0

    return max(i for i in range(n) if beta(n - i) == 0)


def kappa_via_betti(g: Graph, field: str = GF2, method: str = "hochster") -> int:
    """Connectivity read off the linear strand: the largest i with beta_{n-i,n-i+1} = 0.

    ``method="strand"`` uses the component-count fast path instead of full homology.
    """
    if g.n < 2 or not is_chordal_star(g):
        raise PreconditionError("kappa_via_betti requires a chordal* graph with n >= 2")
    if method == "hochster":
        strand = betti_table_hochster(g, field).linear_strand()
    elif method == "strand":
        strand = linear_strand_chordal(g)
    else:
        raise InputError(f"unknown method {method!r}")
    return _kappa_from_strand(g.n, strand)


@dataclass(frozen=True)
class IdentityCheck:
    n_minus_kappa: int
    projdim_plus_one: int

    @property
    def holds(self) -> bool:
        return self.n_minus_kappa == self.projdim_plus_one


def check_projdim_kappa_identity(g: Graph, field: str = GF2, table: BettiTable | None = None) -> IdentityCheck:
    """Compare n - kappa(G) with projdim(S/I(G^c)) + 1 for a chordal* graph."""
    if not is_chordal_star(g):
        raise PreconditionError("identity check requires a chordal* graph")
    if table is None:
        table = betti_table_hochster(g, field)
    return IdentityCheck(g.n - vertex_connectivity(g), proj_dim(table) + 1)
