import math
import random
from itertools import combinations

import numpy as np
import pytest

from chordstar.errors import InputError, UnsupportedError
from chordstar.graph import (Graph, clique_with_pendants, complement,
                             complete, complete_minus_perfect_matching, cycle,
                             disjoint_union, h_graph, is_connected, join, path)
from chordstar.invariants import (algebraic_connectivity,
                                  ceil_two_sqrt_minus_two, chordality,
                                  has_isolated_vertex, invariant_record,
                                  is_chordal, is_chordal_star, is_gapfree,
                                  is_minimal_vertex_cover,
                                  is_perfect_elimination_order, is_universal,
                                  jacobi_eigenvalues, kappa_bound, laplacian,
                                  tau_max, universal_vertex_reduction,
                                  vertex_connectivity,
                                  vertex_connectivity_bruteforce)

from conftest import graphs_upto
from oracles import brute_is_chordal, brute_kappa, brute_tau_max

SIX_RIGHT = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (2, 4), (4, 0)])


def test_ceiling_is_exact():
    for n in range(0, 5000):
        expected = next(m for m in range(-2, 200) if (m + 2) ** 2 >= 4 * n)
        assert ceil_two_sqrt_minus_two(n) == expected
    # perfect squares and their neighbours, where float ceilings go wrong
    for s in range(2, 3000):
        assert ceil_two_sqrt_minus_two(s * s) == 2 * s - 2
        assert ceil_two_sqrt_minus_two(s * s + 1) == 2 * s - 1
    assert [kappa_bound(n) for n in (4, 6, 9, 16)] == [1, 2, 4, 9]


def test_is_universal():
    assert all(is_universal(complete(4), v) for v in range(4))
    assert not is_universal(path(4), 1)
    assert is_universal(path(3), 1)
    assert is_universal(complete(1), 0)
    with pytest.raises(InputError):
        is_universal(path(3), 3)


def test_is_chordal_examples():
    res = chordality(cycle(4))
    assert not res and sorted(res.chordless_cycle) == [0, 1, 2, 3]
    tree = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    assert is_chordal(tree)
    assert is_chordal(SIX_RIGHT)


def test_is_chordal_star_examples():
    assert is_chordal_star(path(4))
    assert not is_chordal_star(complete(4))
    assert not is_chordal_star(cycle(5))
    assert not is_chordal_star(path(3))
    assert not is_chordal_star(complete(1))


def test_is_gapfree_examples():
    assert not is_gapfree(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_gapfree(complete(4))
    assert is_gapfree(clique_with_pendants(3, [2, 2, 2]))
    assert not is_gapfree(path(5))


@pytest.mark.parametrize("g, expected", [
    (cycle(6), 2),
    (complete_minus_perfect_matching(8), 6),
    (h_graph(9), 6),
    (path(4), 1),
    (complete(4), 3),
    (disjoint_union(path(3), path(1)), 0),
    (complete(1), 0),
])
def test_vertex_connectivity_examples(g, expected):
    assert vertex_connectivity(g) == expected
    assert vertex_connectivity_bruteforce(g) == expected


def test_vertex_connectivity_limits():
    with pytest.raises(InputError):
        vertex_connectivity(Graph.empty(0))
    with pytest.raises(UnsupportedError):
        vertex_connectivity_bruteforce(path(11))


def test_kappa_oracles_agree_exhaustive():
    for g in graphs_upto(7):
        k = vertex_connectivity(g)
        assert k == vertex_connectivity_bruteforce(g), g
        if g.n <= 6:
            assert k == brute_kappa(g)


def test_kappa_oracles_agree_random():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 10)
        p = rng.random()
        g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        assert vertex_connectivity(g) == vertex_connectivity_bruteforce(g), g


def test_kappa_at_most_min_degree():
    for g in graphs_upto(7):
        if g.n >= 2 and not g.is_complete():
            assert vertex_connectivity(g) <= min(g.degrees())


def test_kappa_zero_iff_disconnected():
    for g in graphs_upto(7):
        assert (vertex_connectivity(g) == 0) == (not is_connected(g) or g.n <= 1)


@pytest.mark.parametrize("g, expected", [
    (complement(cycle(6)), 4),
    (path(4), 2),
    (clique_with_pendants(3, [2, 2, 2]), 4),
    (Graph.empty(5), 0),
])
def test_tau_max_examples(g, expected):
    value, cover = tau_max(g)
    assert value == expected == len(cover)
    assert is_minimal_vertex_cover(g, cover)


def test_tau_max_matches_subset_oracle():
    for g in graphs_upto(6):
        value, cover = tau_max(g)
        assert value == brute_tau_max(g)
        assert is_minimal_vertex_cover(g, cover)


def test_tau_max_lower_bound():
    for g in graphs_upto(7):
        if not has_isolated_vertex(g):
            assert tau_max(g)[0] >= ceil_two_sqrt_minus_two(g.n)


def test_universal_vertex_reduction_examples():
    core, k = universal_vertex_reduction(complete(4))
    assert (core.n, k) == (1, 3)
    assert universal_vertex_reduction(path(4)) == (path(4), 0)
    cone = join(complete(1), path(4))
    core, k = universal_vertex_reduction(cone)
    assert (core, k) == (path(4), 1)
    assert vertex_connectivity_bruteforce(cone) == 2


def test_universal_vertex_reduction_contract():
    for g in graphs_upto(7):
        core, k = universal_vertex_reduction(g)
        assert vertex_connectivity_bruteforce(g) == vertex_connectivity_bruteforce(core) + k


def test_chordality_matches_brute_force_and_witnesses_verify():
    for g in graphs_upto(7):
        res = chordality(g)
        assert res.chordal == brute_is_chordal(g) == is_chordal(g)
        if res.chordal:
            order = res.elimination_order
            assert sorted(order) == list(range(g.n))
            for i, v in enumerate(order):
                later = [u for u in order[i + 1:] if g.has_edge(u, v)]
                assert all(g.has_edge(a, b) for a, b in combinations(later, 2))
            assert is_perfect_elimination_order(g, order)
        else:
            cyc = res.chordless_cycle
            k = len(cyc)
            assert k >= 4 and len(set(cyc)) == k
            for a, b in combinations(range(k), 2):
                consecutive = (b - a) in (1, k - 1)
                assert g.has_edge(cyc[a], cyc[b]) == consecutive


@pytest.mark.parametrize("g, expected", [(complete(4), 4.0), (path(2), 2.0),
                                         (disjoint_union(path(3), path(2)), 0.0)])
def test_algebraic_connectivity_examples(g, expected):
    assert algebraic_connectivity(g) == pytest.approx(expected, abs=1e-9)


def test_algebraic_connectivity_rejects_tiny():
    with pytest.raises(InputError):
        algebraic_connectivity(complete(1))


def test_jacobi_matches_numpy():
    for g in graphs_upto(7, min_n=2):
        ours = jacobi_eigenvalues(laplacian(g))
        assert np.allclose(ours, np.linalg.eigvalsh(laplacian(g)), atol=1e-9)
    rng = np.random.default_rng(0)
    for n in (12, 30, 60):
        a = rng.normal(size=(n, n))
        a = a + a.T
        assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-9)


def test_fiedler_inequality():
    for g in graphs_upto(7, min_n=2):
        if not g.is_complete():
            assert algebraic_connectivity(g) <= vertex_connectivity(g) + 1e-7


def test_invariant_record_consistency():
    for g in graphs_upto(6):
        r = invariant_record(g)
        if r.is_chordal_star:
            assert r.is_chordal and not r.has_universal_vertex
        assert r.kappa <= r.n - 1
        assert r.kappa_bound == (r.n - 1) - math.ceil(2 * math.sqrt(r.n) - 2)
        if r.alg_connectivity is not None:
            assert r.alg_connectivity >= 0
            assert (r.alg_connectivity < 1e-9) == (not is_connected(g))
