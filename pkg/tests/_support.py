"""Shared test helpers: golden instances, random generators, and a dense
brute-force contraction oracle kept independent of the package's own
multiset-keyed evaluation path."""

import itertools
import math

import numpy as np

from hgspectra import Hypergraph, SymmetricTensor, build, is_connected, is_regular


# --- golden instances -------------------------------------------------------


def two_edge_path() -> Hypergraph:
    # 3-graph on 5 vertices, two edges sharing the middle vertex
    return build(5, 3, [(1, 2, 3), (3, 4, 5)])


def regular2_cycle() -> Hypergraph:
    # 2-regular connected 3-graph on 6 vertices
    return build(6, 3, [(1, 2, 3), (2, 3, 6), (1, 4, 5), (4, 5, 6)])


def three_edge_path() -> Hypergraph:
    # 3-graph on 7 vertices, three edges chained at vertices 3 and 5
    return build(7, 3, [(1, 2, 3), (3, 4, 5), (5, 6, 7)])


def loop_pair_multigraph() -> Hypergraph:
    # two-vertex 3-multigraph with one hyperloop edge
    return build(2, 3, [(1, 1, 2), (2, 2, 2)])


def regular2_multigraph() -> Hypergraph:
    # two-vertex 2-regular 3-multigraph, all edges hyperloops or near
    return build(2, 3, [(1, 1, 1), (1, 1, 2), (2, 2, 2)])


def single_edge_4graph() -> Hypergraph:
    # one 4-uniform edge covering all four vertices (1-regular, 4-partite)
    return build(4, 4, [(1, 2, 3, 4)])


def complete_3graph(n: int) -> Hypergraph:
    return build(n, 3, list(itertools.combinations(range(1, n + 1), 3)))


def triangle_2graph() -> Hypergraph:
    return build(3, 2, [(1, 2), (2, 3), (1, 3)])


# --- random instances -------------------------------------------------------


def random_multigraph(rng, n, m, edge_count) -> Hypergraph:
    edges = [sorted(rng.integers(1, n + 1, size=m).tolist()) for _ in range(edge_count)]
    return build(n, m, edges)


def random_simple(rng, n, m, edge_count) -> Hypergraph:
    combos = list(itertools.combinations(range(1, n + 1), m))
    picks = rng.choice(len(combos), size=min(edge_count, len(combos)), replace=False)
    return build(n, m, [combos[i] for i in picks])


def random_connected_regular(rng, m, max_n=10) -> Hypergraph:
    """Union of rotation orbits of random base edges: always regular,
    resampled until connected."""
    while True:
        n = int(rng.integers(m + 1, max_n + 1))
        edges = set()
        for _ in range(int(rng.integers(1, 3))):
            base = rng.choice(n, size=m, replace=False)
            for k in range(n):
                edges.add(tuple(sorted((int(v) + k) % n + 1 for v in base)))
        H = build(n, m, sorted(edges))
        if is_connected(H):
            assert is_regular(H) is not None
            return H


# --- dense brute-force oracle ----------------------------------------------


def dense_array(A: SymmetricTensor) -> np.ndarray:
    """Materialize all n^m positions from the multiset-keyed form."""
    T = np.zeros((A.n,) * A.m)
    for key, val in A.entries.items():
        for p in set(itertools.permutations(key)):
            T[p] = val
    return T


def dense_apply(A: SymmetricTensor, x) -> np.ndarray:
    T = dense_array(A)
    x = np.asarray(x, dtype=float)
    for _ in range(A.m - 1):
        T = T @ x
    return T


def dense_apply_matrix(A: SymmetricTensor, x) -> np.ndarray:
    T = dense_array(A)
    x = np.asarray(x, dtype=float)
    for _ in range(A.m - 2):
        T = T @ x
    return T


def dense_poly_eval(A: SymmetricTensor, x) -> float:
    return float(np.asarray(x, dtype=float) @ dense_apply(A, x))


def simple_graph_form(H: Hypergraph, x) -> float:
    """m * sum over edges of the edge monomial (simple graphs only)."""
    x = np.asarray(x, dtype=float)
    return H.m * sum(math.prod(x[v] for v in e) for e in H.edges)
