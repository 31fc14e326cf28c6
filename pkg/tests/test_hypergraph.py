import numpy as np
import pytest

from hgspectra import (
    LimitExceededError,
    ValidationError,
    build,
    degree,
    degrees,
    find_m_partition,
    induced_subhypergraph,
    is_complete,
    is_connected,
    is_nicely_connected,
    is_regular,
    structure_report,
    verify_witness,
)
from _support import (
    complete_3graph,
    loop_pair_multigraph,
    random_multigraph,
    random_simple,
    regular2_cycle,
    regular2_multigraph,
    single_edge_4graph,
    three_edge_path,
    triangle_2graph,
    two_edge_path,
)


# --- build ------------------------------------------------------------------


def test_build_simple_flag_set():
    H = three_edge_path()
    assert H.n == 7 and H.m == 3 and H.simple
    assert H.edge_lists() == [[1, 2, 3], [3, 4, 5], [5, 6, 7]]


def test_build_multigraph_flag_clear():
    H = loop_pair_multigraph()
    assert not H.simple
    assert H.edge_count == 2


def test_build_duplicate_edge_not_simple():
    H = build(4, 3, [(1, 2, 3), (1, 2, 3)])
    assert not H.simple


def test_build_index_out_of_range():
    with pytest.raises(ValidationError, match="outside"):
        build(3, 3, [(1, 2, 4)])


def test_build_wrong_cardinality():
    with pytest.raises(ValidationError, match="cardinality"):
        build(4, 3, [(1, 2)])


def test_build_bad_parameters():
    with pytest.raises(ValidationError):
        build(0, 3, [])
    with pytest.raises(ValidationError):
        build(3, 1, [])


# --- degree -----------------------------------------------------------------


def test_degree_complete_graph():
    H = complete_3graph(4)
    assert all(degree(H, v) == 3 for v in range(1, 5))


def test_degree_multigraph_counts_edges_once():
    H = loop_pair_multigraph()
    assert degree(H, 1) == 1  # the hyperloop edge contains 1 twice, counted once
    assert degree(H, 2) == 2


def test_degree_isolated_vertex():
    H = build(3, 2, [(1, 2)])
    assert degree(H, 3) == 0


def test_degree_out_of_range():
    with pytest.raises(ValidationError):
        degree(two_edge_path(), 6)


def test_degree_sum_identity_simple():
    rng = np.random.default_rng(0)
    for _ in range(25):
        H = random_simple(rng, 7, 3, int(rng.integers(0, 10)))
        assert sum(degrees(H)) == H.m * H.edge_count


# --- connectivity -----------------------------------------------------------


def test_connected_goldens():
    assert is_connected(three_edge_path())
    assert is_connected(build(6, 3, [(1, 2, 3), (4, 5, 6)])) is False
    assert is_connected(build(1, 2, []))


def test_isolated_vertex_disconnects():
    assert not is_connected(build(4, 3, [(1, 2, 3)]))


def test_connectivity_relabel_invariant():
    rng = np.random.default_rng(1)
    for _ in range(30):
        n = int(rng.integers(2, 9))
        H = random_multigraph(rng, n, 3, int(rng.integers(0, 7)))
        perm = rng.permutation(n) + 1
        relabeled = build(
            n, H.m, [[int(perm[v - 1]) for v in e] for e in H.edge_lists()]
        )
        assert is_connected(H) == is_connected(relabeled)


# --- nicely-connected -------------------------------------------------------


def test_two_edge_path_boundary_witness():
    # {1,2} meets edge 123 twice and edge 345 never, so the witness
    # condition holds with |V0| = 2 <= n - m + 1; the zero-padded top pair
    # of the induced subgraph on {3,4,5} realizes it as an eigenvector.
    H = two_edge_path()
    ok, witness = is_nicely_connected(H)
    assert not ok
    assert verify_witness(H, witness)
    assert verify_witness(H, (1, 2))
    assert verify_witness(H, (4, 5))


def test_single_full_edge_nicely_connected():
    # no subset of size <= n - m + 1 = 1 avoids meeting the edge exactly once
    H = build(3, 3, [(1, 2, 3)])
    ok, witness = is_nicely_connected(H)
    assert ok and witness is None


def test_regular2_cycle_not_nicely_connected():
    H = regular2_cycle()
    ok, witness = is_nicely_connected(H)
    assert not ok
    assert verify_witness(H, witness)
    # the canonical hand witness also verifies
    assert verify_witness(H, (4, 5))


def test_three_edge_path_not_nicely_connected():
    H = three_edge_path()
    ok, witness = is_nicely_connected(H)
    assert not ok
    assert verify_witness(H, witness)
    assert verify_witness(H, (1, 2))


def test_multigraphs_not_nicely_connected():
    for H in (loop_pair_multigraph(), regular2_multigraph()):
        ok, witness = is_nicely_connected(H)
        assert not ok
        assert verify_witness(H, witness)


def test_nicely_connected_implies_connected_random():
    # restricted to n >= m: with n < m a simple graph has no edges and the
    # size-bounded witness search is vacuous
    rng = np.random.default_rng(2)
    for _ in range(60):
        m = int(rng.integers(2, 4))
        n = int(rng.integers(m, 8))
        H = random_multigraph(rng, n, m, int(rng.integers(0, 6)))
        ok, witness = is_nicely_connected(H)
        if ok:
            assert is_connected(H)
        else:
            assert verify_witness(H, witness)


def test_witness_size_bound_for_simple_graphs():
    rng = np.random.default_rng(3)
    for _ in range(40):
        n = int(rng.integers(3, 8))
        H = random_simple(rng, n, 3, int(rng.integers(1, min(6, n * 2))))
        ok, witness = is_nicely_connected(H)
        if not ok:
            assert len(witness) <= H.n - H.m + 1


def test_nicely_connected_limit():
    H = build(30, 3, [(1, 2, 3)])
    with pytest.raises(LimitExceededError):
        is_nicely_connected(H)


def test_verify_witness_rejects_bad_sets():
    H = three_edge_path()
    assert not verify_witness(H, ())  # empty
    assert not verify_witness(H, range(1, 8))  # full vertex set
    assert not verify_witness(H, (3,))  # edge 123 meets it exactly once


# --- regularity and completeness --------------------------------------------


def test_is_regular_goldens():
    assert is_regular(complete_3graph(4)) == 3
    assert is_regular(two_edge_path()) is None  # middle vertex has degree 2
    assert is_regular(complete_3graph(5)) == 6  # each vertex in C(4,2) edges
    assert is_regular(regular2_multigraph()) == 2


def test_is_complete():
    assert is_complete(complete_3graph(4))
    assert not is_complete(three_edge_path())
    assert is_complete(build(3, 3, [(1, 2, 3)]))  # n = m, single full edge


def test_is_complete_rejects_multigraph():
    with pytest.raises(ValidationError):
        is_complete(loop_pair_multigraph())


# --- m-partition ------------------------------------------------------------


def test_partition_single_4edge():
    assert find_m_partition(single_edge_4graph()) == [[1], [2], [3], [4]]


def test_partition_complete_graph_absent():
    assert find_m_partition(complete_3graph(4)) is None


def test_partition_odd_cycle_absent():
    assert find_m_partition(triangle_2graph()) is None


def test_partition_validity_random():
    rng = np.random.default_rng(4)
    found = 0
    for _ in range(40):
        n = int(rng.integers(3, 8))
        H = random_simple(rng, n, 3, int(rng.integers(1, 5)))
        parts = find_m_partition(H)
        if parts is None:
            continue
        found += 1
        assert sorted(v for p in parts for v in p) == list(range(1, n + 1))
        lookup = {v: i for i, p in enumerate(parts) for v in p}
        for e in H.edge_lists():
            assert sorted(lookup[v] for v in e) == list(range(H.m))
    assert found > 0


def test_partition_budget():
    with pytest.raises(LimitExceededError, match="undecided"):
        find_m_partition(complete_3graph(6), node_budget=3)


def test_partition_rejects_multigraph():
    with pytest.raises(ValidationError):
        find_m_partition(loop_pair_multigraph())


# --- induced subhypergraph ---------------------------------------------------


def test_induced_three_edge_path():
    sub, new_to_old = induced_subhypergraph(three_edge_path(), (1, 2))
    assert sub.n == 5
    assert sub.edge_lists() == [[1, 2, 3], [3, 4, 5]]
    assert new_to_old == (3, 4, 5, 6, 7)


def test_induced_regular2_cycle():
    sub, new_to_old = induced_subhypergraph(regular2_cycle(), (4, 5))
    assert sub.edge_lists() == [[1, 2, 3], [2, 3, 4]]
    assert new_to_old == (1, 2, 3, 6)


def test_induced_empty_v0_is_identity():
    H = two_edge_path()
    sub, new_to_old = induced_subhypergraph(H, ())
    assert sub == H
    assert new_to_old == (1, 2, 3, 4, 5)


def test_induced_rejects_full_v0():
    with pytest.raises(ValidationError):
        induced_subhypergraph(two_edge_path(), (1, 2, 3, 4, 5))


# --- structure report ---------------------------------------------------------


def test_structure_report_golden():
    report, warnings = structure_report(regular2_cycle())
    assert not warnings
    assert report.connected
    assert report.nicely_connected is False
    assert verify_witness(regular2_cycle(), report.witness_V0)
    assert report.regular_degree == 2
    assert not report.complete
    assert report.degrees == [2, 2, 2, 2, 2, 2]
    assert report.max_degree == 2
    assert report.edge_count == 4


def test_structure_report_respects_limits():
    H = build(30, 3, [(1, 2, 3), (3, 4, 5)])
    report, warnings = structure_report(H)
    assert report.nicely_connected is None
    assert warnings
