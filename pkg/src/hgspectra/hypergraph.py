"""Uniform multi-hypergraphs and their structural predicates.

Vertices are numbered 1..n in every public interface; edges are multisets
of vertices (repeats allowed in a multigraph). Internally everything is
0-based. A hypergraph is immutable after construction and all predicates
are pure, so they are safe to evaluate concurrently.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import LimitExceededError, ValidationError

__all__ = [
    "Hypergraph",
    "StructureReport",
    "build",
    "degree",
    "degrees",
    "is_connected",
    "is_nicely_connected",
    "verify_witness",
    "is_regular",
    "is_complete",
    "find_m_partition",
    "induced_subhypergraph",
    "structure_report",
]

# Exhaustive witness search is exponential in n; hard default cap.
DEFAULT_WITNESS_LIMIT = 24
DEFAULT_PARTITION_BUDGET = 500_000


@dataclass(frozen=True)
class Hypergraph:
    """An m-uniform multi-hypergraph on vertices 1..n.

    ``edges`` holds each edge as a sorted 0-based index tuple, one entry
    per occurrence (repeated edges appear repeatedly). ``simple`` is true
    iff no edge repeats a vertex and no edge occurs twice.
    """

    n: int
    m: int
    edges: tuple[tuple[int, ...], ...]
    simple: bool

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_lists(self) -> list[list[int]]:
        """Edges as 1-based vertex lists (external convention)."""
        return [[v + 1 for v in e] for e in self.edges]

    def __repr__(self) -> str:
        return (
            f"Hypergraph(n={self.n}, m={self.m}, "
            f"edges={self.edge_lists()}, simple={self.simple})"
        )


def build(n: int, m: int, edge_list: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and assemble a hypergraph from 1-based edge multisets.

    Raises ValidationError for n < 1, m < 2, an edge of cardinality != m,
    or a vertex index outside 1..n.
    """
    if n < 1:
        raise ValidationError(f"vertex count must be >= 1, got {n}")
    if m < 2:
        raise ValidationError(f"uniformity order must be >= 2, got {m}")
    edges = []
    for pos, raw in enumerate(edge_list):
        e = sorted(raw)
        if len(e) != m:
            raise ValidationError(
                f"edge #{pos + 1} has cardinality {len(e)}, expected {m}: {list(raw)}"
            )
        for v in e:
            if not 1 <= v <= n:
                raise ValidationError(
                    f"edge #{pos + 1} contains vertex {v} outside 1..{n}"
                )
        edges.append(tuple(v - 1 for v in e))
    simple = all(len(set(e)) == m for e in edges) and len(set(edges)) == len(edges)
    return Hypergraph(n=n, m=m, edges=tuple(edges), simple=simple)


def degree(H: Hypergraph, v: int) -> int:
    """Number of edges containing vertex v (1-based), repeats counted once per edge."""
    if not 1 <= v <= H.n:
        raise ValidationError(f"vertex {v} outside 1..{H.n}")
    v0 = v - 1
    return sum(1 for e in H.edges if v0 in e)


def degrees(H: Hypergraph) -> list[int]:
    """Degree of every vertex, index i holding vertex i+1."""
    d = [0] * H.n
    for e in H.edges:
        for v in set(e):
            d[v] += 1
    return d


def is_connected(H: Hypergraph) -> bool:
    """Chain-connectivity, computed as reachability through shared edges."""
    parent = list(range(H.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in H.edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    return len({find(v) for v in range(H.n)}) == 1


def _edge_masks(edges: Sequence[tuple[int, ...]]) -> tuple[np.ndarray, np.ndarray]:
    # Per edge: bitmask of vertices appearing exactly once / more than once.
    singles, multis = [], []
    for e in edges:
        cnt = Counter(e)
        s = mlt = 0
        for v, c in cnt.items():
            if c == 1:
                s |= 1 << v
            else:
                mlt |= 1 << v
        singles.append(s)
        multis.append(mlt)
    return np.asarray(singles, dtype=np.int64), np.asarray(multis, dtype=np.int64)


def _smallest_unblocked_subset(
    singles: np.ndarray, multis: np.ndarray, n: int, max_size: int
) -> Optional[int]:
    """Smallest vertex set (as bitmask) no edge intersects in exactly one slot.

    Returns the minimum-popcount (then minimum-mask) candidate among the
    nonempty subsets of size <= max_size, or None. Scans all 2^n - 1 masks
    in chunks, so callers must cap n.
    """
    if max_size < 1:
        return None
    best_size, best_mask = n + 1, None
    total = 1 << n
    chunk = 1 << 20
    for lo in range(1, total, chunk):
        masks = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        sizes = np.bitwise_count(masks)
        ok = sizes <= min(max_size, best_size)
        for s, mlt in zip(singles, multis):
            if not ok.any():
                break
            blocked = (np.bitwise_count(masks & s) == 1) & ((masks & mlt) == 0)
            ok &= ~blocked
        if ok.any():
            cand_sizes = np.where(ok, sizes, n + 1)
            k = int(np.argmin(cand_sizes))  # ties resolved to smallest mask
            if cand_sizes[k] < best_size:
                best_size, best_mask = int(cand_sizes[k]), int(masks[k])
                if best_size == 1:
                    break
    return best_mask


def _mask_to_vertices(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def is_nicely_connected(
    H: Hypergraph, limit_n: int = DEFAULT_WITNESS_LIMIT
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Decide nicely-connectedness; on failure also return a witness set.

    A witness V0 is a nonempty proper vertex subset such that no edge has
    exactly one vertex (counted with multiplicity) inside V0. For simple
    graphs the witness is additionally required to satisfy
    |V0| <= n - m + 1. The search is exhaustive over subsets. Degenerate
    corner: an edgeless simple graph on n < m vertices has no admissible
    subsets at all and reports nicely-connected vacuously.

    Returns (True, None) or (False, witness) with the witness 1-based.
    Raises LimitExceededError when n > limit_n.
    """
    if H.n > limit_n:
        raise LimitExceededError(
            f"nicely-connected search needs 2^{H.n} subsets; limit is n <= {limit_n}"
        )
    max_size = H.n - H.m + 1 if H.simple else H.n - 1
    max_size = min(max_size, H.n - 1)
    singles, multis = _edge_masks(H.edges)
    mask = _smallest_unblocked_subset(singles, multis, H.n, max_size)
    if mask is None:
        return True, None
    return False, _mask_to_vertices(mask)


def verify_witness(H: Hypergraph, V0: Iterable[int]) -> bool:
    """Re-check a claimed not-nicely-connected witness directly over all edges."""
    vs = {v - 1 for v in V0}
    if not vs or not vs.issubset(range(H.n)) or len(vs) == H.n:
        return False
    if H.simple and len(vs) > H.n - H.m + 1:
        return False
    for e in H.edges:
        if sum(1 for v in e if v in vs) == 1:
            return False
    return True


def is_regular(H: Hypergraph) -> Optional[int]:
    """The common degree r when all vertices agree, else None."""
    d = degrees(H)
    return d[0] if len(set(d)) == 1 else None


def is_complete(H: Hypergraph) -> bool:
    """Whether every m-subset of the vertices is an edge (simple graphs only)."""
    if not H.simple:
        raise ValidationError("completeness is defined for simple m-graphs only")
    return len(H.edges) == math.comb(H.n, H.m)


def find_m_partition(
    H: Hypergraph, node_budget: int = DEFAULT_PARTITION_BUDGET
) -> Optional[list[list[int]]]:
    """Search for a partition into m parts met exactly once by every edge.

    Backtracking over vertex->part assignments; since each edge has m
    distinct vertices, the constraint is that no edge sees the same part
    twice. Returns m vertex lists (1-based, parts may be empty) or None
    when no partition exists. Raises LimitExceededError("undecided...")
    if the search exceeds node_budget nodes, and ValidationError on
    multigraphs.
    """
    if not H.simple:
        raise ValidationError("m-partiteness is defined for simple m-graphs only")
    n, m = H.n, H.m
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in H.edges:
        for v in e:
            incident[v].append(e)
    color = [-1] * n
    nodes = 0

    def assign(v: int) -> bool:
        nonlocal nodes
        if v == n:
            return True
        for c in range(m):
            nodes += 1
            if nodes > node_budget:
                raise LimitExceededError(
                    f"m-partition search undecided at budget ({node_budget} nodes)"
                )
            if any(color[u] == c for e in incident[v] for u in e if u != v):
                continue
            color[v] = c
            if assign(v + 1):
                return True
            color[v] = -1
        return False

    if not assign(0):
        return None
    parts: list[list[int]] = [[] for _ in range(m)]
    for v, c in enumerate(color):
        parts[c].append(v + 1)
    return parts


def induced_subhypergraph(
    H: Hypergraph, V0: Iterable[int]
) -> tuple[Hypergraph, tuple[int, ...]]:
    """Remove V0 (1-based) and keep only edges fully inside the remainder.

    Returns the relabeled hypergraph together with the map from new to
    original vertex numbers (entry k-1 is the original number of new
    vertex k). Raises ValidationError when V0 covers all vertices or
    contains indices outside 1..n.
    """
    vs = {v - 1 for v in V0}
    if not vs.issubset(range(H.n)):
        raise ValidationError("V0 contains vertices outside 1..n")
    if len(vs) == H.n:
        raise ValidationError("V0 must be a proper subset of the vertices")
    if not vs:
        return H, tuple(range(1, H.n + 1))
    keep = [v for v in range(H.n) if v not in vs]
    relabel = {old: new for new, old in enumerate(keep)}
    new_edges = [
        tuple(relabel[v] for v in e) for e in H.edges if vs.isdisjoint(e)
    ]
    simple = (
        all(len(set(e)) == H.m for e in new_edges)
        and len(set(new_edges)) == len(new_edges)
    )
    sub = Hypergraph(n=len(keep), m=H.m, edges=tuple(new_edges), simple=simple)
    return sub, tuple(old + 1 for old in keep)


@dataclass(frozen=True)
class StructureReport:
    """Summary of every structural predicate of one hypergraph.

    ``nicely_connected`` and ``partite`` are None when their exhaustive
    search was skipped or aborted at its size limit. ``complete`` and
    ``partite`` apply to simple graphs; a multigraph reports complete=False
    and partite=None.
    """

    connected: bool
    nicely_connected: Optional[bool]
    witness_V0: Optional[tuple[int, ...]]
    regular_degree: Optional[int]
    complete: bool
    partite: Optional[bool]
    partition: Optional[list[list[int]]]
    degrees: list[int]
    max_degree: int
    edge_count: int


def structure_report(
    H: Hypergraph,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    partition_budget: int = DEFAULT_PARTITION_BUDGET,
) -> tuple[StructureReport, list[str]]:
    """Run all predicates, degrading to None (plus a warning) at size caps."""
    warnings: list[str] = []
    nicely: Optional[bool] = None
    witness: Optional[tuple[int, ...]] = None
    try:
        nicely, witness = is_nicely_connected(H, limit_n=witness_limit)
    except LimitExceededError as exc:
        warnings.append(str(exc))
    partite: Optional[bool] = None
    partition: Optional[list[list[int]]] = None
    if H.simple:
        try:
            partition = find_m_partition(H, node_budget=partition_budget)
            partite = partition is not None
        except LimitExceededError as exc:
            warnings.append(str(exc))
    degs = degrees(H)
    report = StructureReport(
        connected=is_connected(H),
        nicely_connected=nicely,
        witness_V0=witness,
        regular_degree=is_regular(H),
        complete=is_complete(H) if H.simple else False,
        partite=partite,
        partition=partition,
        degrees=degs,
        max_degree=max(degs, default=0),
        edge_count=H.edge_count,
    )
    return report, warnings
