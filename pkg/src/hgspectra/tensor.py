"""Sparse symmetric tensors keyed by sorted index multisets.

An order-m dimension-n symmetric tensor stores one coefficient per sorted
index multiset; the symmetric expansion over permutations is implicit.
Dense vectors are plain 1-D numpy arrays (entry i belongs to vertex i+1).
Tensors are immutable after construction; contraction plans are cached
lazily and all operations are pure.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from typing import Iterable, Mapping, Optional

import numpy as np
import scipy.sparse
import scipy.sparse.csgraph

from .errors import LimitExceededError, ValidationError
from .hypergraph import (
    Hypergraph,
    _edge_masks,
    _mask_to_vertices,
    _smallest_unblocked_subset,
)

__all__ = [
    "SymmetricTensor",
    "adjacency_tensor",
    "unit_tensor",
    "apply",
    "apply_matrix",
    "poly_eval",
    "power_vector",
    "representation_matrix",
    "is_weakly_irreducible",
    "is_reducible",
    "perturb",
]

# perturb() densifies; cap the number of positions it may touch.
DENSE_ENTRY_LIMIT = 10_000_000


def _arrangements(ms: Iterable[int], length: int) -> int:
    """Number of distinct orderings of a multiset of the given length."""
    k = math.factorial(length)
    for c in Counter(ms).values():
        k //= math.factorial(c)
    return k


class SymmetricTensor:
    """Order-m, dimension-n real symmetric tensor in multiset-keyed form.

    ``entries`` maps each sorted length-m index tuple (0-based) to the
    coefficient shared by all its permutations. Zero coefficients are
    dropped at construction.
    """

    __slots__ = ("m", "n", "entries", "_vplan", "_mplan")

    def __init__(self, m: int, n: int, entries: Mapping[tuple[int, ...], float]):
        if m < 2:
            raise ValidationError(f"tensor order must be >= 2, got {m}")
        if n < 1:
            raise ValidationError(f"tensor dimension must be >= 1, got {n}")
        clean: dict[tuple[int, ...], float] = {}
        for key, value in entries.items():
            k = tuple(key)
            if len(k) != m:
                raise ValidationError(f"index multiset {k} has length != {m}")
            if tuple(sorted(k)) != k:
                raise ValidationError(f"index multiset {k} is not sorted")
            if not all(0 <= i < n for i in k):
                raise ValidationError(f"index multiset {k} outside 0..{n - 1}")
            v = float(value)
            if not math.isfinite(v):
                raise ValidationError(f"non-finite coefficient at {k}")
            if v != 0.0:
                clean[k] = v
        self.m = m
        self.n = n
        self.entries = dict(sorted(clean.items()))
        self._vplan = None
        self._mplan = None

    def coefficient(self, *indices: int) -> float:
        """Entry value at 1-based indices, in any order."""
        if len(indices) != self.m:
            raise ValidationError(f"expected {self.m} indices, got {len(indices)}")
        return self.entries.get(tuple(sorted(i - 1 for i in indices)), 0.0)

    @property
    def nonneg(self) -> bool:
        return all(v >= 0.0 for v in self.entries.values())

    def abs_entry_sum(self) -> float:
        """Sum of |a| over all n^m positions of the symmetric expansion."""
        return sum(
            abs(v) * _arrangements(k, self.m) for k, v in self.entries.items()
        )

    def abs_row_sums(self) -> np.ndarray:
        """Per-index sum of |a| over all positions with that first index."""
        tgt, coef, _ = self._vector_plan()
        return np.bincount(tgt, weights=np.abs(coef), minlength=self.n)

    def _vector_plan(self):
        # rows: coordinate i of the contraction gets coef * prod(x[idx]),
        # one row per (key, distinct index in key).
        if self._vplan is None:
            tgt, coef, idx = [], [], []
            for key, a in self.entries.items():
                for i in dict.fromkeys(key):
                    rest = list(key)
                    rest.remove(i)
                    tgt.append(i)
                    coef.append(a * _arrangements(rest, self.m - 1))
                    idx.append(rest)
            self._vplan = (
                np.asarray(tgt, dtype=np.intp),
                np.asarray(coef, dtype=float),
                np.asarray(idx, dtype=np.intp).reshape(len(tgt), self.m - 1),
            )
        return self._vplan

    def _matrix_plan(self):
        # rows: entry (i, j) of the two-free-index contraction.
        if self._mplan is None:
            ti, tj, coef, idx = [], [], [], []
            for key, a in self.entries.items():
                for i in dict.fromkeys(key):
                    rest = list(key)
                    rest.remove(i)
                    for j in dict.fromkeys(rest):
                        rest2 = list(rest)
                        rest2.remove(j)
                        ti.append(i)
                        tj.append(j)
                        coef.append(a * _arrangements(rest2, self.m - 2))
                        idx.append(rest2)
            self._mplan = (
                np.asarray(ti, dtype=np.intp),
                np.asarray(tj, dtype=np.intp),
                np.asarray(coef, dtype=float),
                np.asarray(idx, dtype=np.intp).reshape(len(ti), max(self.m - 2, 0)),
            )
        return self._mplan

    def __repr__(self) -> str:
        return (
            f"SymmetricTensor(m={self.m}, n={self.n}, "
            f"nnz_multisets={len(self.entries)})"
        )


def adjacency_tensor(H: Hypergraph) -> SymmetricTensor:
    """Adjacency tensor of a multigraph: 1/(m-1)! per edge occurrence.

    Index tuples realizing an edge carry mult(e)/(m-1)!, so repeated edges
    accumulate additively.
    """
    fact = math.factorial(H.m - 1)
    counts = Counter(H.edges)
    return SymmetricTensor(
        H.m, H.n, {e: c / fact for e, c in counts.items()}
    )


def unit_tensor(m: int, n: int) -> SymmetricTensor:
    """Dense all-ones tensor (every position 1)."""
    if n**m > DENSE_ENTRY_LIMIT:
        raise LimitExceededError(
            f"dense tensor needs {n**m} positions; limit is {DENSE_ENTRY_LIMIT}"
        )
    keys = itertools.combinations_with_replacement(range(n), m)
    return SymmetricTensor(m, n, {k: 1.0 for k in keys})


def _check_dim(A: SymmetricTensor, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (A.n,):
        raise ValidationError(f"vector shape {x.shape} != ({A.n},)")
    return x


def apply(A: SymmetricTensor, x: np.ndarray) -> np.ndarray:
    """Contract all but one index: coordinate i is sum a_{i i2..im} x_{i2}..x_{im}.

    Computed multiset-wise: each key contributes, to every distinct index
    it contains, the coefficient times the number of orderings of the
    remaining indices times their monomial.
    """
    x = _check_dim(A, x)
    tgt, coef, idx = A._vector_plan()
    if tgt.size == 0:
        return np.zeros(A.n)
    return np.bincount(tgt, weights=coef * np.prod(x[idx], axis=1), minlength=A.n)


def apply_matrix(A: SymmetricTensor, x: np.ndarray) -> np.ndarray:
    """Contract all but two indices: entry (i, j) is sum a_{i j i3..im} x_{i3}..x_{im}.

    Satisfies apply_matrix(A, x) @ x == apply(A, x); (m-1) times this matrix
    is the Jacobian of apply at x.
    """
    x = _check_dim(A, x)
    ti, tj, coef, idx = A._matrix_plan()
    M = np.zeros((A.n, A.n))
    if ti.size:
        vals = coef * np.prod(x[idx], axis=1) if idx.shape[1] else coef
        np.add.at(M, (ti, tj), vals)
    return M


def poly_eval(A: SymmetricTensor, x: np.ndarray) -> float:
    """The degree-m form A x^m = <x, apply(A, x)>."""
    x = _check_dim(A, x)
    return float(x @ apply(A, x))


def power_vector(x: np.ndarray, p: int) -> np.ndarray:
    """Coordinate-wise p-th power x^[p]."""
    return np.asarray(x, dtype=float) ** p


def representation_matrix(A: SymmetricTensor) -> np.ndarray:
    """Nonnegative matrix with m_ij = sum of a_{i i2..im} over tails containing j.

    Every ordering of a key's tail contains all of the tail's distinct
    indices, so each (key, i, j-in-tail) contributes the full ordering
    count. Raises ValidationError on tensors with negative entries.
    """
    if not A.nonneg:
        raise ValidationError("representation matrix requires a nonnegative tensor")
    M = np.zeros((A.n, A.n))
    for key, a in A.entries.items():
        for i in dict.fromkeys(key):
            rest = list(key)
            rest.remove(i)
            weight = a * _arrangements(rest, A.m - 1)
            for j in dict.fromkeys(rest):
                M[i, j] += weight
    return M


def is_weakly_irreducible(A: SymmetricTensor) -> bool:
    """Strong connectivity of the directed graph on positive representation entries."""
    M = representation_matrix(A)
    graph = scipy.sparse.csr_matrix(M > 0)
    ncomp, _ = scipy.sparse.csgraph.connected_components(
        graph, directed=True, connection="strong"
    )
    return ncomp == 1


def is_reducible(
    A: SymmetricTensor, max_n: int = 20
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Exhaustive test for an index set I with a_{i1..im} = 0 whenever
    i1 is in I and i2..im all avoid I.

    Returns (True, witness) with the smallest such I (1-based), or
    (False, None). Raises LimitExceededError when n > max_n.
    """
    if A.n > max_n:
        raise LimitExceededError(
            f"reducibility search needs 2^{A.n} subsets; limit is n <= {max_n}"
        )
    # A key voids candidate I exactly when one of its entries' positions has
    # first index in I and the rest outside: one slot of the multiset in I.
    singles, multis = _edge_masks(list(A.entries.keys()))
    mask = _smallest_unblocked_subset(singles, multis, A.n, A.n - 1)
    if mask is None:
        return False, None
    return True, _mask_to_vertices(mask)


def perturb(A: SymmetricTensor, mu: float) -> SymmetricTensor:
    """Add mu to every position (dense result; used to make a tensor positive)."""
    if mu <= 0:
        raise ValidationError(f"perturbation must be positive, got {mu}")
    if A.n**A.m > DENSE_ENTRY_LIMIT:
        raise LimitExceededError(
            f"dense perturbation needs {A.n**A.m} positions; "
            f"limit is {DENSE_ENTRY_LIMIT}"
        )
    entries = {
        k: A.entries.get(k, 0.0) + mu
        for k in itertools.combinations_with_replacement(range(A.n), A.m)
    }
    return SymmetricTensor(A.m, A.n, entries)
