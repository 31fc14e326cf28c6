"""Eigensolvers, bounds, and certification for adjacency tensors.

Covers the bracketed power iteration for the nonnegative H-spectral
radius (NQZ), the shifted symmetric higher-order power method (SS-HOPM)
for Z-eigenpairs, closed forms for regular graphs, Z-spectral bounds,
eigenvector positivity classification with combinatorial witnesses, a
multi-start damped-Newton oracle for the full real Z-spectrum at desk
scale, and spectrum negation symmetry.

Every returned eigenpair carries a residual recomputed from its defining
equation; ``certify`` re-checks pairs independently of any solver loop.
Multi-start drivers are deterministic for a fixed seed: candidate merges
sort by eigenvalue (descending, with near-ties broken by lexicographically
smallest eigenvector), so results do not depend on evaluation order.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    CertificationError,
    LimitExceededError,
    SolverError,
    ValidationError,
)
from .hypergraph import (
    Hypergraph,
    degrees,
    induced_subhypergraph,
    is_regular,
    verify_witness,
)
from .tensor import (
    SymmetricTensor,
    adjacency_tensor,
    apply,
    apply_matrix,
    is_weakly_irreducible,
    perturb,
    poly_eval,
    power_vector,
)

__all__ = [
    "EigenPair",
    "NqzState",
    "NqzResult",
    "SshopmConfig",
    "SshopmTrace",
    "BoundsReport",
    "ZStarResult",
    "PositivityReport",
    "SymmetrySummary",
    "h_residual",
    "z_residual",
    "certify",
    "default_shift",
    "adaptive_shift",
    "nqz_h_spectral_radius",
    "sshopm",
    "z_spectral_radius",
    "z_bounds",
    "closed_form_regular_z",
    "classify_positivity",
    "embed_z_eigenpair",
    "brute_force_z_oracle",
    "distinct_eigenvalues",
    "spectrum_symmetry_check",
    "negate_eigenpair",
]

RESIDUAL_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class EigenPair:
    """A real eigenpair with its defining-equation residual.

    kind "Z": A x^{m-1} = value * x on the unit 2-norm sphere.
    kind "H": A x^{m-1} = value * x^[m-1] with sum |x_i|^m = 1.
    """

    kind: str
    value: float
    vector: np.ndarray
    residual: float

    def __post_init__(self):
        if self.kind not in ("H", "Z"):
            raise ValidationError(f"eigenpair kind must be 'H' or 'Z', got {self.kind!r}")


def z_residual(A: SymmetricTensor, value: float, x: np.ndarray) -> float:
    """2-norm of A x^{m-1} - value * x."""
    x = np.asarray(x, dtype=float)
    return float(np.linalg.norm(apply(A, x) - value * x))


def h_residual(A: SymmetricTensor, value: float, x: np.ndarray) -> float:
    """2-norm of A x^{m-1} - value * x^[m-1]."""
    x = np.asarray(x, dtype=float)
    return float(np.linalg.norm(apply(A, x) - value * power_vector(x, A.m - 1)))


def certify(
    A: SymmetricTensor,
    pair: EigenPair,
    residual_tol: float = RESIDUAL_TOL,
    norm_tol: float = 1e-10,
) -> bool:
    """Recompute a pair's residual and normalization from scratch."""
    x = pair.vector
    if pair.kind == "Z":
        ok_norm = abs(float(x @ x) - 1.0) <= norm_tol
        res = z_residual(A, pair.value, x)
    else:
        ok_norm = abs(float(np.sum(np.abs(x) ** A.m)) - 1.0) <= norm_tol
        res = h_residual(A, pair.value, x)
    return ok_norm and res <= residual_tol


# ---------------------------------------------------------------------------
# NQZ: bracketed power iteration for the H-spectral radius


@dataclass(frozen=True)
class NqzState:
    """One power-iteration step: iterate, contraction, Rayleigh brackets."""

    k: int
    x: np.ndarray
    y: np.ndarray
    lower: float
    upper: float


@dataclass(frozen=True)
class NqzResult:
    """Outcome of the perturbation schedule plus the refined eigenpair.

    ``rho`` is the spectral-radius estimate for the unperturbed tensor;
    ``trace`` is the state history of the smallest-perturbation run, whose
    final brackets enclose the spectral radius of that perturbed tensor.
    """

    rho: float
    pair: EigenPair
    trace: list[NqzState]
    all_traces: tuple[list[NqzState], ...]
    mu_schedule: tuple[float, ...]
    mu_estimates: tuple[float, ...]
    brackets: tuple[float, float]
    converged: bool
    polished: bool


def _nqz_iterate(
    A: SymmetricTensor, tol: float, max_iter: int
) -> tuple[list[NqzState], bool]:
    m = A.m
    x = np.ones(A.n)
    x /= np.sum(x**m) ** (1.0 / m)
    y = apply(A, x)
    if not np.any(y > 0):
        raise SolverError("contraction of the all-ones vector vanished")
    states: list[NqzState] = []
    for k in range(1, max_iter + 1):
        x = y ** (1.0 / (m - 1))
        x /= np.sum(x**m) ** (1.0 / m)
        y = apply(A, x)
        ratios = y / x ** (m - 1)
        state = NqzState(k, x.copy(), y.copy(), float(ratios.min()), float(ratios.max()))
        states.append(state)
        if state.upper - state.lower <= tol:
            return states, True
    return states, False


def _newton_h_polish(
    A: SymmetricTensor,
    value: float,
    x0: np.ndarray,
    tol: float = 1e-12,
    max_iter: int = 50,
) -> Optional[tuple[float, np.ndarray]]:
    """Damped Newton on {A x^{m-1} = lam x^[m-1], sum x^m = 1} from a good guess."""
    n, m = A.n, A.m
    z = np.concatenate([x0, [value]])

    def resid(zv):
        xv, lv = zv[:n], zv[n]
        return np.concatenate(
            [apply(A, xv) - lv * xv ** (m - 1), [np.sum(xv**m) - 1.0]]
        )

    F = resid(z)
    for _ in range(max_iter):
        nF = float(np.linalg.norm(F))
        if nF <= tol:
            break
        x, lam = z[:n], z[n]
        J = np.zeros((n + 1, n + 1))
        J[:n, :n] = (m - 1) * (apply_matrix(A, x) - lam * np.diag(x ** (m - 2)))
        J[:n, n] = -(x ** (m - 1))
        J[n, :n] = m * x ** (m - 1)
        step = np.linalg.lstsq(J, -F, rcond=None)[0]
        t = 1.0
        for _ in range(20):
            z_new = z + t * step
            F_new = resid(z_new)
            if np.linalg.norm(F_new) < nF:
                break
            t /= 2
        else:
            return None
        z, F = z_new, F_new
    if np.linalg.norm(F) > 1e-10:
        return None
    x, lam = z[:n], z[n]
    if np.any(x < -1e-10):
        return None
    x = np.abs(x)
    x /= np.sum(x**m) ** (1.0 / m)
    return float(lam), x


def nqz_h_spectral_radius(
    A: SymmetricTensor,
    mu: float = 1e-5,
    tol: float = 1e-9,
    max_iter: int = 10000,
) -> NqzResult:
    """H-spectral radius of a nonnegative tensor by bracketed power iteration.

    Runs the iteration on A + mu_i * (all-ones tensor) for
    mu_i in {100 mu, 10 mu, mu} (the positive perturbations make the
    iteration convergent regardless of A's zero pattern), takes the final
    bracket midpoint of each run, and extrapolates the two smallest
    perturbations linearly to zero. The eigenpair is then refined on the
    unperturbed tensor by Newton; if refinement fails, the smallest-
    perturbation iterate is returned as-is (its residual exposes the bias).

    With mu = 0 the iteration runs directly on A, which requires A to be
    weakly irreducible and may still fail to converge on periodic
    structures; the converged flag reports this.
    """
    if not A.nonneg:
        raise ValidationError("spectral radius iteration requires a nonnegative tensor")
    if not A.entries:
        raise SolverError("zero tensor has no spectral radius certificate")
    if mu < 0:
        raise ValidationError(f"perturbation must be >= 0, got {mu}")
    if mu == 0 and not is_weakly_irreducible(A):
        raise ValidationError("mu > 0 is required when the tensor is not weakly irreducible")

    schedule = (100 * mu, 10 * mu, mu) if mu > 0 else (0.0,)
    traces: list[list[NqzState]] = []
    flags: list[bool] = []
    for mu_i in schedule:
        B = perturb(A, mu_i) if mu_i > 0 else A
        states, ok = _nqz_iterate(B, tol, max_iter)
        traces.append(states)
        flags.append(ok)

    mids = tuple((s[-1].lower + s[-1].upper) / 2 for s in traces)
    if len(mids) >= 2:
        # linear model rho(mu) = a + b mu through the two smallest mu
        mu1, mu2 = schedule[-2], schedule[-1]
        r1, r2 = mids[-2], mids[-1]
        rho = r2 - (r1 - r2) * mu2 / (mu1 - mu2)
    else:
        rho = mids[-1]

    final = traces[-1]
    x_seed = final[-1].x
    polished = _newton_h_polish(A, rho, x_seed)
    if polished is not None and abs(polished[0] - rho) <= max(1e-4, 100 * tol):
        value, x = polished
        rho = value
        was_polished = True
    else:
        value, x = rho, x_seed
        was_polished = False
    pair = EigenPair("H", value, x, h_residual(A, value, x))
    return NqzResult(
        rho=rho,
        pair=pair,
        trace=final,
        all_traces=tuple(traces),
        mu_schedule=schedule,
        mu_estimates=mids,
        brackets=(final[-1].lower, final[-1].upper),
        converged=all(flags),
        polished=was_polished,
    )


# ---------------------------------------------------------------------------
# SS-HOPM: shifted symmetric power iteration for Z-eigenpairs


@dataclass
class SshopmConfig:
    """Shift, start, and stopping control for the shifted power iteration.

    shift None selects the convexity-safe ceiling ceil(m * sum of all
    |entries|); ``adaptive_shift`` offers a smaller heuristic. The start
    must be nonnegative and nonzero (None means all-ones).
    """

    shift: Optional[float] = None
    start: Optional[np.ndarray] = None
    tol: float = 1e-10
    residual_tol: float = RESIDUAL_TOL
    max_iter: int = 10000


@dataclass
class SshopmTrace:
    lambdas: list[float] = field(default_factory=list)
    iterations: int = 0
    converged: bool = False


def default_shift(A: SymmetricTensor) -> float:
    """Ceiling shift guaranteeing monotone convergence: ceil(m * sum |a|)."""
    return float(math.ceil(A.m * A.abs_entry_sum()))


def adaptive_shift(A: SymmetricTensor) -> float:
    """Smaller convexity bound from row sums of the two-index contraction.

    On the unit sphere the Hessian of the degree-m form is bounded by
    (m-1) times the largest absolute row sum of the all-ones two-index
    contraction; over-shifting only slows convergence, so this is the
    tighter practical choice.
    """
    absA = SymmetricTensor(A.m, A.n, {k: abs(v) for k, v in A.entries.items()})
    M = apply_matrix(absA, np.ones(A.n))
    return float(math.ceil((A.m - 1) * M.sum(axis=1).max()) + 1.0)


def sshopm(
    A: SymmetricTensor, config: Optional[SshopmConfig] = None, **kwargs
) -> tuple[EigenPair, SshopmTrace]:
    """One shifted-power-iteration run from one start.

    Iterates y = A x^{m-1} + shift * x, x = y/|y|, lam = A x^m; stops when
    the eigenvalue settles within tol and the residual is below
    residual_tol. Non-convergence is reported on the trace, not raised;
    a vanishing y (degenerate shift) raises SolverError.
    """
    cfg = config if config is not None else SshopmConfig(**kwargs)
    x = np.ones(A.n) if cfg.start is None else np.asarray(cfg.start, dtype=float)
    if x.shape != (A.n,):
        raise ValidationError(f"start shape {x.shape} != ({A.n},)")
    if np.any(x < 0) or not np.any(x):
        raise ValidationError("start must be nonnegative and nonzero")
    alpha = default_shift(A) if cfg.shift is None else float(cfg.shift)

    x = x / np.linalg.norm(x)
    w = apply(A, x)
    lam = float(x @ w)
    trace = SshopmTrace(lambdas=[lam])
    res = float(np.linalg.norm(w - lam * x))
    for k in range(1, cfg.max_iter + 1):
        y = w + alpha * x
        ny = float(np.linalg.norm(y))
        if ny == 0.0:
            raise SolverError("shifted iterate vanished (degenerate shift)")
        x = y / ny
        w = apply(A, x)
        lam_new = float(x @ w)
        res = float(np.linalg.norm(w - lam_new * x))
        trace.lambdas.append(lam_new)
        trace.iterations = k
        if abs(lam_new - lam) <= cfg.tol and res <= cfg.residual_tol:
            trace.converged = True
            lam = lam_new
            break
        lam = lam_new
    pair = EigenPair("Z", lam, x, z_residual(A, lam, x))
    return pair, trace


# ---------------------------------------------------------------------------
# Z-spectral radius: bounds, multi-start driver, closed forms


@dataclass(frozen=True)
class BoundsReport:
    """Bracketing bounds for the largest Z-eigenvalue of an adjacency tensor.

    lower_degree_sum is sum(deg) / (n^{m/2} (m-1)!); lower_uniform is the
    degree-m form evaluated at the uniform unit vector, which is sharper by
    a factor (m-1)! on multigraph-free instances and never smaller. Uppers
    are D sqrt(n) (D the maximum degree) and the edge count.
    """

    lower_degree_sum: float
    lower_uniform: float
    upper_degree: float
    upper_edges: float

    @property
    def min_upper(self) -> float:
        return min(self.upper_degree, self.upper_edges)


def z_bounds(H: Hypergraph) -> BoundsReport:
    """Degree-based lower/upper bounds for the largest Z-eigenvalue."""
    degs = degrees(H)
    sum_deg = sum(degs)
    lower_degree_sum = sum_deg / (H.n ** (H.m / 2) * math.factorial(H.m - 1))
    if H.edge_count:
        u = np.full(H.n, H.n**-0.5)
        lower_uniform = poly_eval(adjacency_tensor(H), u)
    else:
        lower_uniform = 0.0
    return BoundsReport(
        lower_degree_sum=lower_degree_sum,
        lower_uniform=lower_uniform,
        upper_degree=max(degs, default=0) * math.sqrt(H.n),
        upper_edges=float(H.edge_count),
    )


@dataclass(frozen=True)
class ZStarResult:
    value: float
    pair: EigenPair
    bounds: BoundsReport
    n_converged: int
    n_starts: int


def _lex_smaller(a: np.ndarray, b: np.ndarray) -> bool:
    for ai, bi in zip(a, b):
        if ai != bi:
            return ai < bi
    return False


def z_spectral_radius(
    H: Hypergraph,
    n_starts: int = 32,
    seed: int = 0,
    tol: float = 1e-10,
    residual_tol: float = RESIDUAL_TOL,
    max_iter: int = 10000,
    shift: Optional[float] = None,
    lambda_tie_tol: float = 1e-9,
) -> ZStarResult:
    """Largest Z-eigenvalue by multi-start shifted power iteration.

    The maximum is attained at a nonnegative unit vector, so all starts
    are nonnegative: the uniform vector plus n_starts seeded random
    directions. Only runs that converge with a certified residual count;
    the winner is the largest eigenvalue, near-ties (within
    lambda_tie_tol) resolved to the lexicographically smallest
    eigenvector so the reported pair is deterministic. The result is
    checked against the degree bounds; a violation raises
    CertificationError. Raises SolverError when the graph has no edges or
    no start converges.
    """
    if H.edge_count == 0:
        raise SolverError("no edges: the zero tensor has no largest Z-eigenvalue")
    A = adjacency_tensor(H)
    rng = np.random.default_rng(seed)
    starts = [np.ones(H.n)]
    for _ in range(n_starts):
        starts.append(np.abs(rng.standard_normal(H.n)))
    candidates: list[EigenPair] = []
    for x0 in starts:
        cfg = SshopmConfig(
            shift=shift, start=x0, tol=tol, residual_tol=residual_tol, max_iter=max_iter
        )
        pair, trace = sshopm(A, cfg)
        if trace.converged and pair.residual <= residual_tol:
            candidates.append(pair)
    if not candidates:
        raise SolverError(f"none of {len(starts)} starts converged")
    top = max(p.value for p in candidates)
    best = None
    for p in candidates:
        if p.value >= top - lambda_tie_tol:
            if best is None or _lex_smaller(p.vector, best.vector):
                best = p
    bounds = z_bounds(H)
    slack = 1e-7
    sandwich = (
        bounds.lower_degree_sum <= bounds.lower_uniform + slack
        and bounds.lower_uniform <= best.value + slack
        and best.value <= bounds.min_upper + slack
    )
    if not sandwich:
        raise CertificationError(
            f"estimate {best.value} escapes bounds "
            f"[{bounds.lower_uniform}, {bounds.min_upper}]"
        )
    return ZStarResult(
        value=best.value,
        pair=best,
        bounds=bounds,
        n_converged=len(candidates),
        n_starts=len(starts),
    )


def closed_form_regular_z(H: Hypergraph) -> Optional[EigenPair]:
    """Z-eigenpair r * n^{-(m-2)/2} at the uniform unit vector, for
    r-regular simple graphs; None when the graph is not regular (or has
    no edges, where the tensor is zero)."""
    if not H.simple:
        raise ValidationError("closed form applies to simple m-graphs only")
    r = is_regular(H)
    if r is None or H.edge_count == 0:
        return None
    value = r * H.n ** (-(H.m - 2) / 2)
    x = np.full(H.n, H.n**-0.5)
    residual = z_residual(adjacency_tensor(H), value, x)
    if residual > 1e-10:
        raise CertificationError(
            f"closed-form pair residual {residual} exceeds 1e-10"
        )
    return EigenPair("Z", value, x, residual)


# ---------------------------------------------------------------------------
# Positivity classification and eigenpair embedding


@dataclass(frozen=True)
class PositivityReport:
    strictly_positive: bool
    zero_set: tuple[int, ...]
    witness_consistent: bool


def classify_positivity(
    H: Hypergraph, pair: EigenPair, zero_tol: float = 1e-7
) -> PositivityReport:
    """Zero coordinates of a nonnegative eigenvector, checked as a witness.

    For a positive eigenvalue with a nonnegative eigenvector, any empty
    coordinates form a set no edge may meet in exactly one vertex; the
    report re-verifies that combinatorially. zero_tol sits between the
    solver residual and its convergence tolerance.
    """
    if pair.value <= 0:
        raise ValidationError("positivity classification needs a positive eigenvalue")
    x = np.asarray(pair.vector, dtype=float)
    if np.any(x < -zero_tol):
        raise ValidationError("eigenvector must be nonnegative (within zero_tol)")
    zero_set = tuple(int(i) + 1 for i in np.flatnonzero(np.abs(x) <= zero_tol))
    if not zero_set:
        return PositivityReport(True, (), True)
    return PositivityReport(False, zero_set, verify_witness(H, zero_set))


def embed_z_eigenpair(
    H: Hypergraph,
    V0: Iterable[int],
    inner_pair: EigenPair,
    residual_tol: float = RESIDUAL_TOL,
) -> EigenPair:
    """Zero-pad a Z-eigenpair of the V0-deleted subgraph back onto H.

    Edges of H either avoid V0 entirely (reproducing the subgraph
    equations) or meet it at least twice when V0 is a valid witness, so
    padding with zeros preserves the eigenpair. The padded residual is
    recomputed; failure to certify means the witness was invalid.
    """
    V0 = tuple(sorted(set(V0)))
    if not V0:
        return inner_pair
    sub, new_to_old = induced_subhypergraph(H, V0)
    x_in = np.asarray(inner_pair.vector, dtype=float)
    if x_in.shape != (sub.n,):
        raise ValidationError(
            f"inner eigenvector has dimension {x_in.shape}, subgraph has {sub.n}"
        )
    y = np.zeros(H.n)
    y[np.asarray(new_to_old) - 1] = x_in
    residual = z_residual(adjacency_tensor(H), inner_pair.value, y)
    if residual > residual_tol:
        raise CertificationError(
            f"embedded pair residual {residual} exceeds {residual_tol}; "
            f"V0={V0} is not a consistent witness"
        )
    return EigenPair("Z", inner_pair.value, y, residual)


# ---------------------------------------------------------------------------
# Desk-scale oracle: full real Z-spectrum by multi-start Newton


def _newton_z(A, x0, tol, max_iter):
    n, m = A.n, A.m
    x = np.asarray(x0, dtype=float)
    lam = poly_eval(A, x)
    z = np.concatenate([x, [lam]])

    def resid(zv):
        xv, lv = zv[:n], zv[n]
        return np.concatenate([apply(A, xv) - lv * xv, [xv @ xv - 1.0]])

    F = resid(z)
    for _ in range(max_iter):
        nF = float(np.linalg.norm(F))
        if nF <= tol:
            return z[:n], float(z[n])
        x, lam = z[:n], z[n]
        J = np.zeros((n + 1, n + 1))
        J[:n, :n] = (m - 1) * apply_matrix(A, x) - lam * np.eye(n)
        J[:n, n] = -x
        J[n, :n] = 2 * x
        try:
            step = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(J, -F, rcond=None)[0]
        t = 1.0
        for _ in range(20):
            z_new = z + t * step
            F_new = resid(z_new)
            if np.linalg.norm(F_new) < nF:
                break
            t /= 2
        else:
            return None
        z, F = z_new, F_new
    if np.linalg.norm(F) <= tol:
        return z[:n], float(z[n])
    return None


def brute_force_z_oracle(
    A: SymmetricTensor,
    n_starts: int = 200,
    seed: int = 0,
    tol: float = 1e-10,
    max_iter: int = 60,
    max_n: int = 8,
) -> list[EigenPair]:
    """All real Z-eigenpairs findable by dense multi-start damped Newton.

    Starts come in antipodal pairs drawn uniformly on the sphere, so both
    signs are covered and (for odd order) the output is closed under the
    mirror (lam, x) -> (-lam, -x). Converged solutions are deduplicated
    (eigenvalues within 1e-6, vectors within 1e-5; for even order x and -x
    are identified by making the largest-magnitude coordinate positive)
    and returned sorted by eigenvalue descending, ties by vector. Emits a
    warning and returns [] when no start converges.
    """
    if A.n > max_n:
        raise LimitExceededError(
            f"oracle is desk-scale only: n={A.n} exceeds {max_n}"
        )
    rng = np.random.default_rng(seed)
    half = (n_starts + 1) // 2
    dirs = rng.standard_normal((half, A.n))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    reps: list[tuple[float, np.ndarray]] = []
    for u in dirs:
        for x0 in (u, -u):
            sol = _newton_z(A, x0, tol, max_iter)
            if sol is None:
                continue
            x, lam = sol
            if A.m % 2 == 0:
                k = int(np.argmax(np.abs(x)))
                if x[k] < 0:
                    x = -x
            for rl, rx in reps:
                if abs(lam - rl) <= 1e-6 and np.max(np.abs(x - rx)) <= 1e-5:
                    break
            else:
                reps.append((lam, x))
    if not reps:
        warnings.warn("Z-spectrum oracle: no Newton start converged", RuntimeWarning)
        return []
    reps.sort(key=lambda p: (-p[0], tuple(p[1])))
    return [
        EigenPair("Z", lam, x, z_residual(A, lam, x)) for lam, x in reps
    ]


def distinct_eigenvalues(
    values: Iterable[float], tol: float = 1e-6
) -> list[float]:
    """Collapse a value list into ascending cluster midpoints (gap > tol)."""
    vals = sorted(float(v) for v in values)
    if not vals:
        return []
    out: list[list[float]] = [[vals[0]]]
    for v in vals[1:]:
        if v - out[-1][-1] <= tol:
            out[-1].append(v)
        else:
            out.append([v])
    return [sum(c) / len(c) for c in out]


@dataclass(frozen=True)
class SymmetrySummary:
    symmetric: bool
    eigen_sum: float


def spectrum_symmetry_check(
    eigs: Sequence[float], tol: float = 1e-6
) -> SymmetrySummary:
    """Whether a spectrum is invariant under negation, plus its sum."""
    srt = np.sort(np.asarray(list(eigs), dtype=float))
    if srt.size == 0:
        return SymmetrySummary(True, 0.0)
    mirrored = np.sort(-srt)
    symmetric = bool(np.max(np.abs(srt - mirrored)) <= tol)
    return SymmetrySummary(symmetric, float(srt.sum()))


def negate_eigenpair(
    pair: EigenPair,
    m: int,
    partition: Optional[Sequence[Sequence[int]]] = None,
    tensor: Optional[SymmetricTensor] = None,
) -> EigenPair:
    """The mirrored Z-eigenpair (-value, y).

    Odd order flips the whole vector. Even order needs an m-partition:
    flipping the signs on the first part negates every edge monomial
    exactly once relative to the eigenvalue equation. The mirror has the
    same residual by construction; pass the tensor to recompute it.
    """
    if m % 2 == 1:
        y = -np.asarray(pair.vector, dtype=float)
    else:
        if partition is None:
            raise ValidationError("even order requires an m-partition to mirror")
        y = np.asarray(pair.vector, dtype=float).copy()
        flip = [v - 1 for v in partition[0]]
        y[flip] = -y[flip]
    value = -pair.value
    if value == 0.0:
        value = 0.0
    residual = pair.residual if tensor is None else z_residual(tensor, value, y)
    return EigenPair(pair.kind, value, y, residual)
