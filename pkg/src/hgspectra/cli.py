"""Command-line surface: file ingestion, generation, analysis, verification.

The .hgr format is line-oriented UTF-8: '#' lines are comments, the first
data line is ``uniform <m> <n>``, and each following line lists the m
(1-based) vertices of one edge. Repeated indices within a line make a
hyperloop; duplicate lines make a repeated edge.

``analyze`` emits one JSON report on stdout (schema in
docs/report-schema.json); diagnostics go to stderr. Exit codes: 0 ok,
1 verification failure, 2 residual-certification failure, 3 input error.
Identical flags and seed produce byte-identical JSON.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from typing import Optional

import numpy as np

from . import hypergraph as hg
from . import solvers, tensor
from .errors import (
    CertificationError,
    LimitExceededError,
    SolverError,
    ValidationError,
)

__all__ = [
    "parse_hgr",
    "render_hgr",
    "generate",
    "analyze",
    "verify",
    "main",
]

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# .hgr parsing and rendering


def parse_hgr(text: str) -> hg.Hypergraph:
    """Parse .hgr text; errors carry 1-based line numbers."""
    header: Optional[tuple[int, int]] = None
    edges: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3 or fields[0] != "uniform":
                raise ValidationError(
                    f"line {lineno}: expected header 'uniform <m> <n>', got {line!r}"
                )
            try:
                m, n = int(fields[1]), int(fields[2])
            except ValueError:
                raise ValidationError(
                    f"line {lineno}: header fields must be integers: {line!r}"
                ) from None
            header = (m, n)
            continue
        m, n = header
        if len(fields) != m:
            raise ValidationError(
                f"line {lineno}: edge needs {m} vertices, got {len(fields)}"
            )
        try:
            edge = [int(f) for f in fields]
        except ValueError:
            raise ValidationError(
                f"line {lineno}: vertex indices must be integers: {line!r}"
            ) from None
        for v in edge:
            if not 1 <= v <= n:
                raise ValidationError(
                    f"line {lineno}: vertex {v} outside 1..{n}"
                )
        edges.append(edge)
    if header is None:
        raise ValidationError("no 'uniform <m> <n>' header found")
    m, n = header
    return hg.build(n, m, edges)


def render_hgr(H: hg.Hypergraph) -> str:
    """Render a hypergraph in the .hgr format (round-trips through parse_hgr)."""
    lines = [f"uniform {H.m} {H.n}"]
    for e in H.edge_lists():
        lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Random instance generation


def generate(
    n: int, m: int, edge_count: int, simple: bool, seed: int = 0
) -> hg.Hypergraph:
    """Seed-deterministic random instance.

    Simple mode draws distinct m-subsets uniformly; multigraph mode draws
    edges as independent uniform multisets (duplicates allowed). Raises
    ValidationError for infeasible parameters.
    """
    if n < 1 or m < 2 or edge_count < 0:
        raise ValidationError("need n >= 1, m >= 2, edge_count >= 0")
    rng = np.random.default_rng(seed)
    if simple:
        if m > n:
            raise ValidationError(f"simple {m}-graph needs n >= m, got n={n}")
        total = math.comb(n, m)
        if edge_count > total:
            raise ValidationError(
                f"simple graph on {n} vertices has at most {total} edges"
            )
        combos = list(itertools.combinations(range(1, n + 1), m))
        picks = rng.choice(total, size=edge_count, replace=False)
        edges = [combos[i] for i in sorted(picks)]
    else:
        edges = [
            sorted(rng.integers(1, n + 1, size=m).tolist())
            for _ in range(edge_count)
        ]
    return hg.build(n, m, edges)


# ---------------------------------------------------------------------------
# Analysis report


def _sig12(v: float) -> float:
    return float(f"{float(v):.12g}")


def _vec12(x: np.ndarray) -> list[float]:
    return [_sig12(v) for v in np.asarray(x, dtype=float)]


def _positivity_class(x: np.ndarray, zero_tol: float) -> str:
    x = np.asarray(x, dtype=float)
    if np.any(x < -zero_tol):
        return "mixed"
    if np.all(x > zero_tol):
        return "positive"
    return "nonnegative_boundary"


def _structure_block(report: hg.StructureReport) -> dict:
    return {
        "connected": report.connected,
        "nicely_connected": report.nicely_connected,
        "witness_V0": list(report.witness_V0) if report.witness_V0 else None,
        "regular_degree": report.regular_degree,
        "complete": report.complete,
        "partite": report.partite,
        "partition": report.partition,
        "degrees": report.degrees,
        "max_degree": report.max_degree,
        "edge_count": report.edge_count,
    }


def _bounds_block(b: solvers.BoundsReport) -> dict:
    return {
        "lower_degree_sum": _sig12(b.lower_degree_sum),
        "lower_uniform": _sig12(b.lower_uniform),
        "upper_degree": _sig12(b.upper_degree),
        "upper_edges": _sig12(b.upper_edges),
    }


def analyze(
    H: hg.Hypergraph,
    h_radius: bool = False,
    z_star: bool = False,
    oracle: bool = False,
    tol: float = 1e-10,
    residual_tol: float = 1e-8,
    starts: int = 32,
    seed: int = 0,
    max_iter: int = 10000,
    mu: float = 1e-5,
    shift: Optional[float] = None,
    zero_tol: float = 1e-7,
    limit_n: Optional[int] = None,
) -> tuple[dict, int]:
    """Assemble the spectral report; returns (report, exit_code)."""
    warnings: list[str] = []
    certified = True
    witness_limit = limit_n if limit_n is not None else hg.DEFAULT_WITNESS_LIMIT
    oracle_limit = limit_n if limit_n is not None else 8

    structure, struct_warnings = hg.structure_report(H, witness_limit=witness_limit)
    warnings.extend(struct_warnings)
    report: dict = {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "n": H.n,
            "m": H.m,
            "edge_count": H.edge_count,
            "simple": H.simple,
        },
        "structure": _structure_block(structure),
        "h_radius": None,
        "z_star": None,
        "z_spectrum_sample": [],
        "symmetry": None,
        "closed_forms": None,
        "warnings": warnings,
    }

    no_edges = H.edge_count == 0
    if no_edges and (h_radius or z_star or oracle):
        warnings.append("no edges")
        h_radius = z_star = oracle = False

    A = tensor.adjacency_tensor(H) if not no_edges else None

    if H.simple and not no_edges:
        closed = solvers.closed_form_regular_z(H)
        if closed is not None:
            block = {"regular_z": _sig12(closed.value)}
            if structure.complete:
                block["complete_z"] = _sig12(
                    math.comb(H.n - 1, H.m - 1) * H.n ** (-(H.m - 2) / 2)
                )
            report["closed_forms"] = block

    if h_radius:
        try:
            result = solvers.nqz_h_spectral_radius(
                A, mu=mu, tol=min(tol, 1e-9), max_iter=max_iter
            )
            ok = solvers.certify(A, result.pair, residual_tol=residual_tol)
            if not ok:
                certified = False
                warnings.append(
                    f"h_radius pair failed certification (residual {result.pair.residual:.3e})"
                )
            report["h_radius"] = {
                "value": _sig12(result.rho),
                "vector": _vec12(result.pair.vector),
                "residual": _sig12(result.pair.residual),
                "iterations": len(result.trace),
                "brackets": [_sig12(result.brackets[0]), _sig12(result.brackets[1])],
                "mu_schedule": [_sig12(v) for v in result.mu_schedule],
                "mu_estimates": [_sig12(v) for v in result.mu_estimates],
                "converged": result.converged,
                "polished": result.polished,
                "certified": ok,
            }
        except (SolverError, ValidationError, LimitExceededError) as exc:
            warnings.append(f"h_radius: {exc}")

    if z_star:
        try:
            zres = solvers.z_spectral_radius(
                H,
                n_starts=starts,
                seed=seed,
                tol=tol,
                residual_tol=residual_tol,
                max_iter=max_iter,
                shift=shift,
            )
            ok = solvers.certify(A, zres.pair, residual_tol=residual_tol)
            if not ok:
                certified = False
                warnings.append(
                    f"z_star pair failed certification (residual {zres.pair.residual:.3e})"
                )
            positivity = solvers.classify_positivity(H, zres.pair, zero_tol=zero_tol)
            report["z_star"] = {
                "value": _sig12(zres.value),
                "vector": _vec12(zres.pair.vector),
                "residual": _sig12(zres.pair.residual),
                "n_converged": zres.n_converged,
                "n_starts": zres.n_starts,
                "bounds": _bounds_block(zres.bounds),
                "positivity": {
                    "strictly_positive": positivity.strictly_positive,
                    "zero_set": list(positivity.zero_set),
                    "witness_consistent": positivity.witness_consistent,
                },
                "certified": ok,
            }
        except CertificationError as exc:
            certified = False
            warnings.append(f"z_star: {exc}")
        except (SolverError, LimitExceededError) as exc:
            warnings.append(f"z_star: {exc}")

    if oracle:
        if H.n > oracle_limit:
            warnings.append(
                f"oracle skipped: n={H.n} exceeds limit {oracle_limit}"
            )
        else:
            pairs = solvers.brute_force_z_oracle(A, n_starts=max(200, starts), seed=seed)
            if not pairs:
                warnings.append("oracle: no Newton start converged")
            sample = []
            for p in pairs:
                ok = solvers.certify(A, p, residual_tol=residual_tol)
                if not ok:
                    certified = False
                    warnings.append(
                        f"oracle pair {p.value:.6g} failed certification"
                    )
                sample.append(
                    {
                        "value": _sig12(p.value),
                        "residual": _sig12(p.residual),
                        "positivity_class": _positivity_class(p.vector, zero_tol),
                        "certified": ok,
                    }
                )
            report["z_spectrum_sample"] = sample
            values = solvers.distinct_eigenvalues([p.value for p in pairs])
            summary = solvers.spectrum_symmetry_check(values)
            report["symmetry"] = {
                "symmetric": summary.symmetric,
                "eigen_sum": _sig12(summary.eigen_sum),
            }

    return report, (0 if certified else 2)


# ---------------------------------------------------------------------------
# Verification battery


def _check_verify(H: hg.Hypergraph, seed: int, starts: int) -> list[tuple[str, bool, str]]:
    """Run every applicable invariant; returns (name, passed, detail) rows."""
    results: list[tuple[str, bool, str]] = []

    def add(name: str, passed: bool, detail: str = ""):
        results.append((name, bool(passed), detail))

    A = tensor.adjacency_tensor(H)
    connected = hg.is_connected(H)
    add(
        "connectivity-equals-weak-irreducibility",
        connected == tensor.is_weakly_irreducible(A),
        f"connected={connected}",
    )
    degs = hg.degrees(H)
    add(
        "degree-sum-identity",
        sum(degs) == sum(len(set(e)) for e in H.edges),
        f"sum={sum(degs)}",
    )
    add("round-trip", parse_hgr(render_hgr(H)) == H)

    structure, _ = hg.structure_report(H)
    if structure.nicely_connected is True and H.edge_count:
        add("nicely-connected-implies-connected", connected)
    if structure.witness_V0 is not None:
        add("witness-revalidates", hg.verify_witness(H, structure.witness_V0))

    if H.edge_count == 0:
        return results

    zres = None
    try:
        zres = solvers.z_spectral_radius(H, n_starts=starts, seed=seed)
        add("z-star-residual", solvers.certify(A, zres.pair), f"value={zres.value:.9g}")
        b = zres.bounds
        add(
            "z-star-bounds-sandwich",
            b.lower_degree_sum <= b.lower_uniform + 1e-9
            and b.lower_uniform <= zres.value + 1e-7
            and zres.value <= b.min_upper + 1e-7,
            f"[{b.lower_uniform:.6g}, {b.min_upper:.6g}]",
        )
    except (SolverError, CertificationError) as exc:
        add("z-star-residual", False, str(exc))

    if H.simple:
        closed = solvers.closed_form_regular_z(H)
        if closed is not None:
            add("closed-form-residual", closed.residual <= 1e-10)
            if zres is not None:
                add(
                    "z-star-dominates-closed-form",
                    zres.value >= closed.value - 1e-6,
                    f"{zres.value:.9g} vs {closed.value:.9g}",
                )

    if connected:
        try:
            nres = solvers.nqz_h_spectral_radius(A)
            add("h-radius-residual", solvers.certify(A, nres.pair), f"rho={nres.rho:.9g}")
            mono = all(
                s2.lower >= s1.lower - 1e-12 and s2.upper <= s1.upper + 1e-12
                for s1, s2 in zip(nres.trace, nres.trace[1:])
            )
            add("nqz-brackets-monotone", mono, f"{len(nres.trace)} iterations")
            r = hg.is_regular(H)
            if r is not None and H.simple:
                add("nqz-matches-regular-degree", abs(nres.rho - r) <= 1e-4, f"r={r}")
        except (SolverError, ValidationError, LimitExceededError) as exc:
            add("h-radius-residual", False, str(exc))

    if H.n <= 8:
        pairs = solvers.brute_force_z_oracle(A, n_starts=200, seed=seed)
        if pairs:
            add(
                "oracle-residuals",
                all(solvers.certify(A, p) for p in pairs),
                f"{len(pairs)} pairs",
            )
            values = solvers.distinct_eigenvalues([p.value for p in pairs])
            if zres is not None:
                add(
                    "oracle-consistent-with-z-star",
                    abs(max(values) - zres.value) <= 1e-6,
                )
            if H.m % 2 == 1:
                summary = solvers.spectrum_symmetry_check(values)
                add(
                    "spectrum-negation-symmetric",
                    summary.symmetric and abs(summary.eigen_sum) <= 1e-6,
                    f"sum={summary.eigen_sum:.3e}",
                )
            if structure.nicely_connected is True:
                positive_ok = all(
                    p.vector.min() > 1e-6
                    for p in pairs
                    if p.value > 0 and p.vector.min() > -1e-9
                )
                add("positive-pairs-strictly-positive", positive_ok)
    if structure.witness_V0 is not None:
        sub, _ = hg.induced_subhypergraph(H, structure.witness_V0)
        if sub.edge_count:
            try:
                inner = solvers.z_spectral_radius(sub, n_starts=starts, seed=seed)
                embedded = solvers.embed_z_eigenpair(H, structure.witness_V0, inner.pair)
                add("witness-embedding-certifies", solvers.certify(A, embedded))
            except (SolverError, CertificationError) as exc:
                add("witness-embedding-certifies", False, str(exc))
    return results


def verify(H: hg.Hypergraph, seed: int = 0, starts: int = 32) -> tuple[list[tuple[str, bool, str]], int]:
    """Invariant battery with PASS/FAIL rows; exit code 1 on any failure."""
    results = _check_verify(H, seed, starts)
    return results, (0 if all(ok for _, ok, _ in results) else 1)


# ---------------------------------------------------------------------------
# Entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgspectra",
        description="Spectral analysis of uniform multi-hypergraphs via adjacency tensors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="structure + spectral report as JSON")
    pa.add_argument("path", help=".hgr input file")
    pa.add_argument("--h-radius", action="store_true", help="run the bracketed power iteration")
    pa.add_argument("--z-star", action="store_true", help="run multi-start SS-HOPM with bounds")
    pa.add_argument("--oracle", action="store_true", help="full Z-spectrum sample (n <= 8)")
    pa.add_argument("--tol", type=float, default=1e-10, help="iterate tolerance")
    pa.add_argument("--residual-tol", type=float, default=1e-8, help="certification residual")
    pa.add_argument("--starts", type=int, default=32, help="number of random starts")
    pa.add_argument("--seed", type=int, default=0)
    pa.add_argument("--max-iter", type=int, default=10000)
    pa.add_argument("--mu", type=float, default=1e-5, help="base perturbation for the H-radius schedule")
    pa.add_argument("--shift", default=None, help="SS-HOPM shift: number or 'adaptive'")
    pa.add_argument("--zero-tol", type=float, default=1e-7)
    pa.add_argument(
        "--limit-n",
        type=int,
        default=None,
        help="raise exhaustive-search caps (witness search, oracle) to this n",
    )

    pg = sub.add_parser("gen", help="generate a random instance in .hgr format")
    pg.add_argument("n", type=int)
    pg.add_argument("m", type=int)
    pg.add_argument("edges", type=int)
    pg.add_argument("--simple", action="store_true", help="distinct m-subsets (no hyperloops)")
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("-o", "--output", default=None, help="write here instead of stdout")

    pv = sub.add_parser("verify", help="run the invariant battery on an instance")
    pv.add_argument("path")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--starts", type=int, default=32)
    return parser


def _load(path: str) -> hg.Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hgr(fh.read())


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            H = _load(args.path)
            shift = args.shift
            if shift is not None:
                if shift == "adaptive":
                    shift = solvers.adaptive_shift(tensor.adjacency_tensor(H))
                else:
                    shift = float(shift)
            report, code = analyze(
                H,
                h_radius=args.h_radius,
                z_star=args.z_star,
                oracle=args.oracle,
                tol=args.tol,
                residual_tol=args.residual_tol,
                starts=args.starts,
                seed=args.seed,
                max_iter=args.max_iter,
                mu=args.mu,
                shift=shift,
                zero_tol=args.zero_tol,
                limit_n=args.limit_n,
            )
            print(json.dumps(report, indent=2, sort_keys=True))
            return code
        if args.command == "gen":
            H = generate(args.n, args.m, args.edges, args.simple, args.seed)
            text = render_hgr(H)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.command == "verify":
            H = _load(args.path)
            results, code = verify(H, seed=args.seed, starts=args.starts)
            width = max(len(name) for name, _, _ in results)
            for name, ok, detail in results:
                status = "PASS" if ok else "FAIL"
                line = f"{status}  {name:<{width}}"
                if detail:
                    line += f"  {detail}"
                print(line)
            return code
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
