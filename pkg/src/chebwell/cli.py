"""Command-line front end.

Five subcommands: spectrum (closed form vs numerical energies), metric
(candidate construction plus hermitization report), sweep (eigenvalue
trajectories of a one-parameter family), scan (2-D positivity map with a
boundary-linearity report) and verify (the full named-check suite).

Exit codes: 0 success, 1 numerical or verification failure, 2 usage error.
Tabular output is deterministic CSV (17 significant digits, LF endings);
JSON output is a single indented object.
"""

import argparse
import sys

import numpy as np

from . import analysis, lattice, metrics, numerics, serialize, verify
from .lattice import ModelKind

__all__ = ["build_parser", "main"]

_MODELS = {
    "first-kind": ModelKind.FIRST_KIND_WELL,
    "second-kind": ModelKind.SECOND_KIND_WELL,
}


def _parse_nu(text, dim):
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"could not parse --nu value {text!r}") from None
    if len(values) != dim:
        raise ValueError(f"--nu needs {dim} comma-separated values, got {len(values)}")
    return np.asarray(values, dtype=float)


def cmd_spectrum(args):
    if args.dim < 1:
        raise ValueError(f"N must be at least 1, got {args.dim}")
    if args.tol <= 0.0:
        raise ValueError("tolerance must be positive")
    kind = _MODELS[args.model]
    closed = lattice.closed_form_energies(kind, args.dim)
    s, _ = lattice.build_hamiltonian(kind, args.dim).symmetrized()
    numeric = numerics.sym_eigs(s).values[::-1]
    delta = np.abs(closed - numeric)
    if args.format == "csv":
        rows = [
            [n, closed[n], numeric[n], delta[n]] for n in range(args.dim)
        ]
        text = serialize.csv_text(
            ["n", "E_closed_form", "E_numeric", "abs_delta"], rows
        )
    else:
        payload = {
            "model": args.model,
            "dim": args.dim,
            "tolerance": args.tol,
            "max_abs_delta": float(np.max(delta)),
            "levels": [
                {
                    "n": n,
                    "E_closed_form": float(closed[n]),
                    "E_numeric": float(numeric[n]),
                    "abs_delta": float(delta[n]),
                }
                for n in range(args.dim)
            ],
        }
        text = serialize.json_text(payload)
    serialize.write_text(args.out, text)
    return 0 if float(np.max(delta)) < args.tol else 1


def _metric_candidates(args, ham):
    if args.mode == "spectral":
        es = lattice.closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, args.dim)
        nu = (
            np.ones(args.dim)
            if args.nu is None
            else _parse_nu(args.nu, args.dim)
        )
        return [metrics.spectral_metric(es, nu)]
    if args.mode == "diagonal":
        return [metrics.diagonal_metric(args.dim)]
    if args.mode == "k":
        return [metrics.k_matrix(args.dim, args.lam)]
    if args.mode == "l":
        return [metrics.l_matrix(args.dim, args.lam, args.mu)]
    return list(metrics.band_metric_basis(ham, args.band))


def cmd_metric(args):
    if args.dim < 1:
        raise ValueError(f"N must be at least 1, got {args.dim}")
    if args.tol <= 0.0:
        raise ValueError("tolerance must be positive")
    if args.mode == "basis" and args.band < 0:
        raise ValueError("band must be nonnegative")
    ham = lattice.build_hamiltonian(ModelKind.FIRST_KIND_WELL, args.dim)
    candidates = _metric_candidates(args, ham)
    blocks = []
    worst_rel = 0.0
    for cand in candidates:
        rep = metrics.hermitize_check(ham, cand)
        sig = analysis.classify(cand)
        worst_rel = max(worst_rel, rep.intertwining_residual / max(1.0, rep.scale))
        blocks.append(
            {
                "source": cand.source.value,
                "params": dict(cand.params),
                "matrix": cand.to_dense(),
                "verification": {
                    "intertwining_residual": rep.intertwining_residual,
                    "min_eigenvalue": rep.min_eigenvalue,
                    "signature": sig.label.value,
                },
            }
        )
    payload = {
        "mode": args.mode,
        "dim": args.dim,
        "tolerance": args.tol,
        "candidates": blocks,
    }
    if args.mode == "basis":
        payload["basis_dimension"] = len(candidates)
    if args.format == "json":
        serialize.write_text(args.out, serialize.json_text(payload))
    else:
        header = ["candidate", "row"] + [f"c_{j + 1}" for j in range(args.dim)]
        rows = []
        for idx, block in enumerate(blocks):
            dense = block["matrix"]
            for i in range(args.dim):
                rows.append([idx + 1, i + 1] + list(dense[i]))
        serialize.write_text(args.out, serialize.csv_text(header, rows))
        sys.stderr.write(
            serialize.json_text(
                [
                    {"source": b["source"], "verification": b["verification"]}
                    for b in blocks
                ]
            )
        )
    return 0 if worst_rel <= args.tol else 1


def cmd_sweep(args):
    sweep = analysis.sweep_1d(
        args.dim, args.family, args.lo, args.hi, args.steps, lam=args.lam
    )
    if args.format == "csv":
        text = serialize.csv_text(*serialize.sweep_table(sweep))
    else:
        text = serialize.json_text(sweep)
    serialize.write_text(args.out, text)
    return 0


def cmd_scan(args):
    if args.segment_tol is not None and args.segment_tol <= 0.0:
        raise ValueError("segment tolerance must be positive")
    scan = analysis.scan_2d(
        args.dim,
        (args.lambda_from, args.lambda_to),
        (args.mu_from, args.mu_to),
        args.grid,
    )
    if args.format == "csv":
        text = serialize.csv_text(*serialize.scan_table(scan))
    else:
        text = serialize.json_text(scan)
    serialize.write_text(args.out, text)
    region = analysis.region_summary(scan)
    try:
        linearity = serialize.to_jsonable(
            analysis.boundary_linearity_test(scan, segment_tol=args.segment_tol)
        )
    except ValueError as exc:
        linearity = {"error": str(exc)}
    report = {
        "dim": args.dim,
        "grid_steps": args.grid,
        "lambda_range": [args.lambda_from, args.lambda_to],
        "mu_range": [args.mu_from, args.mu_to],
        "region": serialize.to_jsonable(region),
        "linearity": linearity,
    }
    report_text = serialize.json_text(report)
    if args.report is None:
        sys.stderr.write(report_text)
    else:
        serialize.write_text(args.report, report_text)
    return 0


def cmd_verify(args):
    report = verify.run_verification(max_n=args.max_n)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        sys.stderr.write(f"{check.name}: {status}\n")
    serialize.write_text(args.out, serialize.json_text(report))
    return 0 if report.all_passed else 1


def _add_format_out(parser, default_format):
    parser.add_argument(
        "--format", choices=["csv", "json"], default=default_format,
        help=f"output format (default {default_format})",
    )
    parser.add_argument(
        "--out", default=None, metavar="PATH",
        help="write output to a file instead of stdout",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="chebwell",
        description="Discrete Chebyshev square wells and their metric operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="closed-form vs numerical energies")
    sp.add_argument(
        "--model", choices=sorted(_MODELS), default="first-kind",
        help="well variant (default first-kind)",
    )
    sp.add_argument("-N", "--dim", type=int, required=True, help="chain length")
    sp.add_argument(
        "--tol", type=float, default=1e-10,
        help="maximum allowed energy deviation (default 1e-10)",
    )
    _add_format_out(sp, "csv")
    sp.set_defaults(func=cmd_spectrum)

    mp = sub.add_parser("metric", help="build and check a metric candidate")
    mp.add_argument(
        "--mode", choices=["spectral", "diagonal", "k", "l", "basis"],
        required=True, help="candidate family",
    )
    mp.add_argument("-N", "--dim", type=int, required=True, help="chain length")
    mp.add_argument(
        "--lambda", dest="lam", type=float, default=0.0,
        help="tridiagonal coupling (modes k and l)",
    )
    mp.add_argument(
        "--mu", type=float, default=0.0, help="pentadiagonal coupling (mode l)"
    )
    mp.add_argument(
        "--nu", default=None, metavar="V1,V2,...",
        help="spectral weights, one per level (mode spectral)",
    )
    mp.add_argument(
        "--band", type=int, default=1,
        help="half bandwidth of the solver basis (mode basis, default 1)",
    )
    mp.add_argument(
        "--tol", type=float, default=1e-10,
        help="relative intertwining tolerance (default 1e-10)",
    )
    _add_format_out(mp, "json")
    mp.set_defaults(func=cmd_metric)

    wp = sub.add_parser("sweep", help="eigenvalue trajectories of a family")
    wp.add_argument(
        "--family", choices=["k", "l"], required=True,
        help="k sweeps lambda, l sweeps mu at fixed lambda",
    )
    wp.add_argument("-N", "--dim", type=int, required=True, help="chain length")
    wp.add_argument(
        "--from", dest="lo", type=float, required=True, help="sweep start"
    )
    wp.add_argument("--to", dest="hi", type=float, required=True, help="sweep end")
    wp.add_argument(
        "--steps", type=int, default=400, help="grid points (default 400)"
    )
    wp.add_argument(
        "--lambda", dest="lam", type=float, default=0.0,
        help="fixed tridiagonal coupling for family l (default 0)",
    )
    _add_format_out(wp, "csv")
    wp.set_defaults(func=cmd_sweep)

    cp = sub.add_parser("scan", help="2-D positivity map of the pentadiagonal family")
    cp.add_argument("-N", "--dim", type=int, default=8, help="chain length (default 8)")
    cp.add_argument("--lambda-from", type=float, default=-1.0)
    cp.add_argument("--lambda-to", type=float, default=1.0)
    cp.add_argument("--mu-from", type=float, default=-1.5)
    cp.add_argument("--mu-to", type=float, default=1.5)
    cp.add_argument(
        "--grid", type=int, default=200, help="points per axis (default 200)"
    )
    cp.add_argument(
        "--segment-tol", type=float, default=None,
        help="straightness tolerance (default two grid cells)",
    )
    cp.add_argument(
        "--report", default=None, metavar="PATH",
        help="write the boundary report JSON to a file instead of stderr",
    )
    _add_format_out(cp, "csv")
    cp.set_defaults(func=cmd_scan)

    vp = sub.add_parser("verify", help="run the named verification checks")
    vp.add_argument(
        "--max-n", type=int, default=None,
        help="cap matrix sizes for a fast run (full sizes when omitted)",
    )
    vp.add_argument(
        "--out", default=None, metavar="PATH",
        help="write the report JSON to a file instead of stdout",
    )
    vp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (None, 0) else int(exc.code)
    try:
        return int(args.func(args))
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except np.linalg.LinAlgError as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
