"""Command line interface for the experiment runner.

Subcommands: ``derivative``, ``bvp``, ``ivp``, ``sweep``, ``list``.
Exit codes: 0 success, 2 invalid configuration, 3 solver failure.
"""

from __future__ import annotations

import argparse
import sys

from .collocation import SolverError
from .experiments import (
    DerivativeCase,
    ErrorReport,
    default_config,
    get_case,
    registry,
    run,
    sweep,
    write_csv,
    write_json,
)
from .specfun import AccuracyError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3


def _g17(value) -> str:
    return format(float(value), ".17g")


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--example", required=True, help="registry id")
    parser.add_argument("--nodes", default="equispaced",
                        choices=["equispaced", "mixed-ec", "mixed-emc"])
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--ne", type=int, default=None)
    parser.add_argument("--d", type=int, default=None)
    parser.add_argument("--q", type=int, default=None)
    parser.add_argument("--mu", type=int, default=None)
    parser.add_argument("--alpha", default=None,
                        help="fractional order, or comma-separated list")
    parser.add_argument("--omega", type=float, default=None)
    parser.add_argument("--ns", type=int, default=None)
    parser.add_argument("--grid", type=int, default=100)
    parser.add_argument("--out", default=None, help="report output path")
    parser.add_argument("--format", default="csv", choices=["csv", "json"])


def _parse_alphas(raw) -> list:
    if raw is None:
        return [None]
    return [float(tok) for tok in str(raw).split(",") if tok.strip()]


def _config_from_args(args, alpha=None):
    overrides = {}
    if args.n is not None:
        overrides["n"] = args.n
    if args.ne is not None:
        overrides["n_e"] = args.ne
    if args.d is not None:
        overrides["d"] = args.d
    if args.q is not None:
        overrides["q"] = args.q
    if args.mu is not None:
        overrides["mu"] = args.mu
    if alpha is not None:
        overrides["alpha"] = alpha
    if args.omega is not None:
        overrides["omega"] = args.omega
    if args.ns is not None:
        overrides["n_s"] = args.ns
    overrides["grid"] = args.grid
    return default_config(args.example, node_family=args.nodes, **overrides)


def _emit(reports: list[ErrorReport], args) -> None:
    for report in reports:
        c = report.config
        parts = [f"example={c.example_id}", f"nodes={c.node_family}",
                 f"d={c.d}", f"n={report.n}"]
        if c.alpha is not None:
            parts.append(f"alpha={_g17(c.alpha)}")
        if c.omega is not None:
            parts.append(f"omega={_g17(c.omega)}")
        parts.append(f"mean_error={_g17(report.mean_error)}")
        if report.cond is not None:
            parts.append(f"cond={_g17(report.cond)}")
        if report.residual is not None:
            parts.append(f"residual={_g17(report.residual)}")
        print("  ".join(parts))
    if args.out:
        if args.format == "csv":
            write_csv(reports, args.out)
        else:
            write_json(reports, args.out)
        print(f"wrote {len(reports)} report(s) to {args.out}")


def _run_many(args) -> list[ErrorReport]:
    reports = []
    for alpha in _parse_alphas(args.alpha):
        reports.append(run(_config_from_args(args, alpha=alpha)))
    return reports


def _cmd_derivative(args) -> int:
    case = get_case(args.example)
    if not isinstance(case, DerivativeCase):
        raise ValueError(f"{args.example!r} is not a derivative example")
    _emit(_run_many(args), args)
    return EXIT_OK


def _cmd_collocation(args, kind: str) -> int:
    case = get_case(args.example)
    if isinstance(case, DerivativeCase):
        raise ValueError(f"{args.example!r} is not a {kind} example")
    probe = case.make_problem()
    if probe.kind != kind:
        raise ValueError(f"{args.example!r} is not a {kind} example")
    _emit(_run_many(args), args)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    base = _config_from_args(args, alpha=_parse_alphas(args.alpha)[0])
    if args.vary in ("node_family",):
        values = [str(v) for v in args.values.split(",")]
    elif args.vary in ("alpha", "omega"):
        values = [float(v) for v in args.values.split(",")]
    else:
        values = [int(v) for v in args.values.split(",")]
    reports = sweep(base, args.vary, values)
    _emit(reports, args)
    return EXIT_OK


def _cmd_list(_args) -> int:
    for example_id, case in sorted(registry().items()):
        kind = ("derivative" if isinstance(case, DerivativeCase)
                else case.make_problem().kind)
        print(f"{example_id:12s} {kind}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multishep",
        description="Fractional derivative approximation and Bagley-Torvik "
                    "collocation experiments")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derivative", help="approximate a Caputo derivative")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_derivative)

    p = sub.add_parser("bvp", help="solve a boundary value problem")
    _add_config_flags(p)
    p.set_defaults(func=lambda a: _cmd_collocation(a, "boundary"))

    p = sub.add_parser("ivp", help="solve an initial value problem")
    _add_config_flags(p)
    p.set_defaults(func=lambda a: _cmd_collocation(a, "initial"))

    p = sub.add_parser("sweep", help="re-run an example over a parameter range")
    _add_config_flags(p)
    p.add_argument("--vary", required=True,
                   help="parameter to vary (d, q, n, n_e, alpha, omega, "
                        "node_family)")
    p.add_argument("--values", required=True, help="comma-separated values")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("list", help="list the registered examples")
    p.set_defaults(func=_cmd_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, AccuracyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SolverError as exc:
        print(f"solver failure: {exc} (cond={exc.cond:.3e})", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
