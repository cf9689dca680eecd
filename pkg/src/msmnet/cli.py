"""Command-line entry point.

Subcommands: clustering-function, avg-clustering, degree-fractions,
tail-compare, annealed-curve. Exit codes: 0 success, 2 validation error,
3 quadrature failure.
"""

from __future__ import annotations

import argparse
import sys

from .experiments import (
    PAPER_ALPHAS,
    PAPER_N_VALUES,
    PAPER_REALIZATIONS,
    ExperimentKind,
    ExperimentManifest,
    Mode,
    ValidationError,
    run_annealed_curve,
    run_average_clustering_sweep,
    run_clustering_function,
    run_degree_fractions_sweep,
    run_tail_comparison,
)
from .theory import QuadratureError
from .weights import WeightSource
from pathlib import Path

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_QUADRATURE = 3


def _n_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad n list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msmnet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=0.5, help="tail exponent in (0,1)")
    common.add_argument("--n", type=_n_list, default=[1000], help="comma-separated sizes")
    common.add_argument("--reps", type=int, default=1, help="realizations per size")
    common.add_argument("--seed", type=int, default=2024, help="64-bit master seed")
    common.add_argument("--mode", choices=[m.value for m in Mode], default="redraw")
    common.add_argument("--source", choices=[s.value for s in WeightSource], default="pareto")
    common.add_argument("--out", type=Path, default=Path("out"), help="output directory")
    common.add_argument("--tol", type=float, default=1e-7, help="quadrature tolerance")
    common.add_argument("--preset", choices=["paper"], default=None)

    sub.add_parser("clustering-function", parents=[common])
    sub.add_parser("avg-clustering", parents=[common])
    sub.add_parser("degree-fractions", parents=[common])
    sub.add_parser("tail-compare", parents=[common])
    curve = sub.add_parser("annealed-curve", parents=[common])
    curve.add_argument("--a-min", type=float, default=1e-2)
    curve.add_argument("--a-max", type=float, default=1e2)
    curve.add_argument("--points", type=int, default=60)
    return parser


def _manifest(args, kind: ExperimentKind, alpha=None, n_values=None, reps=None,
              source=None, out=None) -> ExperimentManifest:
    return ExperimentManifest(
        experiment=kind,
        alpha=args.alpha if alpha is None else alpha,
        n_values=list(args.n if n_values is None else n_values),
        realizations=args.reps if reps is None else reps,
        mode=Mode(args.mode),
        source=WeightSource(args.source if source is None else source),
        seed=args.seed,
        out_dir=args.out if out is None else out,
        tol=args.tol,
    )


def _run(args) -> int:
    cmd = args.command
    if cmd == "clustering-function":
        if args.preset == "paper":
            for alpha in PAPER_ALPHAS:
                for n in PAPER_N_VALUES:
                    sub_out = args.out / f"alpha{alpha:g}_n{n}"
                    m = _manifest(args, ExperimentKind.CLUSTERING_FUNCTION,
                                  alpha=alpha, n_values=[n], out=sub_out)
                    run_clustering_function(m)
        else:
            for n in args.n:
                sub_out = args.out if len(args.n) == 1 else args.out / f"n{n}"
                m = _manifest(args, ExperimentKind.CLUSTERING_FUNCTION, n_values=[n],
                              out=sub_out)
                run_clustering_function(m)
    elif cmd == "avg-clustering":
        n_values = list(PAPER_N_VALUES) if args.preset == "paper" else args.n
        reps = PAPER_REALIZATIONS if args.preset == "paper" else args.reps
        m = _manifest(args, ExperimentKind.AVERAGE_CLUSTERING_SWEEP,
                      n_values=n_values, reps=reps)
        run_average_clustering_sweep(m)
    elif cmd == "degree-fractions":
        n_values = list(PAPER_N_VALUES) if args.preset == "paper" else args.n
        reps = PAPER_REALIZATIONS if args.preset == "paper" else args.reps
        sources = list(WeightSource) if args.preset == "paper" else [WeightSource(args.source)]
        for source in sources:
            out = args.out / source.value if len(sources) > 1 else args.out
            m = _manifest(args, ExperimentKind.DEGREE_FRACTIONS_SWEEP,
                          n_values=n_values, reps=reps, source=source.value, out=out)
            run_degree_fractions_sweep(m)
    elif cmd == "tail-compare":
        alphas = PAPER_ALPHAS if args.preset == "paper" else (args.alpha,)
        n_values = [1_000_000] if args.preset == "paper" else args.n
        for alpha in alphas:
            out = args.out / f"alpha{alpha:g}" if len(alphas) > 1 else args.out
            m = _manifest(args, ExperimentKind.TAIL_COMPARISON, alpha=alpha,
                          n_values=n_values, out=out)
            run_tail_comparison(m)
    elif cmd == "annealed-curve":
        m = _manifest(args, ExperimentKind.ANNEALED_CURVE_ONLY)
        run_annealed_curve(m, a_min=args.a_min, a_max=args.a_max, points=args.points)
    else:  # pragma: no cover - argparse enforces choices
        raise ValidationError(f"unknown command {cmd}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except QuadratureError as exc:
        print(
            f"quadrature failure: {exc} (best estimate {exc.best_estimate!r}, "
            f"error {exc.error_estimate!r})",
            file=sys.stderr,
        )
        return EXIT_QUADRATURE


def entrypoint() -> None:  # pragma: no cover - thin wrapper
    raise SystemExit(main())


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
