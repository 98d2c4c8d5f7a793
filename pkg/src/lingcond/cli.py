"""Command-line interface.

Subcommands: generate, sample, fit, lattice, grid, sweep-threshold,
sample-complexity. Exit codes: 0 success, 1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .exceptions import NumericalError
from .graphs import DirectedGraph
from .harness import (
    GridConfig,
    SampleComplexityConfig,
    ThresholdSweepConfig,
    run_grid,
    run_sample_complexity,
    run_threshold_sweep,
    summarize_grid,
    write_summary_json,
)
from .ica import IcaOptions, NONLINEARITIES
from .lattice import valid_dag_coarsenings
from .recover import MODES, recover_condensation
from .scm import (
    generate_scm,
    load_samples_csv,
    load_scm_json,
    sample,
    save_samples_csv,
    save_scm_json,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through 1 instead
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="lingcond", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a random cyclic SCM (JSON out)")
    gen.add_argument("--d", type=int, required=True)
    gen.add_argument("--kappa", type=int, required=True)
    gen.add_argument("--lambda", dest="lam", type=float, required=True)
    gen.add_argument("--weight-low", type=float, default=0.5)
    gen.add_argument("--weight-high", type=float, default=0.95)
    gen.add_argument("--regime", choices=("stable", "unstable"), default="stable")
    gen.add_argument("--noise", choices=("laplace", "exponential-centered"),
                     default="laplace")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)

    smp = sub.add_parser("sample", help="draw observations from an SCM (CSV out)")
    smp.add_argument("--scm", required=True)
    smp.add_argument("--n", type=int, required=True)
    smp.add_argument("--seed", type=int, default=0)
    smp.add_argument("--out", required=True)

    fit = sub.add_parser("fit", help="recover a condensation from samples (JSON out)")
    fit.add_argument("--data", required=True)
    fit.add_argument("--tau", type=float, default=0.1)
    fit.add_argument("--eta", type=float, default=1e-3)
    fit.add_argument("--mode", choices=MODES, default="hungarian")
    fit.add_argument("--nonlinearity", choices=NONLINEARITIES, default="logcosh")
    fit.add_argument("--tol", type=float, default=1e-6)
    fit.add_argument("--max-iter", type=int, default=500)
    fit.add_argument("--restarts", type=int, default=3)
    fit.add_argument("--seed", type=int, default=0)
    fit.add_argument("--enum-floor", type=float, default=0.1)
    fit.add_argument("--enum-cap", type=int, default=20000)
    fit.add_argument("--out")

    lat = sub.add_parser("lattice", help="exhaustive DAG-coarsening report (JSON)")
    lat.add_argument("--graph", required=True)
    lat.add_argument("--out")

    for name, helptext in (
        ("grid", "run the main experiment grid"),
        ("sweep-threshold", "sweep tau over one cell"),
        ("sample-complexity", "fixed-SCM recovery-rate study"),
    ):
        cmd = sub.add_parser(name, help=helptext)
        cmd.add_argument("--config", required=True)
        cmd.add_argument("--out", required=True)
        cmd.add_argument("--summary")
        cmd.add_argument("--workers", type=int, default=1)

    return parser


def _load_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _emit(payload: dict, out) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dispatch(args) -> int:
    if args.command == "generate":
        scm = generate_scm(
            args.d, args.kappa, args.lam, args.weight_low, args.weight_high,
            args.regime, seed=args.seed, noise_family=args.noise,
        )
        save_scm_json(args.out, scm)
        return 0

    if args.command == "sample":
        scm = load_scm_json(args.scm)
        save_samples_csv(args.out, sample(scm, args.n, seed=args.seed))
        return 0

    if args.command == "fit":
        x = load_samples_csv(args.data)
        opts = IcaOptions(
            nonlinearity=args.nonlinearity, tolerance=args.tol,
            max_iterations=args.max_iter, restarts=args.restarts, seed=args.seed,
        )
        result = recover_condensation(
            x, tau=args.tau, eta=args.eta, ica_opts=opts, mode=args.mode,
            enum_floor=args.enum_floor, enum_cap=args.enum_cap,
        )
        _emit(result.to_json_dict(), args.out)
        return 0

    if args.command == "lattice":
        graph = DirectedGraph.from_json_dict(_load_json(args.graph))
        _emit(valid_dag_coarsenings(graph).to_json_dict(), args.out)
        return 0

    if args.command == "grid":
        cfg = GridConfig.from_json_dict(_load_json(args.config))
        records = run_grid(cfg, out_path=args.out, workers=args.workers)
        if args.summary:
            write_summary_json(args.summary, summarize_grid(records))
        return 0

    if args.command == "sweep-threshold":
        cfg = ThresholdSweepConfig.from_json_dict(_load_json(args.config))
        records = run_threshold_sweep(cfg, out_path=args.out, workers=args.workers)
        if args.summary:
            write_summary_json(args.summary, summarize_grid(records))
        return 0

    if args.command == "sample-complexity":
        cfg = SampleComplexityConfig.from_json_dict(_load_json(args.config))
        _, summary = run_sample_complexity(cfg, out_path=args.out, workers=args.workers)
        if args.summary:
            write_summary_json(args.summary, summary)
        return 0

    raise _UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
