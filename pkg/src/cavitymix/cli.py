"""Command line front end.

Two subcommands:

    cavitymix run <scenario.yaml> [--out PATH] [--nmax N] [--tol T]
    cavitymix validate <scenario.yaml>

Exit codes: 0 on success, 1 for parse or validation errors (diagnostics
on stderr, one per line), 2 for numerical failures inside an otherwise
valid run (quadrature not converging, symplectic spectrum not pairing).
"""

from __future__ import annotations

import argparse
import sys

from .gaussian import SymplecticPairingError
from .profiles import QuadratureError
from .scenarios import DEFAULT_TOL, ScenarioError, load_scenario, run_scenario


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cavitymix",
        description="Mode mixing and entanglement in a rigid accelerated cavity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a scenario file and write its CSV result")
    run_p.add_argument("scenario", help="path to a YAML scenario file")
    run_p.add_argument("--out", help="output CSV path (overrides the scenario's output block)")
    run_p.add_argument("--nmax", type=int, help="override the cavity mode truncation")
    run_p.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help=f"quadrature tolerance for evolve scenarios (default {DEFAULT_TOL:g})",
    )

    val_p = sub.add_parser("validate", help="check a scenario file without running it")
    val_p.add_argument("scenario", help="path to a YAML scenario file")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)

    try:
        scenario = load_scenario(args.scenario, n_max=getattr(args, "nmax", None))
    except ScenarioError as exc:
        for line in exc.diagnostics:
            print(f"error: {line}", file=sys.stderr)
        return 1

    if args.command == "validate":
        print(f"ok: {args.scenario} is a valid {scenario.kind} scenario")
        return 0

    try:
        table = run_scenario(scenario, tol=args.tol)
    except QuadratureError as exc:
        print(f"numerical failure (profiles quadrature): {exc}", file=sys.stderr)
        return 2
    except SymplecticPairingError as exc:
        print(f"numerical failure (gaussian spectrum): {exc}", file=sys.stderr)
        return 2

    out_path = args.out if args.out is not None else scenario.output_path
    table.write(out_path)
    print(f"{scenario.kind}: wrote {len(table.rows)} rows to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
