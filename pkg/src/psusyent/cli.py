"""Command-line front end: verification, single-state inspection, grid sweeps.

Exit codes: 0 success, 1 check or I/O failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .coherent import (
    KIND_OPTIMAL,
    KIND_Z_EXACT,
    AlphaProfile,
    build_state,
)
from .entanglement import (
    concurrence_closed_form,
    concurrence_optimal,
    concurrence_pure,
    concurrence_schmidt_oracle,
    concurrence_wootters,
    density_from_amplitudes,
    entanglement_of_formation,
)
from .errors import NoRealSolutionError
from .model import build_annihilator, verify_eigenstate
from .verify import run_all

__all__ = ["main"]

CSV_HEADER = "p,abs_z,concurrence,one_minus_c,eof"


def _fmt(x: float) -> str:
    """Fixed 12-significant-digit formatting for reproducible CSV output."""
    return f"{x:.12g}"


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = run_all(args.p_max, args.tol)
    width = max(len(r.name) for r in reports)
    for r in reports:
        status = "ok  " if r.ok else "FAIL"
        print(
            f"{status} {r.name:<{width}}  checks={r.passed + r.failed:<4d} "
            f"failed={r.failed:<3d} max_residual={r.max_residual:.3e} "
            f"time={r.wall_time:.3f}s"
        )
    failed = sum(r.failed for r in reports)
    print(f"{'PASS' if failed == 0 else 'FAIL'}: {len(reports)} suites, {failed} failed checks")
    return 0 if failed == 0 else 1


def _cmd_state(args: argparse.Namespace) -> int:
    try:
        with open(args.profile, encoding="utf-8") as fh:
            profile_obj = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read profile: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: invalid profile JSON: {exc}", file=sys.stderr)
        return 2

    z = complex(args.z_re, args.z_im)
    try:
        profile = AlphaProfile.from_dict(profile_obj)
        state = build_state(args.p, z, profile)
        a_op = build_annihilator(args.p, state.n_max)
        residual = verify_eigenstate(a_op, state.full_vector, z)
        routes = {
            "closed-form": concurrence_closed_form(args.p, z, profile).value,
            "pure-amplitude": concurrence_pure(state.qubit_amps),
            "wootters-4x4": concurrence_wootters(
                density_from_amplitudes(state.qubit_amps)
            ).value,
            "schmidt-oracle": concurrence_schmidt_oracle(state),
        }
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    record = {
        "p": args.p,
        "z": [z.real, z.imag],
        "q_norm": state.q_norm,
        "qubit_amps": {
            name: [amp.real, amp.imag]
            for name, amp in zip(("a00", "a01", "a10", "a11"), state.qubit_amps)
        },
        "concurrence": routes,
        "eof": entanglement_of_formation(routes["closed-form"]),
        "eigenstate_residual": residual,
    }
    json.dump(record, sys.stdout, indent=2)
    print()
    return 0


def _grid_value(p: int, z_abs: float, kind: str, m: int) -> float:
    if kind == KIND_OPTIMAL:
        return concurrence_optimal(p, z_abs)
    # z-dependent-exact: emit the family's value where its rule is defined
    if not 1 <= m <= p - 1:
        return math.nan
    try:
        profile = AlphaProfile.z_dependent_exact(p, m, 1.0)
        return concurrence_closed_form(p, z_abs, profile).value
    except NoRealSolutionError:
        return math.nan


def _cmd_grid(args: argparse.Namespace) -> int:
    n_steps = int(math.floor((args.z_max - args.z_min) / args.z_step + 1e-9)) + 1
    lines = [CSV_HEADER]
    for p in range(args.p_min, args.p_max + 1):
        for i in range(n_steps):
            z_abs = args.z_min + i * args.z_step
            value = _grid_value(p, z_abs, args.profile_kind, args.m)
            eof = entanglement_of_formation(value) if not math.isnan(value) else math.nan
            lines.append(
                f"{p},{_fmt(z_abs)},{_fmt(value)},{_fmt(1.0 - value)},{_fmt(eof)}"
            )
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(lines) - 1} rows to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psusyent",
        description=(
            "Coherent states of the parasupersymmetric oscillator and their "
            "boson-parafermion entanglement."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the self-verification suites")
    p_verify.add_argument("--p-max", type=int, default=4, help="largest order checked (1..8)")
    p_verify.add_argument("--tol", type=float, default=1e-8, help="residual threshold")

    p_state = sub.add_parser("state", help="inspect a single coherent state as JSON")
    p_state.add_argument("--p", type=int, required=True, help="parafermion order")
    p_state.add_argument("--z-re", type=float, default=0.0, help="Re z")
    p_state.add_argument("--z-im", type=float, default=0.0, help="Im z")
    p_state.add_argument("--profile", required=True, help="path to a profile JSON file")

    p_grid = sub.add_parser("grid", help="emit a concurrence CSV over (p, |z|)")
    p_grid.add_argument("--p-min", type=int, default=1)
    p_grid.add_argument("--p-max", type=int, default=6)
    p_grid.add_argument("--z-min", type=float, default=0.0)
    p_grid.add_argument("--z-max", type=float, default=5.0)
    p_grid.add_argument("--z-step", type=float, default=0.05)
    p_grid.add_argument(
        "--profile-kind",
        choices=(KIND_OPTIMAL, KIND_Z_EXACT),
        default=KIND_OPTIMAL,
        help="coefficient family used for the sweep",
    )
    p_grid.add_argument(
        "--m", type=int, default=1, help="exceptional index for z-dependent-exact"
    )
    p_grid.add_argument("--out", required=True, help="output CSV path")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        if not 1 <= args.p_max <= 8:
            parser.error(f"--p-max must be within 1..8, got {args.p_max}")
        if args.tol <= 0:
            parser.error("--tol must be positive")
        return _cmd_verify(args)
    if args.command == "state":
        if args.p < 1:
            parser.error(f"--p must be >= 1, got {args.p}")
        return _cmd_state(args)
    if args.command == "grid":
        if args.p_min < 1 or args.p_min > args.p_max:
            parser.error("need 1 <= --p-min <= --p-max")
        if args.z_step <= 0 or args.z_min < 0 or args.z_max < args.z_min:
            parser.error("need --z-step > 0 and 0 <= --z-min <= --z-max")
        return _cmd_grid(args)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
