"""Command-line interface.

Subcommands: amp, prob, operator, eigvec, expect, simulate, verify.

Angles on the command line are degrees by default (--rad switches to
radians); angles inside scenario files are always degrees. Degree input is
converted to radians at exactly one point, so ``--deg X`` and
``--rad <X*pi/180>`` agree bit-for-bit.

Output modes: a human-readable table (default) and ``--machine``:
one record per line of space-separated ``key=value`` fields, floats with
17 significant digits (round-trip safe), complex values as ``re+imi``.

Exit codes: 0 success, 2 usage error, 3 unreadable or invalid scenario
file (including the stage cap), 4 invariant-suite failure in ``verify``.

Environment overrides (flags take precedence): ``POLAMP_TOLERANCE`` for
the numeric tolerance, ``POLAMP_STAGE_CAP`` for the simulation stage cap.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from .amplitudes import amplitude, probability
from .directions import DEFAULT_TOLERANCE, Branch, BranchLabel, Direction
from .operators import (
    Observable2,
    eigenvector_states,
    expectation_closed,
    observable_matrix,
)
from .scenario import ScenarioError, load_scenario_file
from .simulate import (
    DEFAULT_STAGE_CAP,
    StageCapError,
    exact_distribution,
    sample,
    sequence_to_str,
)
from .verify import DEFAULT_DRAWS, run_all

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FILE = 3
EXIT_VERIFY = 4

ENV_TOLERANCE = "POLAMP_TOLERANCE"
ENV_STAGE_CAP = "POLAMP_STAGE_CAP"

DEFAULT_TRIALS = 100_000


def _seed_u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0.0:
        raise argparse.ArgumentTypeError("must be a positive number")
    return value


def _fmt_float(x: float, machine: bool) -> str:
    return f"{x:.17g}" if machine else f"{x:.12g}"


def _fmt_complex(z: complex, machine: bool) -> str:
    if machine:
        return f"{z.real:.17g}{z.imag:+.17g}i"
    return f"{z.real:.10g}{z.imag:+.10g}i"


def _angle(value: float, degrees: bool) -> float:
    """The single degree-to-radian conversion point."""
    return math.radians(value) if degrees else value


def _resolve_tolerance(args, file_value: float | None = None) -> float:
    if getattr(args, "tolerance", None) is not None:
        return args.tolerance
    env = os.environ.get(ENV_TOLERANCE)
    if env is not None:
        return float(env)
    if file_value is not None:
        return file_value
    return DEFAULT_TOLERANCE


def _resolve_stage_cap(args) -> int:
    if getattr(args, "stage_cap", None) is not None:
        return args.stage_cap
    env = os.environ.get(ENV_STAGE_CAP)
    if env is not None:
        return int(env)
    return DEFAULT_STAGE_CAP


def _label(args, prefix: str, degrees: bool) -> BranchLabel:
    theta = _angle(getattr(args, f"theta_{prefix}"), degrees)
    alpha = _angle(getattr(args, f"alpha_{prefix}"), degrees)
    return BranchLabel(Direction(theta, alpha), getattr(args, f"branch_{prefix}"))


def _direction(args, prefix: str, degrees: bool) -> Direction:
    theta = _angle(getattr(args, f"theta_{prefix}"), degrees)
    alpha = _angle(getattr(args, f"alpha_{prefix}"), degrees)
    return Direction(theta, alpha)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_amp(args) -> int:
    degrees = not args.rad
    z = amplitude(_label(args, "a", degrees), _label(args, "b", degrees))
    if args.machine:
        print(
            f"amp re={z.real:.17g} im={z.imag:.17g} modulus2={abs(z) ** 2:.17g}"
        )
    else:
        print(f"amplitude   = {_fmt_complex(z, False)}")
        print(f"|amplitude|^2 = {_fmt_float(abs(z) ** 2, False)}")
    return EXIT_OK


def cmd_prob(args) -> int:
    degrees = not args.rad
    p = probability(_label(args, "a", degrees), _label(args, "b", degrees))
    if args.machine:
        print(f"prob value={p:.17g}")
    else:
        print(f"probability = {_fmt_float(p, False)}")
    return EXIT_OK


def _eigvec_lines(obs: Observable2, machine: bool) -> list[str]:
    xi_plus, xi_minus = eigenvector_states(obs.measure_dir, obs.basis_dir)
    m = obs.as_array()
    lines = []
    for sign, xi, r in (("+", xi_plus, obs.r_plus), ("-", xi_minus, obs.r_minus)):
        v = xi.as_array()
        residual = float(np.max(np.abs(m @ v - r * v)))
        if machine:
            lines.append(
                f"eigvec branch={sign} eigenvalue={r:.17g}"
                f" c_plus={_fmt_complex(xi.c_plus, True)}"
                f" c_minus={_fmt_complex(xi.c_minus, True)}"
                f" residual={residual:.17g}"
            )
        else:
            lines.append(
                f"eigvec {sign} (eigenvalue {_fmt_float(r, False)}): "
                f"({_fmt_complex(xi.c_plus, False)}, {_fmt_complex(xi.c_minus, False)})"
                f"  residual = {residual:.3e}"
            )
    return lines


def cmd_operator(args) -> int:
    degrees = not args.rad
    obs = observable_matrix(
        _direction(args, "b", degrees), _direction(args, "c", degrees), args.r_plus, args.r_minus
    )
    if args.machine:
        print(
            "matrix"
            f" m11={_fmt_complex(obs.m11, True)} m12={_fmt_complex(obs.m12, True)}"
            f" m21={_fmt_complex(obs.m21, True)} m22={_fmt_complex(obs.m22, True)}"
            f" r_plus={obs.r_plus:.17g} r_minus={obs.r_minus:.17g}"
        )
    else:
        print("observable matrix:")
        print(f"  [ {_fmt_complex(obs.m11, False)}  {_fmt_complex(obs.m12, False)} ]")
        print(f"  [ {_fmt_complex(obs.m21, False)}  {_fmt_complex(obs.m22, False)} ]")
        print(
            f"trace = {_fmt_float(obs.trace.real, False)}"
            f"  det = {_fmt_float(obs.determinant.real, False)}"
        )
    for line in _eigvec_lines(obs, args.machine):
        print(line)
    return EXIT_OK


def cmd_eigvec(args) -> int:
    degrees = not args.rad
    obs = observable_matrix(
        _direction(args, "b", degrees), _direction(args, "c", degrees), 1.0, -1.0
    )
    for line in _eigvec_lines(obs, args.machine):
        print(line)
    return EXIT_OK


def cmd_expect(args) -> int:
    degrees = not args.rad
    initial = _label(args, "a", degrees)
    value = expectation_closed(initial, _direction(args, "b", degrees))
    if args.machine:
        print(f"expect value={value:.17g}")
    else:
        print(f"expectation = {_fmt_float(value, False)}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    try:
        loaded = load_scenario_file(args.scenario)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE

    tolerance = _resolve_tolerance(args, loaded.tolerance)
    stage_cap = _resolve_stage_cap(args)
    try:
        dist = exact_distribution(loaded.scenario, stage_cap=stage_cap)
    except StageCapError as exc:
        print(f"error: {args.scenario}: {exc}", file=sys.stderr)
        return EXIT_FILE

    total_dev = abs(dist.total() - 1.0)
    if total_dev > tolerance:
        print(f"warning: distribution sums to 1 {total_dev:+.3e}", file=sys.stderr)

    machine = args.machine
    if not machine:
        print(f"exact distribution over {dist.n_stages} stage(s):")
    for seq, p in dist.items():
        if machine:
            print(f"distribution seq={sequence_to_str(seq)} p={p:.17g}")
        else:
            print(f"  {sequence_to_str(seq)}  p = {_fmt_float(p, False)}")

    if args.exact:
        return EXIT_OK

    seed = args.seed if args.seed is not None else (loaded.seed if loaded.seed is not None else 0)
    trials = (
        args.trials
        if args.trials is not None
        else (loaded.trials if loaded.trials is not None else DEFAULT_TRIALS)
    )
    report = sample(loaded.scenario, seed=seed, trials=trials, stage_cap=stage_cap)
    if not machine:
        print(f"monte carlo: seed={report.seed} trials={report.trials}")
    for (seq, count), p in zip(report.items(), dist.probs):
        expected = report.trials * float(p)
        spread = math.sqrt(report.trials * float(p) * (1.0 - float(p)))
        sigma = (abs(count - expected) / spread) if spread > 0 else 0.0
        if machine:
            print(
                f"sample seq={sequence_to_str(seq)} count={count}"
                f" expected={expected:.17g} sigma={sigma:.17g}"
            )
        else:
            print(
                f"  {sequence_to_str(seq)}  count = {count}"
                f"  expected = {_fmt_float(expected, False)}  deviation = {sigma:.2f} sigma"
            )
    if machine:
        print(
            f"report seed={report.seed} trials={report.trials}"
            f" max_sigma={report.max_abs_deviation_sigma:.17g}"
        )
    else:
        print(f"max deviation = {report.max_abs_deviation_sigma:.2f} sigma")
    return EXIT_OK


def cmd_verify(args) -> int:
    tolerance = _resolve_tolerance(args)
    report = run_all(draws=args.draws, seed=args.seed, tolerance=tolerance)
    machine = args.machine
    for s in report.suites:
        if machine:
            print(
                f"suite name={s.name} draws={s.draws} max_residual={s.max_residual:.17g}"
                f" tolerance={s.tolerance:.17g} pass={int(s.passed)}"
            )
        else:
            flag = "PASS" if s.passed else "FAIL"
            print(
                f"{flag} {s.name:<26} max residual {s.max_residual:.3e}"
                f" < {s.tolerance:.0e} ({s.draws} draws)"
            )
    for e in report.errata:
        if machine:
            print(
                f"erratum equation={e.equation} element={e.element}"
                f" paper={_fmt_complex(e.paper_value, True)}"
                f" derived={_fmt_complex(e.derived_value, True)}"
                f" max_abs_diff={e.max_abs_diff:.17g}"
            )
        else:
            print(
                f"ERRATUM {e.equation} {e.element}: stated {_fmt_complex(e.paper_value, False)}"
                f" vs derived {_fmt_complex(e.derived_value, False)}"
                f" (max |diff| {e.max_abs_diff:.3e})"
            )
    n_pass = sum(s.passed for s in report.suites)
    if machine:
        print(
            f"verify pass={int(report.passed)} suites={len(report.suites)}"
            f" failed={len(report.suites) - n_pass} errata={len(report.errata)}"
        )
    else:
        verdict = "all invariant suites pass" if report.passed else "INVARIANT FAILURE"
        print(
            f"{verdict} ({n_pass}/{len(report.suites)});"
            f" {len(report.errata)} errata recorded"
        )
    return EXIT_OK if report.passed else EXIT_VERIFY


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_unit_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--deg", action="store_true", default=True,
        help="angles are degrees (default)",
    )
    group.add_argument(
        "--rad", action="store_true", default=False,
        help="angles are radians",
    )


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--machine", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--tolerance", type=_positive_float, default=None,
        help=f"numeric tolerance (default: ${ENV_TOLERANCE} or {DEFAULT_TOLERANCE})",
    )


def _add_label_args(parser: argparse.ArgumentParser, prefix: str) -> None:
    parser.add_argument(f"theta_{prefix}", type=float, help=f"plane angle of direction {prefix}")
    parser.add_argument(f"alpha_{prefix}", type=float, help=f"relative phase of direction {prefix}")
    parser.add_argument(
        f"branch_{prefix}", type=Branch.from_token, help=f"branch of direction {prefix}: + or -"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polamp",
        description="Generalized polarization amplitudes, operators and analyzer-chain simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("amp", help="transition amplitude between two branch labels")
    _add_label_args(p, "a")
    _add_label_args(p, "b")
    _add_unit_flags(p)
    _add_common_flags(p)
    p.set_defaults(handler=cmd_amp)

    p = sub.add_parser("prob", help="transition probability between two branch labels")
    _add_label_args(p, "a")
    _add_label_args(p, "b")
    _add_unit_flags(p)
    _add_common_flags(p)
    p.set_defaults(handler=cmd_prob)

    p = sub.add_parser("operator", help="observable matrix, eigenvectors and residuals")
    p.add_argument("theta_b", type=float, help="plane angle of the measured direction")
    p.add_argument("alpha_b", type=float, help="relative phase of the measured direction")
    p.add_argument("theta_c", type=float, help="plane angle of the basis direction")
    p.add_argument("alpha_c", type=float, help="relative phase of the basis direction")
    p.add_argument("--r-plus", type=float, default=1.0, help="value on the parallel branch")
    p.add_argument("--r-minus", type=float, default=-1.0, help="value on the perpendicular branch")
    _add_unit_flags(p)
    _add_common_flags(p)
    p.set_defaults(handler=cmd_operator)

    p = sub.add_parser("eigvec", help="eigenvector pair of the polarization operator")
    p.add_argument("theta_b", type=float, help="plane angle of the measured direction")
    p.add_argument("alpha_b", type=float, help="relative phase of the measured direction")
    p.add_argument("theta_c", type=float, help="plane angle of the basis direction")
    p.add_argument("alpha_c", type=float, help="relative phase of the basis direction")
    _add_unit_flags(p)
    _add_common_flags(p)
    p.set_defaults(handler=cmd_eigvec)

    p = sub.add_parser("expect", help="polarization expectation value")
    _add_label_args(p, "a")
    p.add_argument("theta_b", type=float, help="plane angle of the measured direction")
    p.add_argument("alpha_b", type=float, help="relative phase of the measured direction")
    _add_unit_flags(p)
    _add_common_flags(p)
    p.set_defaults(handler=cmd_expect)

    p = sub.add_parser("simulate", help="exact and Monte Carlo analyzer-chain statistics")
    p.add_argument("scenario", help="scenario file (JSON, angles in degrees)")
    p.add_argument("--seed", type=_seed_u64, default=None, help="RNG seed (overrides the file)")
    p.add_argument("--trials", type=_positive_int, default=None, help="trial count (overrides the file)")
    p.add_argument("--exact", action="store_true", help="exact distribution only, no sampling")
    p.add_argument(
        "--stage-cap", type=_positive_int, default=None,
        help=f"maximum stage count (default: ${ENV_STAGE_CAP} or {DEFAULT_STAGE_CAP})",
    )
    _add_common_flags(p)
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("verify", help="run every invariant suite and report errata")
    p.add_argument("--draws", type=_non_negative_int, default=DEFAULT_DRAWS, help="random draws per suite")
    p.add_argument("--seed", type=_seed_u64, default=0, help="RNG seed for the draws")
    _add_common_flags(p)
    p.set_defaults(handler=cmd_verify)

    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
