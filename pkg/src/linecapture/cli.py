"""Command-line harness: simulate, sweep, verify, and trace.

All numeric flags accept exact rationals (``1/2``) or integers; reports print
rationals as ``p/q`` and CSV files carry floats at 15 significant digits with
exact ``p/q`` duplicates for the round-trippable columns.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import theory
from .acceptance import SUITES, run_criteria
from .scenario import (
    Direction,
    InvalidScenarioError,
    KnowledgeModel,
    Scenario,
    target_motion,
    validate_for_model,
    visible_knowledge,
)
from .strategies import (
    AlgorithmId,
    CaptureResult,
    ConfigurationError,
    StrategySpec,
    competitive_ratio,
    default_parameter,
    select_algorithm,
    simulate,
)

_EXIT_OK = 0
_EXIT_VERIFY_FAIL = 1
_EXIT_USAGE = 2
_EXIT_IO = 3


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _side(text: str) -> int:
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError(f"side must be +1 or -1, got {text!r}")


def _pq(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _flt(x: Union[Fraction, float]) -> str:
    return f"{float(x):.15g}"


def _add_scenario_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", required=True, choices=[m.value for m in KnowledgeModel])
    p.add_argument("--direction", required=True,
                   choices=[d.value for d in Direction])
    p.add_argument("--d", required=True, type=_frac, help="initial distance")
    p.add_argument("--v", required=True, type=_frac, help="target speed")
    p.add_argument("--side", type=_side, default=1, help="target side, +1 or -1")
    p.add_argument("--alg", choices=[a.value for a in AlgorithmId],
                   help="override the dispatched algorithm")
    p.add_argument("--first-dir", type=_side, default=1,
                   help="strategy's first search direction, +1 or -1")
    p.add_argument("--a", type=_frac, help="zigzag expansion ratio")
    p.add_argument("--u", type=_frac, help="opposite-direction cruise speed")


def _build_run(args: argparse.Namespace) -> tuple[StrategySpec, Scenario]:
    model = KnowledgeModel(args.model)
    direction = Direction(args.direction)
    scenario = Scenario(d=args.d, v=args.v, direction=direction, side=args.side)
    validate_for_model(scenario, model)
    know = visible_knowledge(model, scenario)
    if args.alg is not None:
        alg = AlgorithmId(args.alg)
        ratio_a, cruise_u = args.a, args.u
        if ratio_a is None and alg in (
            AlgorithmId.ND_AWAY_ZIGZAG, AlgorithmId.ND_TOWARD_ZIGZAG
        ):
            ratio_a = default_parameter(alg, know.v)
        if cruise_u is None and alg in (
            AlgorithmId.ND_AWAY_OPPOSITE, AlgorithmId.ND_TOWARD_OPPOSITE
        ):
            cruise_u = default_parameter(alg, know.v)
        spec = StrategySpec(
            alg,
            first_direction=args.first_dir,
            ratio_a=ratio_a,
            cruise_u=cruise_u,
        )
    else:
        base = select_algorithm(model, direction, know)
        spec = StrategySpec(
            base.alg,
            first_direction=args.first_dir,
            ratio_a=args.a if args.a is not None else base.ratio_a,
            cruise_u=args.u if args.u is not None else base.cruise_u,
        )
    return spec, scenario


def cmd_simulate(args: argparse.Namespace) -> int:
    spec, scenario = _build_run(args)
    result = simulate(spec, scenario)
    report = {
        "alg": spec.alg.value,
        "capture_time": _pq(result.capture_time),
        "T1": _pq(result.found_time),
        "T2": _pq(result.fetch_time),
        "T3": _pq(result.chase_time),
        "cr": _pq(competitive_ratio(result, scenario)),
        "turns_r1": result.turns_r1,
        "turns_r2": result.turns_r2,
        "iteration_k": result.iteration,
        "capture_position": _pq(result.capture_position),
    }
    for key, value in report.items():
        print(f"{key}={value}")
    return _EXIT_OK


_SWEEP_HEADER = [
    "model", "direction", "alg", "v", "d", "side", "eps_rel",
    "capture_time", "cr", "cr_bound", "turns_total", "iteration_k",
    "capture_time_exact", "cr_exact",
]


def _cr_bound_for(spec: StrategySpec, scenario: Scenario) -> Optional[float]:
    if spec.alg is AlgorithmId.NS_AWAY:
        return theory.ns_away_cr_bound(float(scenario.v))
    if spec.alg is AlgorithmId.NK_AWAY:
        return theory.nk_away_cr_bound(float(scenario.d), float(scenario.v))
    try:
        return float(theory.cr_exact(spec.alg, scenario.v))
    except ValueError:
        return None


def cmd_sweep(args: argparse.Namespace) -> int:
    models = [KnowledgeModel(m) for m in args.models]
    directions = [Direction(d) for d in args.directions]
    rows = []
    for model in models:
        for direction in directions:
            for v in args.v:
                for d in args.d:
                    for side in (1, -1):
                        try:
                            scenario = Scenario(
                                d=d, v=v, direction=direction, side=side
                            )
                            validate_for_model(scenario, model)
                        except InvalidScenarioError:
                            continue
                        know = visible_knowledge(model, scenario)
                        spec = select_algorithm(model, direction, know)
                        result = simulate(spec, scenario)
                        cr = competitive_ratio(result, scenario)
                        bound = _cr_bound_for(spec, scenario)
                        rows.append([
                            model.value, direction.value, spec.alg.value,
                            _flt(v), _flt(d), f"{side:+d}", _flt(args.eps_rel),
                            _flt(result.capture_time), _flt(cr),
                            "" if bound is None else _flt(bound),
                            result.turns_r1 + result.turns_r2, result.iteration,
                            _pq(result.capture_time), _pq(cr),
                        ])
    try:
        if args.out == "-":
            _write_csv(sys.stdout, rows)
        else:
            with open(args.out, "w", newline="", encoding="utf-8") as out:
                _write_csv(out, rows)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return _EXIT_IO
    return _EXIT_OK


def _write_csv(out, rows: list[list]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(_SWEEP_HEADER)
    writer.writerows(rows)


def cmd_verify(args: argparse.Namespace) -> int:
    numbers = SUITES[args.suite] if args.suite else None
    results = run_criteria(numbers)
    for r in results:
        print(f"criterion {r.number}: {r.status} — {r.name}")
        for line in r.details:
            print(f"  {line}")
    return _EXIT_OK if all(r.passed for r in results) else _EXIT_VERIFY_FAIL


def cmd_trace(args: argparse.Namespace) -> int:
    spec, scenario = _build_run(args)
    result = simulate(spec, scenario)
    motion = target_motion(scenario)
    # Rank breaks ties at shared instants: samples first, then the events in
    # protocol order.
    rows: list[tuple[Fraction, int, str]] = []
    n = args.samples
    for j in range(n):
        t = result.capture_time * j / max(n - 1, 1) if n > 1 else Fraction(0)
        rows.append((t, 0, _phase_at(result, t)))
    rows.append((result.found_time, 1, "found"))
    if result.fetch_time > 0:
        rows.append((result.found_time + result.fetch_time, 2, "rendezvous"))
    rows.append((result.capture_time, 3, "capture"))
    rows.sort(key=lambda item: item[:2])
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["t", "x_r1", "x_r2", "x_target", "phase"])
    for t, _rank, phase in rows:
        writer.writerow([
            _flt(t),
            _flt(result.traj_r1.position_at(t)),
            _flt(result.traj_r2.position_at(t)),
            _flt(motion.position_at(t)),
            phase,
        ])
    return _EXIT_OK


def _phase_at(result: CaptureResult, t: Fraction) -> str:
    if t < result.found_time:
        return "search"
    if t < result.found_time + result.fetch_time:
        return "fetch"
    if t < result.capture_time:
        return "chase"
    return "capture"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linecapture",
        description="Two-robot capture of a moving target on the line.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run one scenario, print a report")
    _add_scenario_flags(p_sim)
    p_sim.set_defaults(func=cmd_simulate)

    p_sweep = sub.add_parser("sweep", help="evaluate a grid, write CSV")
    p_sweep.add_argument("--models", nargs="*", default=["fk"],
                         choices=[m.value for m in KnowledgeModel])
    p_sweep.add_argument("--directions", nargs="*", default=["away"],
                         choices=[d.value for d in Direction])
    p_sweep.add_argument("--v", nargs="*", type=_frac, default=[])
    p_sweep.add_argument("--d", nargs="*", type=_frac, default=[])
    p_sweep.add_argument("--eps-rel", type=_frac, default=Fraction(1, 10**9))
    p_sweep.add_argument("--k-max", type=int, default=8)
    p_sweep.add_argument("--out", default="-", help="output path, '-' for stdout")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the acceptance suite")
    p_verify.add_argument("--suite", choices=sorted(SUITES))
    p_verify.set_defaults(func=cmd_verify)

    p_trace = sub.add_parser("trace", help="sample trajectories to CSV")
    _add_scenario_flags(p_trace)
    p_trace.add_argument("--samples", type=int, default=20)
    p_trace.set_defaults(func=cmd_trace)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidScenarioError, ConfigurationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
