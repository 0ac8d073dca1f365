"""Command-line surface.

Subcommands: optimize, curve, mix-curve, delta-z, sweep. Data goes to
stdout, diagnostics to stderr. Exit 0 on success, 1 on domain/contract
errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .analysis import DEFAULT_DISRUPTION_THRESHOLD, delta_z, optimum_shift_sweep
from .errors import DomainError, ModelError
from .model import InvestmentPlan, PeriodSpec, Scenario, TechnologyProfile
from .optimize import optimize_scenario
from .scenario_io import (
    emit_curve_csv,
    emit_mix_csv,
    fmt,
    parse_scenario,
    render_curve_svg,
)


def _load_scenario(path: str) -> Scenario:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read scenario file {path}: {exc}") from exc
    return parse_scenario(text)


def _parse_amounts(raw: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in raw.split(","))
    except ValueError as exc:
        raise DomainError(f"invalid plan amounts {raw!r}") from exc


def _parse_values(raw: str, flag: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in raw.split(","))
    except ValueError as exc:
        raise DomainError(f"invalid value list for {flag}: {raw!r}") from exc


def _period_from_args(args, alpha=None, beta=None, disruptive=0) -> PeriodSpec:
    return PeriodSpec(
        vulnerability=args.vulnerability,
        loss=args.loss,
        technology=TechnologyProfile(
            alpha if alpha is not None else args.alpha,
            beta if beta is not None else args.beta,
            disruptive,
        ),
    )


def _cmd_optimize(args) -> int:
    scenario = _load_scenario(args.scenario)
    result = optimize_scenario(scenario)
    print(f"scenario={scenario.label}")
    print(f"periods={scenario.horizon}")
    for i, rec in enumerate(result.per_period, start=1):
        print(
            f"period {i}: z_star={fmt(rec.z_star)} "
            f"breach_probability={fmt(rec.breach_probability_at_optimum)} "
            f"ebis={fmt(rec.ebis_at_optimum)} "
            f"enbis={fmt(rec.ebis_at_optimum - rec.z_star)} "
            f"method={rec.method}"
        )
    print(f"enbis_total={fmt(result.enbis_total)}")
    return 0


def _cmd_curve(args) -> int:
    period = _period_from_args(args)
    z_max = args.z_max if args.z_max is not None else args.vulnerability * args.loss
    csv_text = emit_curve_csv(
        period, args.z_min, z_max, args.steps, args.include_disrupted
    )
    sys.stdout.write(csv_text)
    if args.svg:
        Path(args.svg).write_text(render_curve_svg(csv_text))
    return 0


def _cmd_mix_curve(args) -> int:
    period_pre = _period_from_args(args, disruptive=0)
    period_post = _period_from_args(
        args,
        alpha=args.alpha_post if args.alpha_post is not None else args.alpha,
        beta=args.beta_post if args.beta_post is not None else args.beta,
        disruptive=1,
    )
    z_max = args.z_max if args.z_max is not None else args.vulnerability * args.loss
    if args.z_min < 0 or z_max <= args.z_min or args.steps < 2:
        raise DomainError(
            f"need 0 <= z_min < z_max and steps >= 2, got "
            f"z_min={args.z_min}, z_max={z_max}, steps={args.steps}"
        )
    grid = np.linspace(args.z_min, z_max, args.steps + 1)
    csv_text = emit_mix_csv(period_pre, period_post, args.switch_index, grid)
    sys.stdout.write(csv_text)
    if args.svg:
        rows = [ln.split(",") for ln in csv_text.splitlines()[1:]]
        flat = "z,ebis\n" + "\n".join(f"{r[2]},{r[3]}" for r in rows) + "\n"
        Path(args.svg).write_text(render_curve_svg(flat))
    return 0


def _cmd_delta_z(args) -> int:
    scenario_a = _load_scenario(args.scenario_a)
    scenario_b = _load_scenario(args.scenario_b)
    if args.strict:
        vl_a = [(p.vulnerability, p.loss) for p in scenario_a.periods]
        vl_b = [(p.vulnerability, p.loss) for p in scenario_b.periods]
        if vl_a != vl_b:
            raise DomainError(
                "strict mode: vulnerability/loss sequences of the two "
                "scenarios must be identical"
            )
    if args.optimize:
        plan_a = optimize_scenario(scenario_a).plan
        plan_b = optimize_scenario(scenario_b).plan
    else:
        plan_a = InvestmentPlan(
            _parse_amounts(args.plan_a)
            if args.plan_a
            else (0.0,) * scenario_a.horizon
        )
        plan_b = InvestmentPlan(
            _parse_amounts(args.plan_b)
            if args.plan_b
            else (0.0,) * scenario_b.horizon
        )
    report = delta_z(scenario_a, plan_a, scenario_b, plan_b, args.threshold)
    print(f"delta_z={fmt(report.delta_z)}")
    print(f"enbis_a={fmt(report.enbis_a)}")
    print(f"enbis_b={fmt(report.enbis_b)}")
    print(f"period_count={report.period_count}")
    print(f"classified_disruptive={'true' if report.classified_disruptive else 'false'}")
    print(f"threshold={fmt(report.threshold_used)}")
    return 0


def _cmd_sweep(args) -> int:
    records = optimum_shift_sweep(
        _parse_values(args.alpha, "--alpha"),
        _parse_values(args.beta, "--beta"),
        _parse_values(args.vulnerability, "--vulnerability"),
        _parse_values(args.loss, "--loss"),
    )
    print(
        "alpha,beta,vulnerability,loss,"
        "z_star_baseline,z_star_disrupted,shift_direction"
    )
    for r in records:
        print(
            f"{fmt(r.alpha)},{fmt(r.beta)},{fmt(r.vulnerability)},{fmt(r.loss)},"
            f"{fmt(r.z_star_baseline)},{fmt(r.z_star_disrupted)},{r.shift_direction}"
        )
    return 0


def _add_period_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--vulnerability", type=float, required=True)
    parser.add_argument("--loss", type=float, required=True)
    parser.add_argument("--alpha", type=float, required=True)
    parser.add_argument("--beta", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secinvest",
        description="Optimal cyber-security investment and scenario comparison",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("optimize", help="optimal plan for a scenario file")
    p.add_argument("scenario")
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("curve", help="benefit curves as CSV")
    _add_period_flags(p)
    p.add_argument("--z-min", type=float, default=0.0)
    p.add_argument("--z-max", type=float, default=None)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--include-disrupted", action="store_true")
    p.add_argument("--svg", default=None)
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("mix-curve", help="piecewise pre/post-switch curve as CSV")
    _add_period_flags(p)
    p.add_argument("--alpha-post", type=float, default=None)
    p.add_argument("--beta-post", type=float, default=None)
    p.add_argument("--switch-index", type=int, required=True)
    p.add_argument("--z-min", type=float, default=0.0)
    p.add_argument("--z-max", type=float, default=None)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--svg", default=None)
    p.set_defaults(func=_cmd_mix_curve)

    p = sub.add_parser("delta-z", help="compare two equal-duration scenarios")
    p.add_argument("scenario_a")
    p.add_argument("scenario_b")
    p.add_argument("--optimize", action="store_true")
    p.add_argument("--strict", action="store_true")
    p.add_argument(
        "--threshold", type=float, default=DEFAULT_DISRUPTION_THRESHOLD
    )
    p.add_argument("--plan-a", default=None, help="comma-separated amounts")
    p.add_argument("--plan-b", default=None, help="comma-separated amounts")
    p.set_defaults(func=_cmd_delta_z)

    p = sub.add_parser("sweep", help="optimum shift directions over a grid")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")
    p.add_argument("--vulnerability", default="0.5")
    p.add_argument("--loss", default="4,20")
    p.set_defaults(func=_cmd_sweep)

    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
