"""Scenario file parsing and deterministic CSV / SVG emission.

Scenario files are strict JSON: unknown fields are rejected and every
model invariant is enforced at parse time with a field-addressed message.
CSV output uses fixed 6-digit decimals and LF line endings so golden
files stay byte-stable.
"""

from __future__ import annotations

import json
from typing import Sequence

import numpy as np

from .errors import DomainError, ParseError
from .model import (
    MixPoint,
    PeriodSpec,
    Scenario,
    TechnologyProfile,
    curve_point,
    ebis_mix_curve,
)
from .optimize import closed_form_optimum

_PERIOD_FIELDS = ("vulnerability", "loss", "alpha", "beta", "disruptive")


def fmt(x: float) -> str:
    """Fixed 6-fraction-digit decimal; normalizes -0.0."""
    return f"{x + 0.0:.6f}"


def _number(obj: dict, key: str, where: str) -> float:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}.{key} must be a number, got {value!r}")
    return value


def parse_scenario(document: str) -> Scenario:
    """Parse and validate a scenario JSON document."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise ParseError("top-level value must be an object")
    unknown = set(data) - {"label", "periods"}
    if unknown:
        raise ParseError(f"unknown top-level fields: {sorted(unknown)}")
    if "label" not in data or not isinstance(data["label"], str):
        raise ParseError("label must be present and a string")
    if "periods" not in data or not isinstance(data["periods"], list):
        raise ParseError("periods must be present and a list")

    periods = []
    for i, entry in enumerate(data["periods"]):
        where = f"periods[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where} must be an object")
        unknown = set(entry) - set(_PERIOD_FIELDS)
        if unknown:
            raise ParseError(f"{where} has unknown fields: {sorted(unknown)}")
        missing = set(_PERIOD_FIELDS) - set(entry)
        if missing:
            raise ParseError(f"{where} is missing fields: {sorted(missing)}")
        v = _number(entry, "vulnerability", where)
        loss = _number(entry, "loss", where)
        alpha = _number(entry, "alpha", where)
        beta = _number(entry, "beta", where)
        d = entry["disruptive"]
        if not (0.0 <= v <= 1.0):
            raise ParseError(f"{where}.vulnerability must lie in [0, 1], got {v}")
        if loss < 0:
            raise ParseError(f"{where}.loss must be >= 0, got {loss}")
        if not alpha > 0:
            raise ParseError(f"{where}.alpha must be > 0, got {alpha}")
        if not beta >= 1:
            raise ParseError(f"{where}.beta must be >= 1, got {beta}")
        if isinstance(d, bool) or d not in (0, 1):
            raise ParseError(
                f"{where}.disruptive must be the dummy 0 or 1, got {d!r}"
            )
        periods.append(PeriodSpec(v, loss, TechnologyProfile(alpha, beta, d)))
    if not periods:
        raise ParseError("periods must contain at least one entry")
    return Scenario(label=data["label"], periods=tuple(periods))


def scenario_to_json(scenario: Scenario) -> str:
    """Serialize a scenario back to its file schema (round-trips exactly)."""
    return json.dumps(
        {
            "label": scenario.label,
            "periods": [
                {
                    "vulnerability": p.vulnerability,
                    "loss": p.loss,
                    "alpha": p.technology.alpha,
                    "beta": p.technology.beta,
                    "disruptive": p.technology.disruptive,
                }
                for p in scenario.periods
            ],
        },
        indent=2,
    )


def _z_grid(z_min: float, z_max: float, steps: int) -> np.ndarray:
    if z_min < 0 or z_max <= z_min or steps < 2:
        raise DomainError(
            f"need 0 <= z_min < z_max and steps >= 2, got "
            f"z_min={z_min}, z_max={z_max}, steps={steps}"
        )
    return np.linspace(float(z_min), float(z_max), int(steps) + 1)


def emit_curve_csv(
    period: PeriodSpec,
    z_min: float,
    z_max: float,
    steps: int,
    include_disrupted: bool = False,
) -> str:
    """Benefit curves on a uniform z grid, optionally with the disrupted
    (dummy raised to 1) counterpart alongside; footer rows carry each
    curve's optimal investment."""
    grid = _z_grid(z_min, z_max, steps)
    tech = period.technology
    disrupted = None
    if include_disrupted:
        disrupted = PeriodSpec(
            period.vulnerability,
            period.loss,
            TechnologyProfile(tech.alpha, tech.beta, 1),
        )

    header = "z,ebis_0,enbis_0"
    if include_disrupted:
        header += ",ebis_d,enbis_d"
    lines = [header]
    for z in grid:
        cp = curve_point(float(z), period)
        row = f"{fmt(cp.z)},{fmt(cp.ebis)},{fmt(cp.enbis)}"
        if disrupted is not None:
            cd = curve_point(float(z), disrupted)
            row += f",{fmt(cd.ebis)},{fmt(cd.enbis)}"
        lines.append(row)
    lines.append(f"# z_star_0={fmt(closed_form_optimum(period))}")
    if disrupted is not None:
        lines.append(f"# z_star_d={fmt(closed_form_optimum(disrupted))}")
    return "\n".join(lines) + "\n"


def emit_mix_csv(
    period_pre: PeriodSpec,
    period_post: PeriodSpec,
    switch_index: int,
    z_grid: Sequence[float],
) -> str:
    """Piecewise pre/post curve rows; the branch switches at switch_index."""
    points = ebis_mix_curve(period_pre, period_post, switch_index, z_grid)
    lines = ["index,branch,z,ebis"]
    for p in points:
        lines.append(f"{p.index},{p.branch},{fmt(p.z)},{fmt(p.ebis)}")
    return "\n".join(lines) + "\n"


def render_curve_svg(csv_text: str, width: int = 640, height: int = 480) -> str:
    """Polyline rendering of the numeric columns of a curve CSV.

    Convenience output only; correctness is asserted on the CSV.
    """
    rows = [
        line.split(",")
        for line in csv_text.splitlines()
        if line and not line.startswith("#")
    ]
    header, data = rows[0], rows[1:]
    xs = [float(r[0]) for r in data]
    x_lo, x_hi = min(xs), max(xs)
    x_span = (x_hi - x_lo) or 1.0
    margin = 40.0
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    ]
    colors = ["#1f77b4", "#2ca02c", "#d62728", "#9467bd"]
    for col in range(1, len(header)):
        ys = [float(r[col]) for r in data]
        y_lo, y_hi = min(ys), max(ys)
        y_span = (y_hi - y_lo) or 1.0
        pts = " ".join(
            f"{margin + (x - x_lo) / x_span * (width - 2 * margin):.2f},"
            f"{height - margin - (y - y_lo) / y_span * (height - 2 * margin):.2f}"
            for x, y in zip(xs, ys)
        )
        color = colors[(col - 1) % len(colors)]
        parts.append(
            f'<polyline fill="none" stroke="{color}" points="{pts}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
