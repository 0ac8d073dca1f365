"""Optimal per-period and per-scenario investment.

The production path is the closed form obtained from the first-order
condition of the net-benefit objective; golden-section and grid search
serve as independent cross-checks (and would carry a future non-class-I
breach-probability family).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericError
from .model import (
    InvestmentPlan,
    PeriodSpec,
    Scenario,
    ebis_eval,
    enbis_eval,
    sbpf_eval,
)

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class PeriodOptimum:
    """Optimal investment for a single period, with curve values at the optimum."""

    z_star: float
    breach_probability_at_optimum: float
    ebis_at_optimum: float
    method: str  # closed_form | golden_section | grid


@dataclass(frozen=True)
class OptimizationResult:
    plan: InvestmentPlan
    enbis_total: float
    per_period: tuple[PeriodOptimum, ...]


def period_enbis(z, period: PeriodSpec):
    """Net benefit of one period as a function of z (scalar or ndarray)."""
    return ebis_eval(z, period) - np.asarray(z, dtype=float)


def closed_form_optimum(period: PeriodSpec) -> float:
    """Unique maximizer of [v - S(z, v)]*L - z over z >= 0.

    Setting the derivative to zero gives (alpha*z + 1)**(k+1) = alpha*k*v*L
    with k the technology exponent; when the right-hand side is <= 1 the
    objective is nonincreasing and the corner z = 0 is optimal.
    """
    v, loss = period.vulnerability, period.loss
    alpha = period.technology.alpha
    k = period.technology.exponent
    interior = alpha * k * v * loss
    if interior <= 1.0:
        return 0.0
    return (interior ** (1.0 / (k + 1.0)) - 1.0) / alpha


def golden_section_optimum(period: PeriodSpec, z_max: float, tol: float) -> float:
    """Golden-section maximizer of the per-period net benefit on [0, z_max].

    The class-I objective is concave, hence unimodal on any interval.
    """
    a, b = 0.0, float(z_max)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc = period_enbis(c, period)
    fd = period_enbis(d, period)
    if not (np.isfinite(fc) and np.isfinite(fd)):
        raise NumericError("objective is not finite on the search interval")
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = period_enbis(c, period)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = period_enbis(d, period)
        if not (np.isfinite(fc) and np.isfinite(fd)):
            raise NumericError("objective is not finite on the search interval")
    mid = 0.5 * (a + b)
    # the corner z=0 can beat the interior midpoint when the optimum is flat
    return 0.0 if period_enbis(0.0, period) >= period_enbis(mid, period) else mid


def grid_oracle(period: PeriodSpec, z_max: float, steps: int) -> float:
    """Brute-force maximizer over the uniform grid {0, z_max/steps, ..., z_max}.

    Ties break toward the smallest z (np.argmax returns the first maximum).
    """
    z = np.linspace(0.0, float(z_max), int(steps) + 1)
    values = period_enbis(z, period)
    return float(z[int(np.argmax(values))])


def optimize_period(period: PeriodSpec) -> PeriodOptimum:
    """Optimal investment for one period via the closed form."""
    z_star = closed_form_optimum(period)
    return PeriodOptimum(
        z_star=z_star,
        breach_probability_at_optimum=sbpf_eval(
            z_star, period.vulnerability, period.technology
        ),
        ebis_at_optimum=ebis_eval(z_star, period),
        method="closed_form",
    )


def optimize_scenario(scenario: Scenario) -> OptimizationResult:
    """Optimize each period independently; the multi-period sum separates."""
    records = tuple(optimize_period(p) for p in scenario.periods)
    plan = InvestmentPlan(tuple(r.z_star for r in records))
    return OptimizationResult(
        plan=plan,
        enbis_total=enbis_eval(plan, scenario),
        per_period=records,
    )
