"""Core domain types and evaluation of the breach-probability and benefit curves.

Everything here is a pure function of its inputs; values are immutable and
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import ContractError, DomainError

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class TechnologyProfile:
    """Productivity parameters of one cyber-security technology.

    ``alpha`` and ``beta`` make the breach probability fall faster in the
    invested amount; ``disruptive`` is a 0/1 dummy that raises the exponent
    by one when a disruptive technology is in force.
    """

    alpha: float
    beta: float
    disruptive: int = 0

    def __post_init__(self) -> None:
        if not (self.alpha > 0):
            raise DomainError(f"alpha must be > 0, got {self.alpha}")
        if not (self.beta >= 1):
            raise DomainError(f"beta must be >= 1, got {self.beta}")
        if self.disruptive not in (0, 1):
            raise DomainError(
                f"disruptive must be the dummy 0 or 1, got {self.disruptive}"
            )

    @property
    def exponent(self) -> float:
        """Exponent applied to (alpha*z + 1), i.e. beta plus the dummy."""
        return self.beta + self.disruptive


@dataclass(frozen=True)
class PeriodSpec:
    """One period: vulnerability, potential loss, and the technology in force."""

    vulnerability: float
    loss: float
    technology: TechnologyProfile

    def __post_init__(self) -> None:
        if not (0.0 <= self.vulnerability <= 1.0):
            raise DomainError(
                f"vulnerability must lie in [0, 1], got {self.vulnerability}"
            )
        if not (self.loss >= 0.0):
            raise DomainError(f"loss must be >= 0, got {self.loss}")


@dataclass(frozen=True)
class Scenario:
    """An ordered, nonempty sequence of periods; the unit of optimization."""

    label: str
    periods: tuple[PeriodSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "periods", tuple(self.periods))
        if len(self.periods) == 0:
            raise DomainError("a scenario needs at least one period")

    @property
    def horizon(self) -> int:
        return len(self.periods)


@dataclass(frozen=True)
class InvestmentPlan:
    """One nonnegative investment amount per period of a scenario."""

    amounts: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "amounts", tuple(float(a) for a in self.amounts))
        for i, a in enumerate(self.amounts):
            if not (a >= 0.0):
                raise DomainError(f"amounts[{i}] must be >= 0, got {a}")

    @property
    def total(self) -> float:
        return float(sum(self.amounts))

    def __len__(self) -> int:
        return len(self.amounts)


@dataclass(frozen=True)
class CurvePoint:
    """One sample of the benefit curves at investment level z."""

    z: float
    ebis: float
    enbis: float
    breach_probability: float


@dataclass(frozen=True)
class MixPoint:
    """One sample of the piecewise (pre/post switch) benefit curve."""

    index: int
    branch: str  # "pre" or "post"
    z: float
    ebis: float
    enbis: float
    breach_probability: float


def sbpf_eval(z: ArrayLike, v: float, tech: TechnologyProfile) -> ArrayLike:
    """Breach probability v / (alpha*z + 1)**(beta + d); lies in [0, v].

    Accepts a scalar or ndarray ``z``; broadcasts elementwise.
    """
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr < 0):
        raise DomainError(f"z must be >= 0, got {z}")
    if not (0.0 <= v <= 1.0):
        raise DomainError(f"v must lie in [0, 1], got {v}")
    out = v / np.power(tech.alpha * z_arr + 1.0, tech.exponent)
    return float(out) if np.isscalar(z) or z_arr.ndim == 0 else out


def ebis_eval(z: ArrayLike, period: PeriodSpec) -> ArrayLike:
    """Expected benefit [v - S(z, v)] * L; in [0, v*L), nondecreasing in z."""
    s = sbpf_eval(z, period.vulnerability, period.technology)
    out = (period.vulnerability - np.asarray(s)) * period.loss
    return float(out) if np.isscalar(z) or np.asarray(z).ndim == 0 else out


def enbis_eval(plan: InvestmentPlan, scenario: Scenario) -> float:
    """Net benefit summed over all periods: sum of [v - S(z, v)]*L - z."""
    if len(plan) != scenario.horizon:
        raise ContractError(
            f"plan has {len(plan)} amounts but scenario "
            f"{scenario.label!r} has {scenario.horizon} periods"
        )
    total = 0.0
    for z, period in zip(plan.amounts, scenario.periods):
        total += ebis_eval(z, period) - z
    return total


def curve_point(z: float, period: PeriodSpec) -> CurvePoint:
    """Sample EBIS/ENBIS and breach probability at one investment level."""
    s = sbpf_eval(z, period.vulnerability, period.technology)
    ebis = (period.vulnerability - s) * period.loss
    return CurvePoint(z=z, ebis=ebis, enbis=ebis - z, breach_probability=s)


def ebis_mix_curve(
    period_pre: PeriodSpec,
    period_post: PeriodSpec,
    switch_index: int,
    z_grid: Sequence[float],
) -> list[MixPoint]:
    """Piecewise curve that follows the pre-switch technology before
    ``switch_index`` and the post-switch technology from there on.

    The post technology must carry the disruption dummy and the pre
    technology must not, unless the two periods are identical (which
    degenerates to a single continuous curve).
    """
    if period_pre != period_post:
        if period_pre.technology.disruptive != 0:
            raise ContractError("pre-switch technology must have disruptive=0")
        if period_post.technology.disruptive != 1:
            raise ContractError("post-switch technology must have disruptive=1")
    points = []
    for i, z in enumerate(z_grid):
        branch = "pre" if i < switch_index else "post"
        period = period_pre if branch == "pre" else period_post
        cp = curve_point(float(z), period)
        points.append(
            MixPoint(
                index=i,
                branch=branch,
                z=cp.z,
                ebis=cp.ebis,
                enbis=cp.enbis,
                breach_probability=cp.breach_probability,
            )
        )
    return points


def mix_jump(period_pre: PeriodSpec, period_post: PeriodSpec, z: float) -> float:
    """Size of the curve discontinuity at investment level z: EBIS_post - EBIS_pre."""
    return ebis_eval(z, period_post) - ebis_eval(z, period_pre)
