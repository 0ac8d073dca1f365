"""Optimal cyber-security investment over multiple periods, with support
for a disruptive-technology discontinuity and scenario comparison."""

from .analysis import (
    DEFAULT_DISRUPTION_THRESHOLD,
    DeltaZReport,
    SweepRecord,
    classify_disruptive,
    delta_z,
    dominance_check,
    productivity_ratio,
    optimum_shift_sweep,
)
from .cli import run_cli
from .errors import (
    ContractError,
    DomainError,
    ModelError,
    NumericError,
    ParseError,
)
from .model import (
    CurvePoint,
    InvestmentPlan,
    MixPoint,
    PeriodSpec,
    Scenario,
    TechnologyProfile,
    curve_point,
    ebis_eval,
    ebis_mix_curve,
    enbis_eval,
    mix_jump,
    sbpf_eval,
)
from .optimize import (
    OptimizationResult,
    PeriodOptimum,
    closed_form_optimum,
    golden_section_optimum,
    grid_oracle,
    optimize_period,
    optimize_scenario,
    period_enbis,
)
from .scenario_io import (
    emit_curve_csv,
    emit_mix_csv,
    parse_scenario,
    render_curve_svg,
    scenario_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "CurvePoint",
    "ContractError",
    "DEFAULT_DISRUPTION_THRESHOLD",
    "DeltaZReport",
    "DomainError",
    "InvestmentPlan",
    "MixPoint",
    "ModelError",
    "NumericError",
    "OptimizationResult",
    "ParseError",
    "PeriodOptimum",
    "PeriodSpec",
    "Scenario",
    "SweepRecord",
    "TechnologyProfile",
    "classify_disruptive",
    "closed_form_optimum",
    "curve_point",
    "delta_z",
    "dominance_check",
    "ebis_eval",
    "ebis_mix_curve",
    "emit_curve_csv",
    "emit_mix_csv",
    "enbis_eval",
    "golden_section_optimum",
    "grid_oracle",
    "mix_jump",
    "optimize_period",
    "optimize_scenario",
    "parse_scenario",
    "period_enbis",
    "productivity_ratio",
    "optimum_shift_sweep",
    "render_curve_svg",
    "run_cli",
    "sbpf_eval",
    "scenario_to_json",
]
