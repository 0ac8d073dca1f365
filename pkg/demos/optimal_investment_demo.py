"""Walk through the core model: breach probability, benefit curves, and
the optimal investment level, with and without a disruptive technology.

Run: python3 demos/optimal_investment_demo.py
"""

import numpy as np

from secinvest import (
    PeriodSpec,
    Scenario,
    TechnologyProfile,
    closed_form_optimum,
    ebis_eval,
    golden_section_optimum,
    grid_oracle,
    optimize_scenario,
    sbpf_eval,
)

# A single planning period: 50% chance an attack succeeds, $100 at stake.
baseline_tech = TechnologyProfile(alpha=1.0, beta=1.0, disruptive=0)
disrupted_tech = TechnologyProfile(alpha=1.0, beta=1.0, disruptive=1)
baseline = PeriodSpec(vulnerability=0.5, loss=100.0, technology=baseline_tech)
disrupted = PeriodSpec(vulnerability=0.5, loss=100.0, technology=disrupted_tech)

print("Breach probability falls as investment grows:")
for z in [0.0, 1.0, 5.0, 20.0]:
    p0 = sbpf_eval(z, 0.5, baseline_tech)
    pd = sbpf_eval(z, 0.5, disrupted_tech)
    print(f"  z={z:6.1f}  baseline={p0:.4f}  disrupted={pd:.4f}")

print("\nExpected benefits (never reach the expected loss v*L = 50):")
for z in [1.0, 10.0, 100.0, 1e6]:
    print(f"  z={z:10.1f}  EBIS={ebis_eval(z, baseline):.4f}")

# Three routes to the same optimum.
z_closed = closed_form_optimum(baseline)
z_golden = golden_section_optimum(baseline, z_max=50.0, tol=1e-10)
z_grid = grid_oracle(baseline, z_max=50.0, steps=10**6)
print(f"\nOptimal investment, baseline technology:")
print(f"  closed form    {z_closed:.6f}")
print(f"  golden section {z_golden:.6f}")
print(f"  grid search    {z_grid:.6f}")

print(f"\nWith the disruptive technology: {closed_form_optimum(disrupted):.6f}")
print("(here the optimum moves left; at smaller stakes it can move right)")

# Multi-period: the optimization separates across periods.
scenario = Scenario("three-quarters", (baseline, baseline, disrupted))
result = optimize_scenario(scenario)
print("\nThree-period scenario:")
for i, rec in enumerate(result.per_period, 1):
    print(f"  period {i}: z*={rec.z_star:.4f}  net={rec.ebis_at_optimum - rec.z_star:.4f}")
print(f"  total net benefit: {result.enbis_total:.4f}")
