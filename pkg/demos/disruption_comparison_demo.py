"""Compare two equal-duration scenarios and judge whether the technology
adopted in the second one qualifies as disruptive.

Run: python3 demos/disruption_comparison_demo.py
"""

from secinvest import (
    PeriodSpec,
    Scenario,
    TechnologyProfile,
    delta_z,
    dominance_check,
    optimize_scenario,
    productivity_ratio,
    optimum_shift_sweep,
)

baseline_tech = TechnologyProfile(alpha=1.0, beta=1.0, disruptive=0)
novel_tech = TechnologyProfile(alpha=1.0, beta=1.0, disruptive=1)

periods_a = tuple(PeriodSpec(0.5, 100.0, baseline_tech) for _ in range(4))
periods_b = tuple(PeriodSpec(0.5, 100.0, novel_tech) for _ in range(4))
scenario_a = Scenario("status-quo", periods_a)
scenario_b = Scenario("after-adoption", periods_b)

# Optimize both, then compare realized net benefits.
plan_a = optimize_scenario(scenario_a).plan
plan_b = optimize_scenario(scenario_b).plan
report = delta_z(scenario_a, plan_a, scenario_b, plan_b, threshold=0.10)

print(f"net benefit A: {report.enbis_a:.4f}")
print(f"net benefit B: {report.enbis_b:.4f}")
print(f"difference (A - B): {report.delta_z:.4f}")
print(f"disruptive at 10% threshold: {report.classified_disruptive}")

# The investment totals also give a relative productivity measure.
ratio = productivity_ratio(plan_a, plan_b)
print(f"\ninvestment ratio B/A: {ratio:.4f}")
print("(below 1: the novel technology reaches its optimum with less money)")

# The novel curve dominates the old one at every investment level...
grid = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0]
print(f"\npointwise dominance on {grid}: "
      f"{dominance_check(periods_a[0], periods_b[0], grid)}")

# ...but the direction the optimum moves depends on the stakes.
print("\noptimum shift by expected loss (alpha=1, beta=1, v=0.5):")
for rec in optimum_shift_sweep([1.0], [1.0], [0.5], [4.0, 20.0]):
    print(
        f"  v*L={rec.vulnerability * rec.loss:5.1f}: "
        f"{rec.z_star_baseline:.5f} -> {rec.z_star_disrupted:.5f} "
        f"({rec.shift_direction})"
    )
