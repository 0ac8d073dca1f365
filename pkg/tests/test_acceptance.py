"""Acceptance gate: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines. Random sampling is seeded, so every run checks the same cases.
"""

import contextlib
import io
import time
from pathlib import Path

import numpy as np
import pytest

from secinvest import (
    InvestmentPlan,
    PeriodSpec,
    Scenario,
    TechnologyProfile,
    closed_form_optimum,
    delta_z,
    dominance_check,
    ebis_eval,
    grid_oracle,
    optimize_period,
    optimize_scenario,
    optimum_shift_sweep,
    run_cli,
    sbpf_eval,
)

GOLDEN_DIR = Path(__file__).parent / "goldens"


def _report(line):
    print(f"PASS {line}")


def _random_tech(rng):
    return TechnologyProfile(
        alpha=rng.uniform(0.01, 10.0),
        beta=rng.uniform(1.0, 5.0),
        disruptive=int(rng.integers(0, 2)),
    )


def _random_period(rng):
    return PeriodSpec(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1e6), _random_tech(rng))


def _random_scenario(rng, label, n):
    return Scenario(label, tuple(_random_period(rng) for _ in range(n)))


def test_criterion_1_sbpf_law():
    rng = np.random.default_rng(101)
    n = 10_000
    start = time.perf_counter()
    alpha = rng.uniform(0.01, 10.0, n)
    k = rng.uniform(1.0, 5.0, n) + rng.integers(0, 2, n)
    v = rng.uniform(0.0, 1.0, n)
    z_lo = rng.uniform(0.0, 100.0, n)
    z_hi = z_lo + rng.uniform(1e-6, 100.0, n)

    def s(z):
        return v / np.power(alpha * z + 1.0, k)

    s_lo, s_hi = s(z_lo), s(z_hi)
    assert np.all((s_lo >= 0) & (s_lo <= v))
    assert np.all((s_hi >= 0) & (s_hi <= v))
    assert np.all(s(np.zeros(n)) == v)
    positive = v > 0
    assert np.all(s_hi[positive] < s_lo[positive])
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    # spot-check the vectorized law against the library entry point
    for i in rng.integers(0, n, 20):
        tech = TechnologyProfile(alpha[i], 1.0 + (k[i] - 1.0) % 5.0)
        val = sbpf_eval(float(z_lo[i]), float(v[i]), tech)
        assert 0.0 <= val <= v[i]
    _report(f"criterion 1: sbpf law on {n} tuples, 0 violations, {elapsed:.3f}s")


def test_criterion_2_concavity():
    rng = np.random.default_rng(102)
    worst = -np.inf
    for _ in range(100):
        p = _random_period(rng)
        z_max = max(p.vulnerability * p.loss, 1.0)
        z = np.linspace(0.0, z_max, 1000)
        vals = np.asarray(ebis_eval(z, p))
        second = vals[2:] - 2 * vals[1:-1] + vals[:-2]
        worst = max(worst, float(second.max(initial=-np.inf)))
        assert np.all(second <= 1e-9)
    _report(f"criterion 2: concavity on 100 grids, max second difference {worst:.3e}")


def test_criterion_3_closed_form_vs_oracle():
    rng = np.random.default_rng(103)
    steps = 10**6
    start = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        p = _random_period(rng)
        z_max = p.vulnerability * p.loss + 1.0
        gap = abs(closed_form_optimum(p) - grid_oracle(p, z_max, steps))
        worst = max(worst, gap / (z_max / steps))
        assert gap <= 2 * z_max / steps
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _report(
        f"criterion 3: closed form within {worst:.2f} grid steps of the "
        f"oracle on 1000 periods, {elapsed:.1f}s"
    )


def test_criterion_4_optimum_bounded_by_expected_loss():
    rng = np.random.default_rng(104)
    for _ in range(1000):
        p = _random_period(rng)
        assert closed_form_optimum(p) <= p.vulnerability * p.loss
    _report("criterion 4: z* <= v*L on 1000 sampled periods, 0 violations")


def test_criterion_5_pointwise_dominance():
    rng = np.random.default_rng(105)
    grid = np.linspace(0.0, 100.0, 21)
    for _ in range(1000):
        v = rng.uniform(0.0, 1.0)
        loss = rng.uniform(0.0, 1e6)
        alpha = rng.uniform(0.01, 10.0)
        beta = rng.uniform(1.0, 5.0)
        base = PeriodSpec(v, loss, TechnologyProfile(alpha, beta, 0))
        disr = PeriodSpec(v, loss, TechnologyProfile(alpha, beta, 1))
        assert dominance_check(base, disr, grid)
    _report("criterion 5: disrupted curve dominates pointwise on 1000 tuples")


def test_criterion_6_argmax_direction_is_parameter_dependent():
    records = optimum_shift_sweep([1.0], [1.0], [0.5], [4.0, 20.0])
    directions = [r.shift_direction for r in records]
    assert directions.count("right") == 1
    assert directions.count("left") == 1
    by_loss = {r.loss: r for r in records}
    expected = {
        4.0: (0.41421, 0.58740, "right"),
        20.0: (2.16228, 1.71442, "left"),
    }
    for loss, (z0, zd, direction) in expected.items():
        rec = by_loss[loss]
        assert rec.shift_direction == direction
        assert rec.z_star_baseline == pytest.approx(z0, abs=1e-4)
        assert rec.z_star_disrupted == pytest.approx(zd, abs=1e-4)
        # cross-check both optima against the independent grid oracle
        p0 = PeriodSpec(0.5, loss, TechnologyProfile(1.0, 1.0, 0))
        pd = PeriodSpec(0.5, loss, TechnologyProfile(1.0, 1.0, 1))
        assert grid_oracle(p0, 0.5 * loss, 10**5) == pytest.approx(z0, abs=1e-4)
        assert grid_oracle(pd, 0.5 * loss, 10**5) == pytest.approx(zd, abs=1e-4)
    _report("criterion 6: sweep finds exactly one left and one right shift")


def test_criterion_7_delta_z_algebra(tmp_path):
    rng = np.random.default_rng(107)
    for i in range(100):
        n = int(rng.integers(1, 6))
        a = _random_scenario(rng, f"a{i}", n)
        b = _random_scenario(rng, f"b{i}", n)
        plan_a = InvestmentPlan(tuple(rng.uniform(0, 10, n)))
        plan_b = InvestmentPlan(tuple(rng.uniform(0, 10, n)))
        fwd = delta_z(a, plan_a, b, plan_b)
        back = delta_z(b, plan_b, a, plan_a)
        assert fwd.delta_z == -back.delta_z
        assert delta_z(a, plan_a, a, plan_a).delta_z == 0.0

    one = '{"label": "a", "periods": [{"vulnerability": 0.5, "loss": 10, "alpha": 1, "beta": 1, "disruptive": 0}]}'
    two = '{"label": "b", "periods": [{"vulnerability": 0.5, "loss": 10, "alpha": 1, "beta": 1, "disruptive": 0}, {"vulnerability": 0.5, "loss": 10, "alpha": 1, "beta": 1, "disruptive": 0}]}'
    path_a = tmp_path / "a.json"
    path_b = tmp_path / "b.json"
    path_a.write_text(one)
    path_b.write_text(two)
    stderr = io.StringIO()
    with contextlib.redirect_stderr(stderr):
        code = run_cli(["delta-z", str(path_a), str(path_b)])
    assert code == 1
    assert "must be equal in order to proceed" in stderr.getvalue()
    _report(
        "criterion 7: delta-z reflexive and antisymmetric on 100 pairs; "
        "unequal horizons exit 1"
    )


def test_criterion_8_separability():
    rng = np.random.default_rng(108)
    for i in range(100):
        n = int(rng.integers(2, 7))
        sc = _random_scenario(rng, f"s{i}", n)
        result = optimize_scenario(sc)
        per_period_sum = sum(
            optimize_period(p).ebis_at_optimum - optimize_period(p).z_star
            for p in sc.periods
        )
        assert result.enbis_total == pytest.approx(per_period_sum, abs=1e-9)
    _report("criterion 8: scenario optimum separates into per-period optima")


def test_criterion_9_golden_files():
    start = time.perf_counter()
    a = str(GOLDEN_DIR / "scenario_a.json")
    b = str(GOLDEN_DIR / "scenario_b.json")
    commands = {
        "curve.csv": [
            "curve", "--vulnerability", "0.5", "--loss", "100",
            "--alpha", "1", "--beta", "1", "--z-min", "0", "--z-max", "2",
            "--steps", "2", "--include-disrupted",
        ],
        "mix_curve.csv": [
            "mix-curve", "--vulnerability", "0.5", "--loss", "100",
            "--alpha", "1", "--beta", "1", "--switch-index", "2",
            "--z-min", "0", "--z-max", "2", "--steps", "4",
        ],
        "delta_z.txt": ["delta-z", a, b, "--plan-a", "1", "--plan-b", "1"],
        "sweep.csv": [
            "sweep", "--alpha", "1", "--beta", "1",
            "--vulnerability", "0.5", "--loss", "4,20",
        ],
    }
    for name, argv in commands.items():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            assert run_cli(argv) == 0
        assert buf.getvalue() == (GOLDEN_DIR / name).read_text(), name
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    _report(f"criterion 9: 4 golden outputs byte-identical, {elapsed:.2f}s")
