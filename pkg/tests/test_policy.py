"""Trajectory optimization: oracle and property tests.

The adjoint gradient, the costate-based SCC, and the optimal savings
path are each checked against an independent method (finite differences,
re-optimized perturbations, and a backward-induction value-iteration
solver on a capital grid).
"""

import numpy as np
import pytest
from dataclasses import replace
from scipy.optimize import minimize_scalar

from cdice.economy import ExogenousPath
from cdice.policy import (
    TRAJECTORY_COLUMNS,
    PolicyError,
    _simulate,
    carbon_tax,
    make_problem,
    scc_finite_difference,
    solve,
    write_sweep_summary,
    write_trajectory_csv,
)


# ---------------------------------------------------------------------------
# problem assembly


def test_make_problem_defaults():
    pr = make_problem("CDICE")
    assert pr.dt == 1.0
    assert pr.n_periods == 600
    assert pr.n_cont == 400
    assert pr.fex_mode == "linear"
    assert pr.econ.rho == 0.015


def test_patient_discounting_extends_horizon():
    assert make_problem("CDICE", rho=0.001).n_periods == 1000
    assert make_problem("CDICE", rho=0.05).n_periods == 600


def test_make_problem_validation():
    with pytest.raises(PolicyError):
        make_problem("CDICE", scenario="anarchy")
    with pytest.raises(PolicyError):
        make_problem("CDICE", horizon_years=100)


# ---------------------------------------------------------------------------
# solved trajectories (shared via the session cache)


def test_bau_solution_headline(solved):
    tr = solved("bau", "CDICE")
    assert tr.converged
    assert tr.kkt_residual < 1e-6
    assert tr.scc[0] == pytest.approx(24.145, rel=1e-3)
    assert np.all(tr.mu == 0.0)
    assert 0.2 < tr.s[0] < 0.3


def test_optimal_solution_headline(solved):
    tr = solved("optimal", "CDICE")
    assert tr.converged
    assert tr.kkt_residual < 1e-6
    n = tr.problem.n_periods
    assert tr.t[:n, 0].max() == pytest.approx(3.22, abs=0.05)
    assert np.any(tr.mu >= 0.999)  # full abatement is reached eventually
    assert tr.objective > solved("bau", "CDICE").objective


def test_scc_grows_along_bau_path(solved):
    tr = solved("bau", "CDICE")
    scc150 = tr.scc[:150]
    assert np.all(np.diff(scc150) > 0)
    growth = (scc150[-1] / scc150[0]) ** (1.0 / 149) - 1.0
    assert 0.015 < growth < 0.04  # about 2%/yr


# ---------------------------------------------------------------------------
# gradient and SCC oracles


def test_adjoint_gradient_vs_finite_differences():
    # 20 random control coordinates at a random interior point; central
    # differences over several step sizes, best agreement counted, with
    # an absolute floor of 5e-5 for the cancellation noise of the O(1e6)
    # objective (gradient magnitudes at the tested coordinates are O(1e2))
    pr = make_problem("CDICE", scenario="optimal")
    n = pr.n_periods
    rng = np.random.default_rng(7)
    mu = rng.uniform(0.05, 0.8, n)
    s = rng.uniform(0.15, 0.35, n)
    _, gmu, gs, _ = _simulate(pr, mu, s)
    g = np.concatenate([gmu, gs])
    coords = np.concatenate([rng.choice(300, 10, replace=False),
                             n + rng.choice(300, 10, replace=False)])
    x = np.concatenate([mu, s])
    for i in coords:
        best = np.inf
        for h in (1e-3, 1e-4, 1e-5):
            xp = x.copy(); xp[i] += h
            xm = x.copy(); xm[i] -= h
            wp, _, _, _ = _simulate(pr, xp[:n], xp[n:], need_gradient=False)
            wm, _, _, _ = _simulate(pr, xm[:n], xm[n:], need_gradient=False)
            best = min(best, abs((wp - wm) / (2.0 * h) - g[i]))
        assert best <= 1e-5 * abs(g[i]) + 5e-5, (i, best, g[i])


def test_directional_derivative_second_order_convergence():
    # along a fixed direction the central-difference error must shrink
    # like h^2, which pins the adjoint gradient to machine-level accuracy
    pr = make_problem("CDICE", scenario="optimal")
    n = pr.n_periods
    rng = np.random.default_rng(3)
    mu = rng.uniform(0.1, 0.7, n)
    s = rng.uniform(0.2, 0.3, n)
    _, gmu, gs, _ = _simulate(pr, mu, s)
    d = rng.normal(size=2 * n)
    d /= np.linalg.norm(d)
    g_dir = float(np.concatenate([gmu, gs]) @ d)
    x = np.concatenate([mu, s])
    errs = []
    for h in (3e-2, 3e-3):  # interior margins keep x +- h d inside bounds
        xp = x + h * d
        xm = x - h * d
        wp, _, _, _ = _simulate(pr, xp[:n], xp[n:], need_gradient=False)
        wm, _, _, _ = _simulate(pr, xm[:n], xm[n:], need_gradient=False)
        errs.append(abs((wp - wm) / (2.0 * h) - g_dir) / abs(g_dir))
    assert errs[0] < 1e-4
    assert errs[1] < errs[0] / 20.0  # h^2 would give a factor of 100
    assert errs[1] < 1e-6


def test_costate_scc_vs_finite_difference(solved):
    tr = solved("bau", "CDICE")
    fd = scc_finite_difference(tr.problem, tr)
    assert abs(fd / tr.scc[0] - 1.0) <= 1e-3


def test_carbon_tax_equals_next_period_scc(solved):
    # discrete-time first-order condition: the tax that decentralizes
    # mu_t values the post-decision atmosphere, i.e. CT_t = SCC_{t+1}
    tr = solved("optimal", "CDICE")
    ct = carbon_tax(tr)
    interior = (tr.mu > 1e-3) & (tr.mu < 0.999)
    interior[-1] = False
    idx = np.where(interior[:-1])[0]
    assert len(idx) > 50
    rel = np.abs(ct[idx] / tr.scc[idx + 1] - 1.0)
    assert rel.max() <= 0.01


def test_horizon_robustness(solved):
    base = solved("bau", "CDICE")
    longer = solved("bau", "CDICE", horizon_years=700)
    assert abs(longer.scc[0] / base.scc[0] - 1.0) <= 1e-4


def test_time_consistency_resolve(solved):
    # re-solving from the year-10 state of the optimal path must return
    # the tail of the original controls (Bellman's principle)
    tr = solved("optimal", "CDICE")
    pr = tr.problem
    j = 10
    exo = pr.exo
    shifted = ExogenousPath(l=exo.l[j:], a=exo.a[j:], sigma=exo.sigma[j:],
                            theta1=exo.theta1[j:], e_land=exo.e_land[j:],
                            f_ex=exo.f_ex[j:])
    pr2 = replace(pr, n_periods=pr.n_periods - j, exo=shifted,
                  start_m=tuple(tr.m[j]), start_t=tuple(tr.t[j]),
                  k0=float(tr.k[j]), year0=pr.year0 + j)
    tr2 = solve(pr2)
    w = 200
    assert np.abs(tr2.mu[:w] - tr.mu[j:j + w]).max() <= 1e-3
    assert np.abs(tr2.s[:w] - tr.s[j:j + w]).max() <= 1e-4
    assert abs(tr2.scc[0] / tr.scc[j] - 1.0) <= 1e-4


# ---------------------------------------------------------------------------
# zero-damage limit: neoclassical growth


def zero_damage_problem():
    pr = make_problem("CDICE", scenario="bau", t_step=5)
    return replace(pr, econ=replace(pr.econ, psi1=0.0, psi2=0.0))


def test_zero_damages_scc_vanishes():
    pr = replace(zero_damage_problem(), scenario="optimal")
    tr = solve(pr)
    assert np.abs(tr.scc).max() <= 1e-6
    # carbon is costless, so no abatement is undertaken early on
    assert np.all(tr.mu[:40] == 0.0)


def test_zero_damage_savings_match_value_iteration():
    # independent solution method: deterministic dynamic programming on a
    # log capital grid with backward induction and interpolated values
    pr = zero_damage_problem()
    tr = solve(pr)
    e, exo, dt, nt = pr.econ, pr.exo, pr.dt, pr.n_total
    beta = (1.0 + e.rho) ** (-dt)
    dk = (1.0 - e.delta_k) ** dt
    kg = np.exp(np.linspace(np.log(20.0), np.log(2e5), 481))
    lg = np.log(kg)
    sgrid = np.linspace(0.01, 0.6, 241)
    ee = 1.0 - 1.0 / e.ies

    def util(c, l):
        x = 1000.0 * c / l
        return (x ** ee - 1.0) / ee * l

    values = [None] * (nt + 1)
    values[nt] = np.zeros(len(kg))
    for i in range(nt - 1, -1, -1):
        yg = exo.a[i] * (exo.l[i] / 1000.0) ** (1.0 - e.alpha) * kg ** e.alpha
        c = np.outer(1.0 - sgrid, yg)
        k1 = dk * kg[None, :] + dt * np.outer(sgrid, yg)
        q = dt * util(c, exo.l[i]) + beta * np.interp(np.log(k1), lg,
                                                      values[i + 1])
        values[i] = q.max(axis=0)

    k = e.k0
    s_path = np.empty(30)
    for i in range(len(s_path)):
        yg = exo.a[i] * (exo.l[i] / 1000.0) ** (1.0 - e.alpha) * k ** e.alpha
        v_next = values[i + 1]

        def neg(sv):
            return -(dt * util((1.0 - sv) * yg, exo.l[i])
                     + beta * np.interp(np.log(dk * k + dt * sv * yg),
                                        lg, v_next))

        s_path[i] = minimize_scalar(neg, bounds=(0.005, 0.7),
                                    method="bounded",
                                    options={"xatol": 1e-8}).x
        k = dk * k + dt * s_path[i] * yg

    rel = np.abs(s_path - tr.s[:len(s_path)]) / tr.s[:len(s_path)]
    assert rel.max() <= 0.01


# ---------------------------------------------------------------------------
# output writers


def test_write_trajectory_csv(tmp_path, solved):
    tr = solved("bau", "CDICE")
    out = tmp_path / "traj.csv"
    write_trajectory_csv(tr, out)
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(TRAJECTORY_COLUMNS)
    assert len(lines) == 1 + tr.problem.n_periods
    first = dict(zip(TRAJECTORY_COLUMNS, (float(x) for x in lines[1].split(","))))
    assert first["year"] == 2015.0
    assert first["k"] == 223.0
    assert first["scc"] == pytest.approx(tr.scc[0], rel=1e-9)


def test_write_sweep_summary(tmp_path, solved):
    tr = solved("bau", "CDICE")
    out = tmp_path / "sweep.csv"
    write_sweep_summary({("CDICE", 0.015, "nordhaus", "linear"): tr}, out)
    lines = out.read_text().splitlines()
    assert lines[0].startswith("preset,rho,damage,fex_mode")
    assert lines[1].startswith("CDICE,0.015,nordhaus,linear,")
