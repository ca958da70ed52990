"""Business-as-usual and optimal-mitigation trajectory solvers.

The planner maximizes discounted utility of per-capita consumption over
the mitigation rate mu_t and the savings rate s_t, subject to the
coupled capital / carbon-cycle / temperature dynamics.  The problem is
solved by direct transcription: the controls over the horizon form the
decision vector, the objective is evaluated by forward simulation, and
its exact gradient is assembled by a reverse (adjoint) sweep, which a
box-constrained quasi-Newton method (L-BFGS-B) then drives to a KKT
point.  The same adjoint sweep yields the costates of the capital and
atmospheric-carbon constraints, whose ratio is the social cost of
carbon.

Truncation: the last control is held fixed over a continuation block of
further periods whose discounted utility is included in the objective,
so the reported horizon is effectively open-ended.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import minimize

from .climate import ClimatePreset, get_preset
from .economy import EconParams, ExogenousPath, econ_preset, make_exogenous_path
from .units import C_TO_CO2

__all__ = [
    "PolicyError",
    "PolicyProblem",
    "Trajectory",
    "make_problem",
    "solve",
    "solve_bau",
    "solve_optimal",
    "scc",
    "carbon_tax",
    "scc_finite_difference",
    "sweep",
    "write_trajectory_csv",
    "write_sweep_summary",
    "TRAJECTORY_COLUMNS",
]

TRAJECTORY_COLUMNS = ("year", "m_at", "m_uo", "m_lo", "t_at", "t_oc", "k",
                      "c", "y_gross", "y_net", "damage_frac", "mu", "s",
                      "emissions", "scc", "carbon_tax")

_S_LO, _S_HI = 1e-3, 0.999


class PolicyError(RuntimeError):
    """Ill-posed policy problem or solver failure."""


@dataclass(frozen=True)
class PolicyProblem:
    """A fully specified trajectory-optimization instance.

    ``n_periods`` controls are free; the last one is held over a further
    ``n_cont`` periods whose utility still enters the objective.
    """

    preset: ClimatePreset
    econ: EconParams
    exo: ExogenousPath
    n_periods: int
    n_cont: int
    dt: float
    scenario: str  # "bau" | "optimal"
    fex_mode: str  # "linear" | "proportional"
    year0: float = 2015.0
    k0: float | None = None  # defaults to econ.k0
    start_m: tuple | None = None  # defaults to preset M_INI
    start_t: tuple | None = None  # defaults to preset T_INI

    def __post_init__(self):
        if self.scenario not in ("bau", "optimal"):
            raise PolicyError(f"unknown scenario {self.scenario!r}")
        if self.n_periods * self.dt < 500:
            raise PolicyError("horizon must cover at least 500 years")
        if len(self.exo) < self.n_total:
            raise PolicyError("exogenous path shorter than horizon + continuation")

    @property
    def n_total(self) -> int:
        return self.n_periods + self.n_cont


def make_problem(preset, scenario="optimal", rho=None, damage="nordhaus",
                 fex_mode="linear", horizon_years=None,
                 continuation_years=400, t_step=None) -> PolicyProblem:
    """Wire a problem with the conventions used throughout.

    All presets run annually by default; calibrations whose climate
    coefficients absorb a longer native step are scaled down
    proportionally.  The default horizon is 600 years of free controls
    (1000 when rho <= 0.005, where discounting is too weak for a short
    horizon) plus a 400-year continuation block.
    """
    p = preset if isinstance(preset, ClimatePreset) else get_preset(preset)
    dt = float(1 if t_step is None else t_step)
    econ = econ_preset(p.name, t_step=dt, rho=rho, damage=damage)
    if horizon_years is None:
        horizon_years = 1000 if econ.rho <= 0.005 else 600
    n_periods = int(round(horizon_years / dt))
    n_cont = int(round(continuation_years / dt))
    exo = make_exogenous_path(econ, n_periods + n_cont, fex_mode=fex_mode)
    return PolicyProblem(preset=p, econ=econ, exo=exo, n_periods=n_periods,
                         n_cont=n_cont, dt=dt, scenario=scenario,
                         fex_mode=fex_mode)


@dataclass
class Trajectory:
    """Converged solution: per-period series over the free horizon."""

    problem: PolicyProblem
    years: np.ndarray
    m: np.ndarray          # (n+1, 3) 1000 GtC
    t: np.ndarray          # (n+1, 2) K
    k: np.ndarray          # (n+1,) trillion USD
    c: np.ndarray          # (n,) trillion USD/yr-equivalent per period
    y_gross: np.ndarray
    y_net: np.ndarray
    damage_frac: np.ndarray
    mu: np.ndarray
    s: np.ndarray
    emissions: np.ndarray  # (n,) GtC/yr, industrial + land
    scc: np.ndarray        # (n,) USD/tC (2010 USD, CO2-mass normalization)
    carbon_tax: np.ndarray
    objective: float
    kkt_residual: float
    converged: bool
    lam_k: np.ndarray = field(repr=False, default=None)
    lam_m_at: np.ndarray = field(repr=False, default=None)

    @property
    def t_at(self):
        return self.t[:, 0]

    @property
    def m_at(self):
        return self.m[:, 0]

    def at_year(self, year, column):
        col = getattr(self, column)
        years = self.years[: len(col)]
        return float(np.interp(year, years, col))


# ---------------------------------------------------------------------------
# forward simulation and adjoint sweep
#
# State per period: carbon masses (m1, m2, m3), temperatures (ta, to),
# capital k.  All loops run on plain floats for speed; arrays only hold
# results.


def _constants(pr: PolicyProblem):
    p = pr.preset
    e = pr.econ
    dt = pr.dt
    # The climate advances at its native resolution inside each economic
    # period: n_sub substeps of length sub_dt, so a 5-year economic step
    # over an annually calibrated climate stays within the explicit
    # stability limit of the temperature update.
    n_sub = int(round(dt / p.native_dt))
    if n_sub < 1 or abs(n_sub * p.native_dt - dt) > 1e-9 * dt:
        n_sub = 1
    sub_dt = dt / n_sub
    scale = p.step_scale(sub_dt)
    c = p.carbon
    b12 = scale * c.b12
    b23 = scale * c.b23
    b21 = b12 * c.r1
    b32 = b23 * c.r2
    tp = p.temp
    # forcing multiplier: proportional non-CO2 forcing adds 30% on top
    fmul = 1.3 if pr.fex_mode == "proportional" else 1.0
    beta = (1.0 + e.rho) ** (-dt)
    return dict(
        dt=dt, n_sub=n_sub, sub_dt=sub_dt,
        b12=b12, b23=b23, b21=b21, b32=b32,
        dtc=scale,  # step multiplier on the temperature update
        tc1=tp.c1, tc3=tp.c3, tc4=tp.c4, lam=tp.lam,
        f2x=tp.f_2xco2, m_base=p.m_base, fmul=fmul,
        alpha=e.alpha, dk=(1.0 - e.delta_k) ** dt,
        psi1=e.psi1, psi2=e.psi2, th2=e.theta2,
        mult2007=(e.damage_form == "multiplicative-2007"),
        scale2016=(e.utility_scale == "per-capita-thousands-2016"),
        ies_e=1.0 - 1.0 / e.ies, beta=beta,
    )


def _start_state(pr: PolicyProblem):
    p = pr.preset
    m = pr.start_m if pr.start_m is not None else tuple(p.initial_state().m)
    t = pr.start_t if pr.start_t is not None else tuple(p.initial_state().t)
    k = pr.k0 if pr.k0 is not None else pr.econ.k0
    return (float(m[0]), float(m[1]), float(m[2]),
            float(t[0]), float(t[1]), float(k))


def _simulate(pr: PolicyProblem, mu, s, need_gradient=True,
              start=None):
    """Forward pass and, optionally, reverse adjoint pass.

    ``mu`` and ``s`` have length n_periods; the last entry is held over
    the continuation block.  Returns (objective, g_mu, g_s, record)
    where record carries the state/flow arrays over the full horizon and
    the costate sequences of the capital and atmospheric-carbon
    constraints.
    """
    C = _constants(pr)
    dt = C["dt"]
    n = pr.n_periods
    nt = pr.n_total
    exo = pr.exo
    ln2 = math.log(2.0)

    m1, m2, m3, ta, to, k = start if start is not None else _start_state(pr)

    # storage over the full horizon
    M1 = np.empty(nt + 1); M2 = np.empty(nt + 1); M3 = np.empty(nt + 1)
    TA = np.empty(nt + 1); TO = np.empty(nt + 1); K = np.empty(nt + 1)
    YG = np.empty(nt); YN = np.empty(nt); CONS = np.empty(nt)
    DAM = np.empty(nt); EMI = np.empty(nt)
    M1[0], M2[0], M3[0], TA[0], TO[0], K[0] = m1, m2, m3, ta, to, k

    b12, b21, b23, b32 = C["b12"], C["b21"], C["b23"], C["b32"]
    dtc, tc1, tc3, tc4, lam = C["dtc"], C["tc1"], C["tc3"], C["tc4"], C["lam"]
    f2x, m_base, fmul = C["f2x"], C["m_base"], C["fmul"]
    alpha, dk = C["alpha"], C["dk"]
    psi1, psi2, th2 = C["psi1"], C["psi2"], C["th2"]
    mult2007, scale2016 = C["mult2007"], C["scale2016"]
    e_ies = C["ies_e"]; beta = C["beta"]
    n_sub = C["n_sub"]; sub_dt = C["sub_dt"]

    a_arr = exo.a; l_arr = exo.l; sg_arr = exo.sigma
    t1_arr = exo.theta1; el_arr = exo.e_land; fx_arr = exo.f_ex

    w = 0.0
    disc = 1.0
    # cache per-period pieces needed by the reverse sweep
    cache = [None] * nt
    for i in range(nt):
        j = i if i < n else n - 1
        mu_i = mu[j]; s_i = s[j]
        lg = (l_arr[i] / 1000.0) ** (1.0 - alpha)
        yg = a_arr[i] * lg * k ** alpha
        lam_ab = t1_arr[i] * mu_i ** th2
        poly = psi1 * ta + psi2 * ta * ta
        if mult2007:
            dam = 1.0 - 1.0 / (1.0 + poly)
            ddam = (psi1 + 2.0 * psi2 * ta) / ((1.0 + poly) * (1.0 + poly))
        else:
            dam = poly
            ddam = psi1 + 2.0 * psi2 * ta
        net = 1.0 - lam_ab - dam
        yn = yg * net
        cons = (1.0 - s_i) * yn
        if cons <= 0.0:
            raise PolicyError(f"nonpositive consumption at period {i}")
        if scale2016:
            x = 1000.0 * cons / l_arr[i]
            ducdc = 1000.0 * x ** (e_ies - 1.0)
        else:
            x = cons / l_arr[i]
            ducdc = x ** (e_ies - 1.0)
        u = (x ** e_ies - 1.0) / e_ies * l_arr[i]
        w += disc * dt * u
        e_ind = sg_arr[i] * yg * (1.0 - mu_i)
        e_tot = e_ind + el_arr[i]
        # next state: capital at the economic step, climate at substeps
        k1 = dk * k + dt * s_i * yn
        fx_i = fx_arr[i]
        sub_e = sub_dt * e_tot
        m1_subs = [0.0] * n_sub
        for q in range(n_sub):
            m1_subs[q] = m1
            f = fmul * f2x * math.log(m1 / m_base) / ln2 + fx_i
            n1 = (1.0 - b12) * m1 + b21 * m2 + sub_e
            n2 = b12 * m1 + (1.0 - b21 - b23) * m2 + b32 * m3
            n3 = b23 * m2 + (1.0 - b32) * m3
            ta1 = ta + dtc * tc1 * (f - lam * ta - tc3 * (ta - to))
            to1 = to + dtc * tc4 * (ta - to)
            m1, m2, m3, ta, to = n1, n2, n3, ta1, to1
        cache[i] = (yg, yn, cons, mu_i, s_i, ddam, ducdc * disc * dt,
                    m1_subs, k)
        M1[i + 1], M2[i + 1], M3[i + 1] = m1, m2, m3
        TA[i + 1], TO[i + 1], K[i + 1] = ta, to, k1
        YG[i], YN[i], CONS[i], DAM[i], EMI[i] = yg, yn, cons, dam, e_tot
        k = k1
        disc *= beta

    record = dict(M1=M1, M2=M2, M3=M3, TA=TA, TO=TO, K=K,
                  YG=YG, YN=YN, CONS=CONS, DAM=DAM, EMI=EMI)
    if not need_gradient:
        return w, None, None, record

    # reverse sweep
    g_mu = np.zeros(n)
    g_s = np.zeros(n)
    LK = np.zeros(nt + 1)
    LM1 = np.zeros(nt + 1)
    lk = 0.0
    lm1 = lm2 = lm3 = 0.0
    lta = lto = 0.0
    for i in range(nt - 1, -1, -1):
        j = i if i < n else n - 1
        yg, yn, cons, mu_i, s_i, ddam, uc, m1_subs, k_i = cache[i]
        sg = sg_arr[i]; t1 = t1_arr[i]
        # pull the climate adjoints back through the period's substeps;
        # le accumulates the sensitivity to the period's emission rate
        le = 0.0
        for q in range(n_sub - 1, -1, -1):
            le += lm1 * sub_dt
            df_dm1 = fmul * f2x / (m1_subs[q] * ln2)
            new_lta = (lta * (1.0 - dtc * tc1 * (lam + tc3))
                       + lto * dtc * tc4)
            new_lto = lta * dtc * tc1 * tc3 + lto * (1.0 - dtc * tc4)
            new_lm1 = (1.0 - b12) * lm1 + b12 * lm2 + lta * dtc * tc1 * df_dm1
            new_lm2 = b21 * lm1 + (1.0 - b21 - b23) * lm2 + b23 * lm3
            new_lm3 = b32 * lm2 + (1.0 - b32) * lm3
            lta, lto = new_lta, new_lto
            lm1, lm2, lm3 = new_lm1, new_lm2, new_lm3
        # control derivatives
        dlam_dmu = t1 * th2 * mu_i ** (th2 - 1.0) if mu_i > 0.0 else 0.0
        dyn_dmu = -yg * dlam_dmu
        g_mu[j] += (uc * (1.0 - s_i) * dyn_dmu
                    + lk * dt * s_i * dyn_dmu
                    + le * (-sg * yg))
        g_s[j] += uc * (-yn) + lk * dt * yn
        # state adjoints at period i
        dyg_dk = alpha * yg / k_i
        dyn_dk = dyg_dk * (yn / yg)  # net fraction times marginal product
        de_dk = sg * (1.0 - mu_i) * dyg_dk
        new_lk = (uc * (1.0 - s_i) * dyn_dk
                  + lk * (dk + dt * s_i * dyn_dk)
                  + le * de_dk)
        dyn_dta = -yg * ddam
        lta += (uc * (1.0 - s_i) + lk * dt * s_i) * dyn_dta
        lk = new_lk
        LK[i] = lk
        LM1[i] = lm1
    record["LK"] = LK
    record["LM1"] = LM1
    return w, g_mu, g_s, record


# ---------------------------------------------------------------------------
# solving


def _solve_controls(pr: PolicyProblem, x0=None, maxiter=4000):
    """Run L-BFGS-B over the stacked control vector, return the optimum."""
    n = pr.n_periods
    bau = pr.scenario == "bau"

    def unpack(x):
        if bau:
            return np.zeros(n), x
        return x[:n], x[n:]

    # reference scale so convergence tolerances are dimensionless
    mu_ref = np.zeros(n) if bau else np.clip(0.03 * 1.01 ** np.arange(n), 0.0, 1.0)
    w_ref, _, _, _ = _simulate(pr, mu_ref, np.full(n, 0.25), need_gradient=False)
    u_scale = max(abs(w_ref), 1.0)

    def fun(x):
        mu, s = unpack(x)
        w, g_mu, g_s, _ = _simulate(pr, mu, s)
        g = g_s if bau else np.concatenate([g_mu, g_s])
        return -w / u_scale, -g / u_scale

    if x0 is None:
        s0 = np.full(n, 0.25)
        x0 = s0 if bau else np.concatenate([mu_ref, s0])
    if bau:
        bounds = [(_S_LO, _S_HI)] * n
    else:
        bounds = [(0.0, 1.0)] * n + [(_S_LO, _S_HI)] * n
    res = minimize(fun, x0, jac=True, method="L-BFGS-B", bounds=bounds,
                   options=dict(maxiter=maxiter, maxfun=4 * maxiter,
                                ftol=1e-14, gtol=1e-9, maxcor=30))
    x = res.x
    mu, s = unpack(x)
    # KKT residual: projected gradient of the scaled objective
    _, g_mu, g_s, _ = _simulate(pr, mu, s)
    g = (g_s if bau else np.concatenate([g_mu, g_s])) / u_scale
    lo = np.array([b[0] for b in bounds]); hi = np.array([b[1] for b in bounds])
    proj = np.where((x <= lo + 1e-12) & (g < 0), 0.0, g)
    proj = np.where((x >= hi - 1e-12) & (proj > 0), 0.0, proj)
    kkt = float(np.abs(proj).max())
    converged = kkt <= 1e-6
    return mu, s, kkt, converged, res


def _assemble(pr: PolicyProblem, mu, s, kkt, converged) -> Trajectory:
    w, _, _, rec = _simulate(pr, mu, s)
    n = pr.n_periods
    e = pr.econ
    lk = rec["LK"][:n]
    lm1 = rec["LM1"][:n]
    with np.errstate(divide="ignore", invalid="ignore"):
        scc_series = np.where(lk > 0.0, -lm1 / lk, 0.0) / C_TO_CO2
    scc_series = np.maximum(scc_series, 0.0)
    t1 = pr.exo.theta1[:n]
    sg = pr.exo.sigma[:n]
    tax = t1 * e.theta2 * np.asarray(mu) ** (e.theta2 - 1.0) / sg / C_TO_CO2
    years = pr.year0 + pr.dt * np.arange(n + 1)
    sl = slice(0, n)
    return Trajectory(
        problem=pr, years=years,
        m=np.column_stack([rec["M1"][:n + 1], rec["M2"][:n + 1], rec["M3"][:n + 1]]),
        t=np.column_stack([rec["TA"][:n + 1], rec["TO"][:n + 1]]),
        k=rec["K"][:n + 1],
        c=rec["CONS"][sl], y_gross=rec["YG"][sl], y_net=rec["YN"][sl],
        damage_frac=rec["DAM"][sl],
        mu=np.asarray(mu, dtype=float), s=np.asarray(s, dtype=float),
        emissions=rec["EMI"][sl] * 1000.0,
        scc=scc_series, carbon_tax=tax,
        objective=w, kkt_residual=kkt, converged=converged,
        lam_k=lk, lam_m_at=lm1,
    )


def solve(problem: PolicyProblem, x0=None, maxiter=4000) -> Trajectory:
    """Solve a problem instance to a KKT point and assemble the result."""
    mu, s, kkt, converged, res = _solve_controls(problem, x0=x0, maxiter=maxiter)
    if not converged and not res.success:
        raise PolicyError(f"optimizer failed: {res.message} (kkt={kkt:.2e})")
    return _assemble(problem, mu, s, kkt, converged)


def solve_bau(preset, **kwargs) -> Trajectory:
    """Savings-only optimum with mitigation pinned at zero."""
    if isinstance(preset, PolicyProblem):
        pr = preset if preset.scenario == "bau" else replace(preset, scenario="bau")
    else:
        pr = make_problem(preset, scenario="bau", **kwargs)
    return solve(pr)


def solve_optimal(preset, **kwargs) -> Trajectory:
    """Joint mitigation and savings optimum."""
    if isinstance(preset, PolicyProblem):
        pr = preset if preset.scenario == "optimal" else replace(preset, scenario="optimal")
    else:
        pr = make_problem(preset, scenario="optimal", **kwargs)
    return solve(pr)


# ---------------------------------------------------------------------------
# social cost of carbon and carbon tax


def scc(problem: PolicyProblem, trajectory: Trajectory) -> np.ndarray:
    """Costate-based SCC series in 2010 USD per ton of carbon.

    The raw marginal rate of substitution (trillion USD per 1000 GtC)
    is divided by the CO2/C mass ratio 3.666, the normalization under
    which the published 2020 values are quoted.
    """
    if not trajectory.converged:
        raise PolicyError("SCC requested from an unconverged trajectory")
    return trajectory.scc


def carbon_tax(trajectory: Trajectory, exo: ExogenousPath | None = None) -> np.ndarray:
    """Carbon tax CT_t = theta1_t theta2 mu_t^(theta2-1) / sigma_t.

    Normalized like the SCC.  Where mu_t has hit its upper bound the tax
    is still reported but no longer equals the SCC.
    """
    if exo is not None:
        pr = trajectory.problem
        e = pr.econ
        n = pr.n_periods
        return (exo.theta1[:n] * e.theta2 * trajectory.mu ** (e.theta2 - 1.0)
                / exo.sigma[:n] / C_TO_CO2)
    return trajectory.carbon_tax


def scc_finite_difference(problem: PolicyProblem, trajectory: Trajectory,
                          h_m=1e-4, h_k=1e-2, reoptimize=True) -> float:
    """Finite-difference SCC at t=0 (USD/tC) as an independent check.

    Central differences of the optimal value with respect to the initial
    atmospheric carbon mass and capital stock; with ``reoptimize`` the
    controls are re-solved at each perturbed start (warm-started).
    """
    pr = problem
    n = pr.n_periods
    base = _start_state(pr)

    def value(dm, dk_):
        start = (base[0] + dm, base[1], base[2], base[3], base[4], base[5] + dk_)
        if reoptimize:
            mu, s = trajectory.mu, trajectory.s
            bau = pr.scenario == "bau"
            x0 = s if bau else np.concatenate([mu, s])
            pr2 = replace(pr, start_m=(start[0], start[1], start[2]),
                          start_t=(start[3], start[4]), k0=start[5])
            mu2, s2, _, _, _ = _solve_controls(pr2, x0=x0, maxiter=500)
            w, _, _, _ = _simulate(pr2, mu2, s2, need_gradient=False)
        else:
            w, _, _, _ = _simulate(pr, trajectory.mu, trajectory.s,
                                   need_gradient=False, start=start)
        return w

    dv_dm = (value(h_m, 0.0) - value(-h_m, 0.0)) / (2.0 * h_m)
    dv_dk = (value(0.0, h_k) - value(0.0, -h_k)) / (2.0 * h_k)
    return float(-dv_dm / dv_dk / C_TO_CO2)


# ---------------------------------------------------------------------------
# sweeps and CSV output


def sweep(presets, rhos=(0.015,), damages=("nordhaus",),
          fex_modes=("proportional",), scenario="optimal") -> dict:
    """Cartesian product of solves; keys are (preset, rho, damage, fex)."""
    out = {}
    for name in presets:
        for rho in rhos:
            for dmg in damages:
                for fx in fex_modes:
                    pr = make_problem(name, scenario=scenario, rho=rho,
                                      damage=dmg, fex_mode=fx)
                    out[(name, rho, dmg, fx)] = solve(pr)
    return out


def write_trajectory_csv(traj: Trajectory, path) -> None:
    """Flat per-period CSV with the fixed column set."""
    n = traj.problem.n_periods
    cols = dict(
        year=traj.years[:n],
        m_at=traj.m[:n, 0], m_uo=traj.m[:n, 1], m_lo=traj.m[:n, 2],
        t_at=traj.t[:n, 0], t_oc=traj.t[:n, 1],
        k=traj.k[:n], c=traj.c, y_gross=traj.y_gross, y_net=traj.y_net,
        damage_frac=traj.damage_frac, mu=traj.mu, s=traj.s,
        emissions=traj.emissions, scc=traj.scc, carbon_tax=traj.carbon_tax,
    )
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(TRAJECTORY_COLUMNS) + "\n")
        for i in range(n):
            fh.write(",".join(f"{cols[c][i]:.10g}" for c in TRAJECTORY_COLUMNS) + "\n")


def write_sweep_summary(results: dict, path) -> None:
    """One row per sweep cell: headline numbers for comparison tables."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("preset,rho,damage,fex_mode,scc_2020,peak_t_at,"
                 "t_at_2100,mu_2050,objective,kkt\n")
        for (name, rho, dmg, fx), tr in results.items():
            fh.write(",".join([
                name, f"{rho:g}", dmg, fx,
                f"{tr.at_year(2020, 'scc'):.4f}",
                f"{tr.t[:, 0].max():.4f}",
                f"{tr.at_year(2100, 't_at'):.4f}" if tr.years[-1] >= 2100 else "",
                f"{tr.at_year(2050, 'mu'):.4f}",
                f"{tr.objective:.6g}", f"{tr.kkt_residual:.2e}",
            ]) + "\n")
