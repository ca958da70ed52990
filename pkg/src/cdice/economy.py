"""Economic side of the model: exogenous drivers, production, damages,
abatement cost, utility and discounting in the generic arbitrary-time-step
formulation, with 2007 and 2016 parameter presets.

Period index t counts model periods of ``t_step`` years each; the
exogenous laws of motion embed t_step so the same constants serve annual
and multi-year calibrations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

__all__ = [
    "EconParams",
    "ExogenousPath",
    "EconError",
    "econ_preset",
    "labor",
    "labor_growth",
    "tfp",
    "carbon_intensity",
    "abatement_coeff",
    "land_emissions",
    "exogenous_forcing",
    "make_exogenous_path",
    "gross_output",
    "damages",
    "abatement_cost",
    "step_economy",
    "period_utility",
    "discount_factor",
]


class EconError(ValueError):
    """Invalid economic parameters or state."""


@dataclass(frozen=True)
class EconParams:
    # core economy
    delta_k: float  # capital depreciation per year
    alpha: float  # capital share
    psi1: float  # linear damage coefficient [1/K]
    psi2: float  # quadratic damage coefficient [1/K^2]
    theta2: float  # abatement cost exponent
    ies: float  # intertemporal elasticity of substitution
    rho: float  # pure time preference per year
    t_step: float  # years per period
    damage_form: str  # "subtractive-2016" | "multiplicative-2007"
    utility_scale: str  # "per-capita-thousands-2016" | "per-capita-2007"
    # exogenous generating constants
    l0: float  # initial population [millions]
    l_inf: float  # asymptotic population [millions]
    delta_l: float  # population convergence rate per year
    a0: float  # initial TFP
    g_a0: float  # initial TFP growth per year
    delta_a: float  # TFP growth decline per year
    sigma0: float  # initial carbon intensity [1000 GtC per unit gross output]
    g_sigma0: float  # initial decarbonization rate per year (negative)
    delta_sigma: float  # decline rate of decarbonization per year
    sigma_form: str  # "2007" | "2016"
    p_back0: float  # initial backstop cost [thousand USD per tC (2007) / tCO2 (2016)]
    g_back: float  # backstop cost decline per period-year
    c2co2: float  # carbon to CO2 mass conversion (0 means not used, 2007 form)
    eland0: float  # initial land-use emissions [1000 GtC/yr]
    delta_land: float  # land-use emission decline per year
    fex0: float  # non-CO2 forcing at start [W/m^2]
    fex1: float  # non-CO2 forcing at the year-2100 period [W/m^2]
    fex_years: float  # years from start until fex reaches fex1
    k0: float = 223.0  # initial capital, trillions USD

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise EconError("alpha must lie in (0, 1)")
        if not 0.0 < self.delta_k < 1.0:
            raise EconError("delta_k must lie in (0, 1)")
        if self.rho <= 0.0:
            raise EconError("rho must be positive")
        if self.theta2 <= 1.0:
            raise EconError("theta2 must exceed 1")
        if self.psi2 < 0.0:
            raise EconError("psi2 must be nonnegative")


_ECON_2016 = EconParams(
    delta_k=0.1, alpha=0.3, psi1=0.0, psi2=0.00236, theta2=2.6, ies=0.67,
    rho=0.015, t_step=5.0, damage_form="subtractive-2016",
    utility_scale="per-capita-thousands-2016",
    l0=7403.0, l_inf=11500.0, delta_l=0.0268,
    a0=5.115, g_a0=0.0152, delta_a=0.005,
    sigma0=0.00009556, g_sigma0=-0.0152, delta_sigma=0.001, sigma_form="2016",
    p_back0=0.55, g_back=0.005, c2co2=3.666,
    eland0=0.000709, delta_land=0.023,
    fex0=0.5, fex1=1.0, fex_years=85.0,
    k0=223.0,
)

_ECON_2007 = EconParams(
    delta_k=0.1, alpha=0.3, psi1=0.0, psi2=0.0028388, theta2=2.8, ies=0.5,
    rho=0.015, t_step=10.0, damage_form="multiplicative-2007",
    utility_scale="per-capita-2007",
    l0=6514.0, l_inf=8600.0, delta_l=0.035,
    a0=0.02722, g_a0=0.0092, delta_a=0.001,
    sigma0=0.00013418, g_sigma0=-0.0073, delta_sigma=0.003, sigma_form="2007",
    p_back0=0.585, g_back=0.005, c2co2=0.0,
    eland0=0.0011, delta_land=0.01,
    fex0=-0.06, fex1=0.3, fex_years=100.0,
    k0=137.0,
)

# Alternative damage calibration: same subtractive form, steeper quadratic term.
HOWARD_STERNER_PSI2 = 0.007438


def econ_preset(name: str, t_step: float | None = None, rho: float | None = None,
                damage: str = "nordhaus") -> EconParams:
    """Return economic parameters for a named calibration.

    ``damage`` selects "nordhaus" (preset default) or "howard-sterner"
    (psi1=0, psi2=0.007438 on the subtractive form).
    """
    if name in ("DICE-2016", "DICE-2016-BF", "CDICE", "CDICE-HadGEM2-ES", "CDICE-GISS-E2-R"):
        p = _ECON_2016
    elif name == "DICE-2007":
        p = _ECON_2007
    else:
        raise EconError(f"unknown economic preset {name!r}")
    if t_step is not None:
        p = replace(p, t_step=float(t_step))
    if rho is not None:
        p = replace(p, rho=float(rho))
    if damage == "howard-sterner":
        p = replace(p, psi1=0.0, psi2=HOWARD_STERNER_PSI2, damage_form="subtractive-2016")
    elif damage != "nordhaus":
        raise EconError(f"unknown damage variant {damage!r}")
    return p


# ---------------------------------------------------------------------------
# exogenous laws of motion (period index t, t_step embedded)

def labor(t, p: EconParams):
    """World population in millions at period t."""
    t = np.asarray(t, dtype=float)
    return p.l0 + (p.l_inf - p.l0) * (1.0 - np.exp(-p.t_step * p.delta_l * t))


def labor_growth(t, p: EconParams):
    """Instantaneous population growth rate per period at period t."""
    t = np.asarray(t, dtype=float)
    denom = p.l_inf / (p.l_inf - p.l0) * np.exp(p.t_step * p.delta_l * t) - 1.0
    return p.t_step * p.delta_l / denom


def tfp(t, p: EconParams):
    """Total factor productivity at period t."""
    t = np.asarray(t, dtype=float)
    g = p.t_step * p.g_a0 * (1.0 - np.exp(-p.t_step * p.delta_a * t)) / (p.t_step * p.delta_a)
    return p.a0 * np.exp(g)


def carbon_intensity(t, p: EconParams):
    """Emissions per unit of gross output (1000 GtC / trillion USD) at period t."""
    t = np.asarray(t, dtype=float)
    if p.sigma_form == "2016":
        expo = (p.t_step * p.g_sigma0 / math.log(1.0 + p.t_step * p.delta_sigma)
                * ((1.0 + p.t_step * p.delta_sigma) ** t - 1.0))
    else:
        expo = (p.t_step * p.g_sigma0 * (1.0 - np.exp(-p.t_step * p.delta_sigma * t))
                / (p.t_step * p.delta_sigma))
    return p.sigma0 * np.exp(expo)


def abatement_coeff(t, p: EconParams, sigma=None):
    """Abatement cost coefficient theta1 at period t."""
    t = np.asarray(t, dtype=float)
    if sigma is None:
        sigma = carbon_intensity(t, p)
    if p.sigma_form == "2016":
        return p.p_back0 * np.exp(-p.g_back * t) * 1000.0 * p.c2co2 * sigma / p.theta2
    return p.p_back0 * (1.0 + np.exp(-p.g_back * t)) * 1000.0 * sigma / p.theta2


def land_emissions(t, p: EconParams):
    """Non-industrial (land use) emissions in 1000 GtC/yr at period t."""
    t = np.asarray(t, dtype=float)
    return p.eland0 * np.exp(-p.t_step * p.delta_land * t)


def exogenous_forcing(t, p: EconParams, mode: str = "linear", f_co2=None):
    """Non-CO2 forcing in W/m^2 at period t.

    Linear mode ramps from fex0 to fex1 over the first fex_years years and
    stays constant after; proportional mode returns 0.3 times the supplied
    CO2 forcing.
    """
    if mode == "proportional":
        if f_co2 is None:
            raise EconError("proportional forcing mode needs the current CO2 forcing")
        return 0.3 * np.asarray(f_co2, dtype=float)
    t = np.asarray(t, dtype=float)
    n_ramp = p.fex_years / p.t_step
    return p.fex0 + (p.fex1 - p.fex0) / n_ramp * np.minimum(t, n_ramp)


@dataclass(frozen=True)
class ExogenousPath:
    """Precomputed per-period series of all exogenous drivers."""

    l: np.ndarray  # millions
    a: np.ndarray  # TFP
    sigma: np.ndarray  # 1000 GtC per trillion USD gross output
    theta1: np.ndarray  # abatement cost coefficient
    e_land: np.ndarray  # 1000 GtC/yr
    f_ex: np.ndarray  # W/m^2

    def __len__(self):
        return len(self.l)


def make_exogenous_path(p: EconParams, n_periods: int, fex_mode: str = "linear") -> ExogenousPath:
    """Generate all exogenous series for periods 0..n_periods-1.

    With ``fex_mode="proportional"`` the f_ex entries are zero and the
    climate integration applies the 0.3 * F_CO2 rule instead.
    """
    t = np.arange(n_periods)
    sigma = carbon_intensity(t, p)
    if fex_mode == "proportional":
        fex = np.zeros(n_periods)
    else:
        fex = exogenous_forcing(t, p, mode="linear")
    return ExogenousPath(
        l=labor(t, p),
        a=tfp(t, p),
        sigma=sigma,
        theta1=abatement_coeff(t, p, sigma=sigma),
        e_land=land_emissions(t, p),
        f_ex=fex,
    )


# ---------------------------------------------------------------------------
# within-period economics

def gross_output(k: float, t: int, p: EconParams, exo: ExogenousPath) -> float:
    """Cobb-Douglas gross output in trillions USD; labor enters in billions."""
    if k <= 0.0:
        raise EconError("capital must be positive")
    return exo.a[t] * (exo.l[t] / 1000.0) ** (1.0 - p.alpha) * k ** p.alpha


def damages(t_at: float, p: EconParams) -> float:
    """Fraction of gross output lost at atmospheric warming t_at."""
    poly = p.psi1 * t_at + p.psi2 * t_at * t_at
    if p.damage_form == "multiplicative-2007":
        return 1.0 - 1.0 / (1.0 + poly)
    return poly


def abatement_cost(mu: float, theta1: float, theta2: float) -> float:
    """Fraction of gross output spent on abatement at mitigation rate mu."""
    return theta1 * mu ** theta2


def step_economy(k: float, mu: float, s: float, t_at: float, t: int,
                 p: EconParams, exo: ExogenousPath, dt: float | None = None):
    """Advance the economy one period.

    Controls are the mitigation rate mu and the savings rate s, both in
    [0, 1].  Returns (k_next, consumption, y_gross, y_net, e_industrial)
    with emissions in 1000 GtC per year.
    """
    if not 0.0 <= mu <= 1.0:
        raise EconError(f"mitigation rate out of bounds: {mu}")
    if not 0.0 <= s <= 1.0:
        raise EconError(f"savings rate out of bounds: {s}")
    if dt is None:
        dt = p.t_step
    y_gross = gross_output(k, t, p, exo)
    y_net = y_gross * (1.0 - abatement_cost(mu, exo.theta1[t], p.theta2) - damages(t_at, p))
    inv = s * y_net
    c = y_net - inv
    if c <= 0.0:
        raise EconError("nonpositive consumption")
    k_next = (1.0 - p.delta_k) ** dt * k + dt * inv
    if k_next < 0.0:
        raise EconError("negative capital")
    e_ind = exo.sigma[t] * y_gross * (1.0 - mu)
    return k_next, c, y_gross, y_net, e_ind


def period_utility(c: float, l: float, p: EconParams) -> float:
    """Per-period utility contribution (before discounting and t_step weight)."""
    if c <= 0.0:
        raise EconError("nonpositive consumption")
    if p.utility_scale == "per-capita-thousands-2016":
        x = 1000.0 * c / l  # thousands of USD per person per year
    else:
        x = c / l
    e = 1.0 - 1.0 / p.ies
    return (x ** e - 1.0) / e * l


def discount_factor(p: EconParams) -> float:
    """Per-period discount factor beta = (1+rho)^(-t_step)."""
    return (1.0 + p.rho) ** (-p.t_step)
