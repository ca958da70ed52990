"""Three-box carbon cycle and two-layer energy balance model.

The carbon cycle exchanges mass between atmosphere (AT), upper ocean (UO)
and lower ocean (LO) through a column-stochastic transfer matrix; the
temperature model couples an atmosphere/upper-ocean layer to the deep
ocean.  All transfer coefficients are annual; the time step multiplies
them explicitly at integration time.  The one exception is the original
DICE-2016 parameterization, whose coefficients absorb a 5-year step and
which therefore runs only at its native step (``coeffs_absorb_dt``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "CarbonParams",
    "TempParams",
    "ClimateState",
    "ClimatePreset",
    "ClimateSeries",
    "PRESETS",
    "get_preset",
    "build_transfer_matrix",
    "step_carbon",
    "forcing",
    "step_temperature",
    "run_climate",
]


class ClimateError(ValueError):
    """Invalid climate parameters or integration setup."""


@dataclass(frozen=True)
class CarbonParams:
    """Free parameters of the three-box carbon cycle.

    b12, b23 are transfer fractions per year (AT->UO and UO->LO); m_eq is
    the pre-industrial equilibrium mass in each reservoir in 1000 GtC.
    """

    b12: float
    b23: float
    m_eq: tuple[float, float, float]

    def __post_init__(self):
        if not (0.0 <= self.b12 < 1.0 and 0.0 <= self.b23 < 1.0):
            raise ClimateError(f"transfer fractions out of range: b12={self.b12}, b23={self.b23}")
        if any(m <= 0.0 for m in self.m_eq):
            raise ClimateError(f"equilibrium masses must be positive: {self.m_eq}")

    @property
    def r1(self) -> float:
        """Equilibrium mass ratio AT/UO."""
        return self.m_eq[0] / self.m_eq[1]

    @property
    def r2(self) -> float:
        """Equilibrium mass ratio UO/LO."""
        return self.m_eq[1] / self.m_eq[2]


@dataclass(frozen=True)
class TempParams:
    """Free parameters of the two-layer energy balance model.

    c1: inverse heat capacity of the upper layer [K/(W/m^2)/yr]
    c3: upper/lower heat exchange coefficient [W/m^2/K]
    c4: inverse heat capacity of the deep layer times c3 [1/yr]
    f_2xco2: forcing of a CO2 doubling [W/m^2]
    t_2xco2: equilibrium climate sensitivity [K]
    """

    c1: float
    c3: float
    c4: float
    f_2xco2: float
    t_2xco2: float

    def __post_init__(self):
        for name in ("c1", "c3", "c4", "f_2xco2", "t_2xco2"):
            if getattr(self, name) <= 0.0:
                raise ClimateError(f"TempParams.{name} must be strictly positive")

    @property
    def lam(self) -> float:
        """Radiative feedback parameter, always derived from f_2xco2 / ECS."""
        return self.f_2xco2 / self.t_2xco2


@dataclass(frozen=True)
class ClimateState:
    """Reservoir masses (1000 GtC) and layer temperatures (K above pre-industrial)."""

    m: tuple[float, float, float]
    t: tuple[float, float]

    def __post_init__(self):
        if any(x < 0.0 for x in self.m):
            raise ClimateError(f"negative carbon mass: {self.m}")


@dataclass(frozen=True)
class ClimatePreset:
    name: str
    carbon: CarbonParams
    temp: TempParams
    native_dt: int
    m_ini: tuple[float, float, float]
    t_ini: tuple[float, float]
    m_base: float
    # True for parameterizations whose coefficients already contain the
    # native step; the stepper applies them once per native step, or a
    # proportional fraction for other step lengths (so the annualized
    # variant divides every absorbed coefficient by the native step).
    coeffs_absorb_dt: bool = False

    def step_scale(self, dt: float) -> float:
        """Multiplier applied to the stored coefficients for a step of dt years."""
        if self.coeffs_absorb_dt:
            return float(dt) / self.native_dt
        return float(dt)

    def initial_state(self) -> ClimateState:
        return ClimateState(m=self.m_ini, t=self.t_ini)

    def equilibrium_state(self) -> ClimateState:
        return ClimateState(m=self.carbon.m_eq, t=(0.0, 0.0))


def _check_stability(carbon: CarbonParams, temp: TempParams, scale: float) -> None:
    # Explicit-Euler guard: diagonal entries of the carbon update and the
    # fast temperature mode must remain contractive.
    if scale * (carbon.b12 * (1.0 + carbon.r1) + carbon.b23) >= 1.0:
        raise ClimateError(f"time step too large for carbon cycle (scale={scale})")
    if scale * temp.c1 * (temp.lam + temp.c3) >= 2.0:
        raise ClimateError(f"time step too large for temperature equations (scale={scale})")


def build_transfer_matrix(p: CarbonParams, dt: float = 1.0) -> np.ndarray:
    """Assemble the 3x3 mass-transfer matrix for a step of dt years.

    Columns sum to one (mass conservation) and there is no direct
    AT <-> LO exchange.
    """
    b12 = dt * p.b12
    b23 = dt * p.b23
    b21 = b12 * p.r1
    b32 = b23 * p.r2
    B = np.array(
        [
            [1.0 - b12, b21, 0.0],
            [b12, 1.0 - b21 - b23, b32],
            [0.0, b23, 1.0 - b32],
        ]
    )
    if (B < 0.0).any():
        raise ClimateError("transfer matrix has negative entries (unphysical rates or dt too large)")
    return B


def step_carbon(m, p: CarbonParams, e: float, dt: float, transfer_dt: float | None = None):
    """Advance reservoir masses by one step of dt years.

    e is the emission rate to the atmosphere in 1000 GtC per year; the
    total mass changes by exactly dt*e.  ``transfer_dt`` scales the
    transfer coefficients and defaults to dt; it differs only for
    parameterizations whose coefficients absorb their native step.
    """
    if transfer_dt is None:
        transfer_dt = dt
    b12 = transfer_dt * p.b12
    b23 = transfer_dt * p.b23
    b21 = b12 * p.r1
    b32 = b23 * p.r2
    if b12 + 0.0 > 1.0 or b21 + b23 > 1.0 or b32 > 1.0:
        raise ClimateError(f"dt={dt} drives a transfer-matrix diagonal below zero")
    m_at, m_uo, m_lo = m
    m_at_next = (1.0 - b12) * m_at + b21 * m_uo + dt * e
    m_uo_next = b12 * m_at + (1.0 - b21 - b23) * m_uo + b32 * m_lo
    m_lo_next = b23 * m_uo + (1.0 - b32) * m_lo
    if m_at_next < 0.0 or m_uo_next < 0.0 or m_lo_next < 0.0:
        raise ClimateError("negative reservoir mass after step (net removal too large)")
    return (m_at_next, m_uo_next, m_lo_next)


def forcing(m_at: float, m_base: float, f_ex: float, p: TempParams) -> float:
    """Total radiative forcing in W/m^2: logarithmic CO2 term plus exogenous part."""
    if m_at <= 0.0 or m_base <= 0.0:
        raise ClimateError("forcing requires positive atmospheric masses")
    return p.f_2xco2 * math.log2(m_at / m_base) + f_ex


def step_temperature(t, f: float, p: TempParams, dt: float):
    """Advance the two layer temperatures by one step of dt years under forcing f."""
    t_at, t_oc = t
    t_at_next = t_at + dt * p.c1 * (f - p.lam * t_at - p.c3 * (t_at - t_oc))
    t_oc_next = t_oc + dt * p.c4 * (t_at - t_oc)
    return (t_at_next, t_oc_next)


@dataclass
class ClimateSeries:
    """Result of a climate integration: state at steps 0..n, forcing at 0..n-1."""

    years: np.ndarray  # calendar years or years-from-start, length n+1
    m: np.ndarray  # (n+1, 3) in 1000 GtC
    t: np.ndarray  # (n+1, 2) in K
    f: np.ndarray  # (n,) in W/m^2

    @property
    def t_at(self) -> np.ndarray:
        return self.t[:, 0]

    @property
    def m_at(self) -> np.ndarray:
        return self.m[:, 0]


def run_climate(
    preset: ClimatePreset,
    n_steps: int,
    dt: float = 1.0,
    emissions=None,
    concentration=None,
    f_ex=None,
    f_ex_frac: float | None = None,
    start: ClimateState | None = None,
    year0: float = 0.0,
) -> ClimateSeries:
    """Integrate the climate for n_steps steps of dt years.

    Exactly one of ``emissions`` (1000 GtC/yr, length >= n_steps) or
    ``concentration`` (atmospheric mass path in 1000 GtC, length >= n_steps)
    must be given.  In concentration-driven mode the atmospheric mass is
    overwritten from the path at each step before the forcing is evaluated.
    Non-CO2 forcing is either an explicit path ``f_ex`` (W/m^2) or a
    fraction ``f_ex_frac`` of the current CO2 forcing; default is zero.
    """
    if (emissions is None) == (concentration is None):
        raise ClimateError("supply exactly one of emissions or concentration")
    scale = preset.step_scale(dt)
    _check_stability(preset.carbon, preset.temp, scale)

    driver = emissions if emissions is not None else concentration
    driver = np.asarray(driver, dtype=float)
    if driver.shape[0] < n_steps:
        raise ClimateError(f"driver path has {driver.shape[0]} entries, need {n_steps}")
    if f_ex is not None:
        f_ex = np.asarray(f_ex, dtype=float)
        if f_ex.shape[0] < n_steps:
            raise ClimateError(f"f_ex path has {f_ex.shape[0]} entries, need {n_steps}")

    state = start if start is not None else preset.initial_state()
    m = np.empty((n_steps + 1, 3))
    t = np.empty((n_steps + 1, 2))
    f = np.empty(n_steps)
    m[0] = state.m
    t[0] = state.t
    cur_m = tuple(state.m)
    cur_t = tuple(state.t)

    for i in range(n_steps):
        if concentration is not None:
            cur_m = (float(driver[i]), cur_m[1], cur_m[2])
            m[i] = cur_m
        f_co2 = preset.temp.f_2xco2 * math.log2(cur_m[0] / preset.m_base)
        if f_ex_frac is not None:
            fex_i = f_ex_frac * f_co2
        elif f_ex is not None:
            fex_i = float(f_ex[i])
        else:
            fex_i = 0.0
        f[i] = f_co2 + fex_i
        cur_t = step_temperature(cur_t, f[i], preset.temp, scale)
        if emissions is not None:
            cur_m = step_carbon(cur_m, preset.carbon, float(driver[i]), dt, transfer_dt=scale)
        else:
            cur_m = step_carbon(cur_m, preset.carbon, 0.0, dt, transfer_dt=scale)
        m[i + 1] = cur_m
        t[i + 1] = cur_t

    if concentration is not None and driver.shape[0] > n_steps:
        m[n_steps, 0] = driver[n_steps]

    years = year0 + dt * np.arange(n_steps + 1)
    return ClimateSeries(years=years, m=m, t=t, f=f)


def _preset(name, b12, b23, m_eq, c1, c3, c4, f2x, ecs, native_dt, m_ini, t_ini, m_base, absorbed=False):
    return ClimatePreset(
        name=name,
        carbon=CarbonParams(b12=b12, b23=b23, m_eq=m_eq),
        temp=TempParams(c1=c1, c3=c3, c4=c4, f_2xco2=f2x, t_2xco2=ecs),
        native_dt=native_dt,
        m_ini=m_ini,
        t_ini=t_ini,
        m_base=m_base,
        coeffs_absorb_dt=absorbed,
    )


PRESETS: dict[str, ClimatePreset] = {
    # Original 2016 parameterization; the 5-year step is baked into the
    # coefficients, so this preset runs only at dt=5.
    "DICE-2016": _preset(
        "DICE-2016",
        b12=0.12, b23=0.007, m_eq=(0.588, 0.360, 1.720),
        c1=0.1005, c3=0.088, c4=0.025, f2x=3.6813, ecs=3.1,
        native_dt=5, m_ini=(0.851, 0.460, 1.740), t_ini=(0.85, 0.0068),
        m_base=0.588, absorbed=True,
    ),
    # Same physics with the step-handling errors corrected and annual coefficients.
    "DICE-2016-BF": _preset(
        "DICE-2016-BF",
        b12=0.024, b23=0.0014, m_eq=(0.588, 0.360, 1.720),
        c1=0.1005, c3=0.876, c4=0.005, f2x=3.6813, ecs=3.1,
        native_dt=1, m_ini=(0.851, 0.460, 1.740), t_ini=(0.85, 0.0068),
        m_base=0.588,
    ),
    # Recalibrated against the CMIP5 multi-model mean.
    "CDICE": _preset(
        "CDICE",
        b12=0.053, b23=0.0042, m_eq=(0.607, 0.600, 1.772),
        c1=0.137, c3=0.73, c4=0.00689, f2x=3.45, ecs=3.25,
        native_dt=1, m_ini=(0.85009, 0.7649, 1.79912), t_ini=(1.2778, 0.3132),
        m_base=0.607,
    ),
    # High-ECS CMIP5 end member (same carbon cycle as CDICE).
    "CDICE-HadGEM2-ES": _preset(
        "CDICE-HadGEM2-ES",
        b12=0.053, b23=0.0042, m_eq=(0.607, 0.600, 1.772),
        c1=0.154, c3=0.55, c4=0.00671, f2x=2.95, ecs=4.55,
        native_dt=1, m_ini=(0.85009, 0.7649, 1.79912), t_ini=(1.2778, 0.3132),
        m_base=0.607,
    ),
    # Low-ECS CMIP5 end member (same carbon cycle as CDICE).
    "CDICE-GISS-E2-R": _preset(
        "CDICE-GISS-E2-R",
        b12=0.053, b23=0.0042, m_eq=(0.607, 0.600, 1.772),
        c1=0.213, c3=1.16, c4=0.00921, f2x=3.65, ecs=2.15,
        native_dt=1, m_ini=(0.85009, 0.7649, 1.79912), t_ini=(1.2778, 0.3132),
        m_base=0.607,
    ),
    # 2007 vintage, annual coefficients, ten-year native step.
    "DICE-2007": _preset(
        "DICE-2007",
        b12=0.0189288, b23=0.005, m_eq=(0.587473, 1.143894, 18.340),
        c1=0.022, c3=0.3, c4=0.01, f2x=3.8, ecs=3.0,
        native_dt=10, m_ini=(0.8089, 1.255, 18.365), t_ini=(0.7307, 0.0068),
        m_base=0.5964,
    ),
}


def get_preset(name: str) -> ClimatePreset:
    try:
        return PRESETS[name]
    except KeyError:
        raise ClimateError(f"unknown preset {name!r}; known: {sorted(PRESETS)}") from None
