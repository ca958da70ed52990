"""Carbon-cycle and energy-balance core: invariants and hand oracles."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdice.climate import (
    PRESETS,
    CarbonParams,
    ClimateError,
    ClimateState,
    TempParams,
    build_transfer_matrix,
    forcing,
    get_preset,
    run_climate,
    step_carbon,
    step_temperature,
)

CDICE = get_preset("CDICE")


@st.composite
def carbon_strategy(draw):
    return CarbonParams(
        b12=draw(st.floats(1e-4, 0.2)),
        b23=draw(st.floats(1e-4, 0.05)),
        m_eq=(draw(st.floats(0.3, 1.0)), draw(st.floats(0.3, 1.0)),
              draw(st.floats(1.0, 20.0))),
    )


# ---------------------------------------------------------------------------
# presets


def test_registry_contents():
    assert set(PRESETS) == {
        "DICE-2016", "DICE-2016-BF", "CDICE", "CDICE-HadGEM2-ES",
        "CDICE-GISS-E2-R", "DICE-2007",
    }
    with pytest.raises(ClimateError):
        get_preset("DICE-2042")


def test_cdice_family_shares_carbon_cycle():
    for name in ("CDICE-HadGEM2-ES", "CDICE-GISS-E2-R"):
        assert get_preset(name).carbon == CDICE.carbon
        assert get_preset(name).m_ini == CDICE.m_ini
        assert get_preset(name).t_ini == CDICE.t_ini


def test_lambda_derived_from_f2x_over_ecs():
    t = CDICE.temp
    assert t.lam == pytest.approx(3.45 / 3.25, rel=1e-12)


def test_step_scale_absorbed_vs_annual():
    d16 = get_preset("DICE-2016")
    assert d16.step_scale(5.0) == 1.0
    assert d16.step_scale(1.0) == pytest.approx(0.2)
    assert CDICE.step_scale(1.0) == 1.0
    assert CDICE.step_scale(5.0) == 5.0


# ---------------------------------------------------------------------------
# carbon cycle


def test_single_step_hand_oracle():
    # CDICE from the 2015 state, constant emissions 0.010 (1000 GtC/yr), dt=1:
    # M_AT' = M_AT - b12 M_AT + b12 r1^-1 ... evaluated by hand
    m = CDICE.m_ini
    e = 0.010
    expect = m[0] - 0.053 * m[0] + 0.053 * (0.607 / 0.600) * m[1] + e
    got = step_carbon(m, CDICE.carbon, e, dt=1.0)
    assert got[0] == pytest.approx(expect, abs=1e-12)


def test_transfer_matrix_columns_sum_to_one():
    b = build_transfer_matrix(CDICE.carbon, dt=1.0)
    assert np.allclose(b.sum(axis=0), 1.0, atol=1e-15)
    assert b[0, 2] == 0.0 and b[2, 0] == 0.0  # no direct AT <-> LO exchange


def test_transfer_matrix_rejects_too_large_step():
    with pytest.raises(ClimateError):
        build_transfer_matrix(CDICE.carbon, dt=25.0)


@settings(max_examples=50, deadline=None)
@given(carbon_strategy(), st.integers(0, 2 ** 32 - 1))
def test_mass_conservation_random_paths(p, seed):
    rng = np.random.default_rng(seed)
    e = rng.uniform(-0.002, 0.02, size=1000)
    m = np.array(p.m_eq)
    total0 = m.sum()
    injected = 0.0
    try:
        b = build_transfer_matrix(p, dt=1.0)
    except ClimateError:
        return  # unstable combination rejected by construction
    for ei in e:
        m = b @ m
        m[0] += ei
        injected += ei
    assert abs(m.sum() - (total0 + injected)) <= 1e-10 * max(1.0, m.sum())


def test_mass_conservation_cdice_1000yr():
    rng = np.random.default_rng(0)
    e = rng.uniform(0.0, 0.02, size=1000)
    series = run_climate(CDICE, n_steps=1000, dt=1.0, emissions=e)
    total = series.m.sum(axis=1)
    expect = total[0] + np.cumsum(e)
    rel = np.abs(total[1:] - expect) / expect
    assert rel.max() <= 1e-10


def test_equilibrium_fixed_point():
    for name, preset in PRESETS.items():
        m = step_carbon(preset.carbon.m_eq, preset.carbon, 0.0,
                        dt=preset.native_dt,
                        transfer_dt=preset.step_scale(preset.native_dt))
        assert np.allclose(m, preset.carbon.m_eq, rtol=0, atol=1e-12), name
        t = step_temperature((0.0, 0.0), 0.0, preset.temp, dt=1.0)
        assert t == (0.0, 0.0), name


def test_equilibrium_stationary_over_long_run():
    series = run_climate(CDICE, n_steps=500, dt=1.0,
                         emissions=np.zeros(500),
                         start=CDICE.equilibrium_state())
    assert np.abs(series.m - np.array(CDICE.carbon.m_eq)).max() <= 1e-12
    assert np.abs(series.t).max() <= 1e-12


def test_carbon_params_validation():
    with pytest.raises(ClimateError):
        CarbonParams(b12=-0.1, b23=0.01, m_eq=(1, 1, 1))
    with pytest.raises(ClimateError):
        CarbonParams(b12=0.05, b23=0.01, m_eq=(1.0, -1.0, 1.0))


# ---------------------------------------------------------------------------
# temperature


def test_temperature_fixed_point_is_f_over_lambda():
    # iterate under constant forcing; T_AT must approach F / lambda
    p = CDICE.temp
    f = p.f_2xco2  # one doubling
    t = (0.0, 0.0)
    for _ in range(20000):
        t = step_temperature(t, f, p, dt=1.0)
    assert t[0] == pytest.approx(p.t_2xco2, rel=1e-6)
    assert t[1] == pytest.approx(p.t_2xco2, rel=1e-6)


def test_forcing_log2_form():
    p = CDICE.temp
    assert forcing(2.0 * CDICE.m_base, CDICE.m_base, 0.0, p) == pytest.approx(
        p.f_2xco2, rel=1e-14)
    assert forcing(CDICE.m_base, CDICE.m_base, 0.7, p) == pytest.approx(0.7)
    with pytest.raises(ClimateError):
        forcing(-1.0, CDICE.m_base, 0.0, p)


def test_temp_params_validation():
    with pytest.raises(ClimateError):
        TempParams(c1=0.0, c3=0.7, c4=0.007, f_2xco2=3.45, t_2xco2=3.25)


def test_giss_unstable_at_five_year_step():
    giss = get_preset("CDICE-GISS-E2-R")
    with pytest.raises(ClimateError):
        run_climate(giss, n_steps=10, dt=5.0, emissions=np.zeros(10))
    # annual step is fine
    run_climate(giss, n_steps=10, dt=1.0, emissions=np.zeros(10))


# ---------------------------------------------------------------------------
# driver modes and step consistency


def test_run_climate_requires_exactly_one_driver():
    with pytest.raises(ClimateError):
        run_climate(CDICE, n_steps=5, emissions=np.zeros(5),
                    concentration=np.ones(5))
    with pytest.raises(ClimateError):
        run_climate(CDICE, n_steps=5)


def test_concentration_driven_pins_atmosphere():
    path = np.full(20, 2.0 * CDICE.m_base)
    series = run_climate(CDICE, n_steps=20, concentration=path)
    assert np.allclose(series.m[:20, 0], path)
    assert series.t[-1, 0] > 0.5  # warming under a sustained doubling


def test_substep_consistency():
    # halving the step changes a smooth 100-year integration only at O(dt)
    e = np.full(200, 0.01)
    a = run_climate(CDICE, n_steps=100, dt=1.0, emissions=e)
    b = run_climate(CDICE, n_steps=200, dt=0.5, emissions=e)
    assert b.t_at[-1] == pytest.approx(a.t_at[-1], rel=2e-2)
    assert b.m_at[-1] == pytest.approx(a.m_at[-1], rel=2e-2)


def test_climate_state_validation():
    with pytest.raises(ClimateError):
        ClimateState(m=(-0.1, 0.5, 1.0), t=(0.0, 0.0))
