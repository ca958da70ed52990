"""Fixture loading: CSV schema, envelopes, scenario assembly, data dir."""

import numpy as np
import pytest

from cdice.drivers import (
    RCP_IDS,
    DriverError,
    co2_forcing_series,
    default_data_dir,
    geoffroy_params,
    load_ebm_table,
    load_scenario,
    load_series,
    save_series,
)

DATA = default_data_dir()


def test_default_data_dir_env_override(monkeypatch, tmp_path):
    monkeypatch.setenv("CDICE_DATA_DIR", str(tmp_path))
    assert default_data_dir() == tmp_path
    monkeypatch.delenv("CDICE_DATA_DIR")
    assert default_data_dir().name == "data"


def test_load_series_schema():
    s = load_series(DATA / "rcp" / "emissions_rcp85.csv")
    assert s.unit == "GtC/yr"
    assert np.all(np.diff(s.years) > 0)
    assert s.at(2100) == s.values[s.years == 2100][0]
    # interpolation between tabulated years
    mid = s.at(2005)
    lo, hi = s.at(2000), s.at(2010)
    assert min(lo, hi) <= mid <= max(lo, hi)


def test_envelope_series():
    s = load_series(DATA / "joos" / "pulse_fraction_envelope.csv")
    lo, hi = s.envelope_at(100.0)
    assert 0.25 < lo < hi < 0.60
    plain = load_series(DATA / "rcp" / "concentration_rcp85.csv")
    with pytest.raises(DriverError):
        plain.envelope_at(2100)


def test_save_load_round_trip(tmp_path):
    s = load_series(DATA / "cmip5" / "temperature_envelope_rcp26.csv")
    out = tmp_path / "roundtrip.csv"
    save_series(s, out)
    s2 = load_series(out)
    assert s2.unit == s.unit
    assert np.allclose(s2.years, s.years)
    assert np.allclose(s2.values, s.values)
    assert np.allclose(s2.lower, s.lower)
    assert np.allclose(s2.upper, s.upper)


def test_load_series_errors(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("year,value\n2000,1.0\n")
    with pytest.raises(DriverError, match="unit"):
        load_series(p)
    p.write_text("# unit: K\nyear,value\n2000,1.0,2.0\n")
    with pytest.raises(DriverError):
        load_series(p)
    p.write_text("# unit: K\nyear,value,lower,upper\n2000,1.0,2.0,0.5\n")
    with pytest.raises(DriverError, match="cross"):
        load_series(p)


def test_unit_check(tmp_path):
    p = tmp_path / "series.csv"
    p.write_text("# unit: K\nyear,value\n2000,1.0\n")
    load_series(p, unit="K")
    with pytest.raises(DriverError, match="unit"):
        load_series(p, unit="ppm")


def test_load_scenario_joins_history():
    for rcp in RCP_IDS:
        sc = load_scenario(rcp)
        assert sc.years[0] == 1850
        assert sc.years[-1] >= 2100
        assert np.all(np.diff(sc.years) == 1)  # annual axis
    with pytest.raises(DriverError):
        load_scenario("RCP99")


def test_scenario_concentrations_ordered_in_2100():
    c = {rcp: load_scenario(rcp).concentration.at(2100) for rcp in RCP_IDS}
    assert c["RCP26"] < c["RCP45"] < c["RCP60"] < c["RCP85"]
    assert c["RCP85"] == pytest.approx(935.0, rel=0.01)


def test_co2_forcing_zero_at_base():
    assert co2_forcing_series([285.0])[0] == 0.0
    assert co2_forcing_series([570.0])[0] == pytest.approx(3.68)
    with pytest.raises(DriverError):
        co2_forcing_series([-1.0])


def test_geoffroy_table():
    table = load_ebm_table()
    assert {"MMM", "HadGEM2-ES", "GISS-E2-R"} <= set(table)
    mmm = geoffroy_params("MMM")
    assert mmm.t_2xco2 == pytest.approx(3.25)
    with pytest.raises(DriverError):
        geoffroy_params("NOPE")
