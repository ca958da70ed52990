"""Ingestion of external reference data: RCP emissions and concentrations,
historical emissions, CMIP5 temperature envelopes, per-model energy-balance
parameters, and the pulse-response benchmark envelope.

Fixtures are small CSVs shipped with the package (decadal resolution,
linearly interpolated to annual).  Schema: header ``year,value[,lower,upper]``
preceded by a ``# unit: <tag>`` comment line.
"""

from __future__ import annotations

import importlib.resources
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .climate import TempParams
from .units import concentration_to_mass, mass_to_concentration  # noqa: F401  (re-export)

__all__ = [
    "BenchmarkSeries",
    "ScenarioInputs",
    "DriverError",
    "default_data_dir",
    "load_series",
    "save_series",
    "co2_forcing_series",
    "geoffroy_params",
    "load_ebm_table",
    "load_scenario",
    "RCP_IDS",
]

RCP_IDS = ("RCP26", "RCP45", "RCP60", "RCP85")

# Forcing constants used for the benchmark forcing decomposition.
BASE_PPM = 285.0
F2X_BENCHMARK = 3.68  # W/m^2


class DriverError(ValueError):
    """Malformed fixture data or unknown reference name."""


def default_data_dir() -> Path:
    """Fixture directory: $CDICE_DATA_DIR if set, else the packaged data."""
    env = os.environ.get("CDICE_DATA_DIR")
    if env:
        return Path(env)
    return Path(importlib.resources.files("cdice") / "data")


@dataclass
class BenchmarkSeries:
    """A named reference curve on an integer year axis with a units tag."""

    name: str
    years: np.ndarray
    values: np.ndarray
    unit: str
    lower: np.ndarray | None = None
    upper: np.ndarray | None = None

    def __post_init__(self):
        self.years = np.asarray(self.years)
        self.values = np.asarray(self.values, dtype=float)
        if len(self.years) == 0:
            raise DriverError(f"series {self.name!r} is empty")
        if (np.diff(self.years) <= 0).any():
            raise DriverError(f"series {self.name!r} has non-monotone years")
        if not self.unit:
            raise DriverError(f"series {self.name!r} is missing a units tag")
        if (self.lower is None) != (self.upper is None):
            raise DriverError(f"series {self.name!r} has only one envelope bound")
        if self.lower is not None:
            self.lower = np.asarray(self.lower, dtype=float)
            self.upper = np.asarray(self.upper, dtype=float)
            if (self.lower > self.upper).any():
                raise DriverError(f"series {self.name!r} envelope bounds cross")

    def at(self, year):
        """Linearly interpolated value at the given year(s)."""
        return np.interp(year, self.years, self.values)

    def envelope_at(self, year):
        """Interpolated (lower, upper) envelope bounds at the given year(s)."""
        if self.lower is None:
            raise DriverError(f"series {self.name!r} has no envelope")
        return (np.interp(year, self.years, self.lower),
                np.interp(year, self.years, self.upper))

    def annual(self, year_start=None, year_end=None) -> "BenchmarkSeries":
        """Resampled copy on an annual axis via linear interpolation."""
        y0 = int(self.years[0] if year_start is None else year_start)
        y1 = int(self.years[-1] if year_end is None else year_end)
        if y0 < self.years[0] or y1 > self.years[-1]:
            raise DriverError(f"series {self.name!r} does not cover {y0}..{y1}")
        years = np.arange(y0, y1 + 1)
        lower = np.interp(years, self.years, self.lower) if self.lower is not None else None
        upper = np.interp(years, self.years, self.upper) if self.upper is not None else None
        return BenchmarkSeries(self.name, years, self.at(years), self.unit, lower, upper)


def load_series(path, unit: str | None = None, name: str | None = None) -> BenchmarkSeries:
    """Parse a fixture CSV into a BenchmarkSeries.

    ``unit`` (when given) must match the file's ``# unit:`` declaration.
    """
    path = Path(path)
    file_unit = None
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if body.lower().startswith("unit:"):
                    file_unit = body[5:].strip()
                continue
            if line.lower().startswith("year,"):
                continue
            parts = line.split(",")
            if len(parts) not in (2, 4):
                raise DriverError(f"{path}:{lineno}: expected 2 or 4 columns, got {len(parts)}")
            try:
                rows.append([float(x) for x in parts])
            except ValueError as exc:
                raise DriverError(f"{path}:{lineno}: malformed row: {line!r}") from exc
    if not rows:
        raise DriverError(f"{path}: no data rows")
    if file_unit is None:
        raise DriverError(f"{path}: missing '# unit:' declaration")
    if unit is not None and file_unit != unit:
        raise DriverError(f"{path}: unit {file_unit!r} does not match expected {unit!r}")
    arr = np.array(rows)
    years = arr[:, 0]
    if not np.allclose(years, np.round(years)):
        raise DriverError(f"{path}: non-integer years")
    lower = arr[:, 2] if arr.shape[1] == 4 else None
    upper = arr[:, 3] if arr.shape[1] == 4 else None
    return BenchmarkSeries(name or path.stem, years.astype(int), arr[:, 1],
                           file_unit, lower, upper)


def save_series(series: BenchmarkSeries, path) -> None:
    """Write a series in the fixture CSV schema (round-trip stable)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# unit: {series.unit}\n")
        if series.lower is None:
            fh.write("year,value\n")
            for y, v in zip(series.years, series.values):
                fh.write(f"{int(y)},{v:.10g}\n")
        else:
            fh.write("year,value,lower,upper\n")
            for y, v, lo, hi in zip(series.years, series.values, series.lower, series.upper):
                fh.write(f"{int(y)},{v:.10g},{lo:.10g},{hi:.10g}\n")


def co2_forcing_series(conc_ppm, base_ppm: float = BASE_PPM, f2x: float = F2X_BENCHMARK):
    """CO2 forcing (W/m^2) from a concentration series in ppm."""
    conc = np.asarray(conc_ppm, dtype=float)
    if (conc <= 0).any() or base_ppm <= 0:
        raise DriverError("concentrations must be positive")
    return f2x * np.log2(conc / base_ppm)


def load_ebm_table(data_dir=None) -> dict[str, TempParams]:
    """Two-layer EBM parameters fitted per CMIP5 model to abrupt-4xCO2 runs.

    Parsed from ``geoffroy/ebm_params.csv`` (columns: model,c1,c3,c4,
    f_2xco2,t_2xco2).  Ships with the multi-model mean plus the two
    ECS end members used for bracketing.
    """
    data_dir = Path(data_dir) if data_dir is not None else default_data_dir()
    path = data_dir / "geoffroy" / "ebm_params.csv"
    table = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#") or line.lower().startswith("model,"):
                continue
            parts = line.split(",")
            if len(parts) != 6:
                raise DriverError(f"{path}:{lineno}: expected 6 columns")
            try:
                vals = [float(x) for x in parts[1:]]
            except ValueError as exc:
                raise DriverError(f"{path}:{lineno}: malformed row") from exc
            table[parts[0]] = TempParams(*vals)
    if not table:
        raise DriverError(f"{path}: no data rows")
    return table


def geoffroy_params(model: str, data_dir=None) -> TempParams:
    """Per-model two-layer EBM parameters (MMM, HadGEM2-ES, GISS-E2-R)."""
    table = load_ebm_table(data_dir)
    try:
        return table[model]
    except KeyError:
        raise DriverError(f"unknown EBM model {model!r}; known: {sorted(table)}") from None


@dataclass
class ScenarioInputs:
    """Historical + RCP inputs, aligned on an annual axis from 1850."""

    rcp: str
    emissions: BenchmarkSeries  # GtC/yr, annual
    concentration: BenchmarkSeries  # ppm, annual

    @property
    def years(self) -> np.ndarray:
        return self.emissions.years

    def co2_forcing(self, f2x: float = F2X_BENCHMARK, base_ppm: float = BASE_PPM):
        return co2_forcing_series(self.concentration.values, base_ppm, f2x)


def _join(hist: BenchmarkSeries, future: BenchmarkSeries, name: str) -> BenchmarkSeries:
    if hist.unit != future.unit:
        raise DriverError(f"unit mismatch joining {hist.name} and {future.name}")
    ha = hist.annual()
    fa = future.annual()
    if fa.years[0] > ha.years[-1] + 1:
        raise DriverError(f"gap between historical and {future.name}")
    keep = fa.years > ha.years[-1]
    years = np.concatenate([ha.years, fa.years[keep]])
    values = np.concatenate([ha.values, fa.values[keep]])
    return BenchmarkSeries(name, years, values, hist.unit)


def load_scenario(rcp: str, data_dir=None) -> ScenarioInputs:
    """Load emissions and concentrations for one RCP, 1850-2100 annual.

    ``rcp="historical"`` returns the 1850-2005 historical period alone.
    """
    data_dir = Path(data_dir) if data_dir is not None else default_data_dir()
    rcp_dir = data_dir / "rcp"
    hist_e = load_series(rcp_dir / "emissions_historical.csv", unit="GtC/yr")
    hist_c = load_series(rcp_dir / "concentration_historical.csv", unit="ppm")
    if rcp == "historical":
        return ScenarioInputs("historical", hist_e.annual(), hist_c.annual())
    if rcp not in RCP_IDS:
        raise DriverError(f"unknown scenario {rcp!r}")
    tag = rcp.lower()
    fut_e = load_series(rcp_dir / f"emissions_{tag}.csv", unit="GtC/yr")
    fut_c = load_series(rcp_dir / f"concentration_{tag}.csv", unit="ppm")
    return ScenarioInputs(
        rcp,
        _join(hist_e, fut_e, f"emissions_{tag}"),
        _join(hist_c, fut_c, f"concentration_{tag}"),
    )
