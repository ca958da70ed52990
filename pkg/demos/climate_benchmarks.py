"""Run the four climate benchmark protocols for two calibrations.

Compares the recalibrated climate core (CDICE) against the original
DICE-2016 parameterization on:

1. abrupt 4xCO2 (equilibrium warming should approach 2 x ECS),
2. a 1%/yr concentration ramp (transient climate response),
3. a 100 GtC atmospheric pulse (airborne-fraction decay),
4. emission-driven historical+RCP85 concentrations to 2100.

Writes CSV tables and SVG figures into ``demos/output/``.
"""

from pathlib import Path

import numpy as np

from cdice import (
    charts,
    default_data_dir,
    get_preset,
    load_series,
    test_1pct_ramp,
    test_abrupt_4xco2,
    test_pulse_100gtc,
    test_rcp,
    write_protocol_csv,
)

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)


def main() -> None:
    presets = [get_preset("CDICE"), get_preset("DICE-2016")]

    print("=== Protocol 1: abrupt 4xCO2 (1000 yr) ===")
    for p in presets:
        res = test_abrupt_4xco2(p)
        t1000 = res["t_at"][-1]
        print(f"  {p.name:12s} T(1000) = {t1000:6.3f} K "
              f"(2 x ECS = {2 * p.temp.t_2xco2:.2f} K)")
        write_protocol_csv(res, OUT / f"abrupt4x_{p.name}.csv")

    print("=== Protocol 2: 1%/yr concentration ramp ===")
    for p in presets:
        ramp = test_1pct_ramp(p)
        print(f"  {p.name:12s} TCR = {ramp.tcr:5.3f} K at doubling "
              f"(year {ramp.year_doubling:.1f}); "
              f"T at quadrupling = {ramp.t_at_quadrupling:.3f} K")
        write_protocol_csv(ramp.table, OUT / f"ramp1pct_{p.name}.csv")

    print("=== Protocol 3: 100 GtC pulse ===")
    env = load_series(default_data_dir() / "joos" / "pulse_fraction_envelope.csv")
    chart = charts.Chart(title="Airborne fraction after a 100 GtC pulse",
                         x_label="years after pulse", y_label="fraction")
    chart.bands.append(charts.Band("multi-model envelope", env.years,
                                   env.lower, env.upper))
    for p in presets:
        pulse = test_pulse_100gtc(p)
        lo, hi = env.envelope_at(100.0)
        f100 = pulse.fraction_at(100.0)
        inside = "inside" if lo <= f100 <= hi else "OUTSIDE"
        print(f"  {p.name:12s} fraction(100 yr) = {f100:.4f} "
              f"({inside} envelope [{lo:.3f}, {hi:.3f}]); "
              f"peak warming {pulse.table['t_anomaly'].max():.3f} K")
        mask = pulse.years <= 200
        chart.series.append(charts.Series(p.name, pulse.years[mask],
                                          pulse.fraction[mask]))
        write_protocol_csv(pulse.table, OUT / f"pulse_{p.name}.csv")
    charts.write_chart(chart, OUT / "pulse_fraction.svg")

    print("=== Protocol 4: emission-driven historical + RCP85 ===")
    for p in presets:
        res = test_rcp(p, "RCP85", mode="emission")
        c2100 = res["conc_ppm"][-1]
        target = res["conc_prescribed_ppm"][-1]
        print(f"  {p.name:12s} CO2(2100) = {c2100:7.1f} ppm "
              f"(prescribed {target:.1f}, ratio {c2100 / target:.3f})")
        chart = charts.rcp_band_chart(res.years, res["conc_ppm"],
                                      res["conc_prescribed_ppm"],
                                      f"RCP85 emission-driven ({p.name})")
        charts.write_chart(chart, OUT / f"rcp85_{p.name}.svg")
        write_protocol_csv(res, OUT / f"rcp85_{p.name}.csv")

    print(f"\ntables and figures written to {OUT}")


if __name__ == "__main__":
    main()
