"""Business-as-usual social cost of carbon across climate calibrations.

Solves the savings-only (no mitigation) trajectory optimum for four
climate presets under identical economic assumptions (annual steps,
Nordhaus damages, linear non-CO2 forcing) and reports the SCC at the
start of the trajectory, together with 2100 warming.  The climate
calibration alone moves the SCC by a factor of about 3.5 between the
low and high equilibrium-sensitivity end members.

Also shows the Howard-Sterner damage sensitivity for the central preset.
"""

from pathlib import Path

from cdice import charts, solve_bau

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

PRESETS = ["DICE-2016", "CDICE", "CDICE-HadGEM2-ES", "CDICE-GISS-E2-R"]


def main() -> None:
    print("BAU solves, annual resolution, Nordhaus damages, rho = 1.5%/yr")
    print(f"{'preset':18s} {'SCC start':>10s} {'SCC 2050':>10s} "
          f"{'T_AT 2100':>10s} {'ECS':>6s}")
    chart = charts.Chart(title="BAU social cost of carbon",
                         x_label="year", y_label="USD (2010) per tCO2")
    for name in PRESETS:
        tr = solve_bau(name)
        ecs = tr.problem.preset.temp.t_2xco2
        print(f"{name:18s} {tr.scc[0]:10.2f} {tr.at_year(2050, 'scc'):10.2f} "
              f"{tr.at_year(2100, 't_at'):10.2f} {ecs:6.2f}")
        n = tr.problem.n_periods
        mask = tr.years[:n] <= 2150
        chart.series.append(charts.Series(name, tr.years[:n][mask],
                                          tr.scc[mask]))
    charts.write_chart(chart, OUT / "bau_scc.svg")

    print("\nDamage sensitivity (CDICE):")
    for damage in ("nordhaus", "howard-sterner"):
        tr = solve_bau("CDICE", damage=damage)
        print(f"  {damage:15s} SCC start = {tr.scc[0]:7.2f} USD/tCO2, "
              f"2100 damages = {100 * tr.at_year(2100, 'damage_frac'):.1f}% "
              f"of output")

    print(f"\nfigure written to {OUT / 'bau_scc.svg'}")


if __name__ == "__main__":
    main()
