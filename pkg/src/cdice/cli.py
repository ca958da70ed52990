"""Command-line front end.

Subcommands
-----------
bench test1|test2|test3|test4|all
    Climate benchmark protocols: abrupt 4xCO2, 1%/yr concentration ramp,
    100 GtC pulse, and historical+RCP runs.  ``all`` also prints a
    conformance report.
policy bau|optimal|sweep
    Trajectory optimization: business-as-usual, optimal mitigation, or a
    preset sweep summary.
calibrate eigen|timescales|fit
    Carbon-cycle eigenvalue/half-life diagnostics, energy-balance
    response timescales, or a carbon-cycle refit.
spinup
    1850 equilibrium spin-up to a concentration target.

Configuration is a flat ``key = value`` file (``#`` comments) whose keys
mirror the long flags; explicit flags override file values.  The fixture
directory defaults to ``$CDICE_DATA_DIR``, then the packaged data.

Exit codes: 0 success, 1 computation or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import calibrate, charts, policy, scenarios
from .climate import PRESETS, ClimateError, get_preset
from .drivers import RCP_IDS, DriverError, default_data_dir
from .economy import EconError
from .units import mass_to_concentration

__all__ = ["main", "run", "parse_config"]


class CliError(RuntimeError):
    """Invalid option combination detected past argument parsing."""


def parse_config(path) -> dict:
    """Read a flat key=value config file; '#' starts a comment."""
    opts = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise CliError(f"{path}:{lineno}: expected 'key = value'")
            key, val = (part.strip() for part in line.split("=", 1))
            opts[key.replace("-", "_")] = val
    return opts


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cdice",
        description="Climate-economy benchmark protocols, calibration "
                    "diagnostics, and policy optimization.")
    ap.add_argument("--config", help="flat key=value config file")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", default=None,
                        help=f"climate preset (one of {', '.join(PRESETS)})")
    common.add_argument("--dt", type=float, default=None,
                        help="time step in years (policy solves)")
    common.add_argument("--horizon", type=float, default=None,
                        help="free-control horizon in years (policy solves)")
    common.add_argument("--rho", type=float, default=None,
                        help="pure rate of time preference per year")
    common.add_argument("--damage", default=None,
                        choices=["nordhaus", "howard-sterner"],
                        help="damage calibration")
    common.add_argument("--fex", default=None,
                        choices=["linear", "proportional", "none"],
                        help="non-CO2 forcing mode")
    common.add_argument("--data-dir", default=None,
                        help="fixture directory (default: $CDICE_DATA_DIR "
                             "or packaged data)")
    common.add_argument("--out-dir", default=None, help="output directory")
    common.add_argument("--format", dest="fmt", default=None,
                        choices=["csv", "svg", "both"], help="output formats")
    sub = ap.add_subparsers(dest="command")

    bench = sub.add_parser("bench", parents=[common],
                           help="run climate benchmark protocols")
    bench.add_argument("test", choices=["test1", "test2", "test3", "test4", "all"])

    pol = sub.add_parser("policy", parents=[common],
                         help="solve trajectory-optimization scenarios")
    pol.add_argument("scenario", choices=["bau", "optimal", "sweep"])

    cal = sub.add_parser("calibrate", parents=[common],
                         help="calibration diagnostics and refits")
    cal.add_argument("what", choices=["eigen", "timescales", "fit"])

    spin = sub.add_parser("spinup", parents=[common],
                          help="1850 spin-up to a concentration target")
    spin.add_argument("--target-ppm", type=float, default=None)
    return ap


_CONFIG_CASTS = {
    "dt": float, "horizon": float, "rho": float, "target_ppm": float,
}


def _apply_config(args) -> None:
    """Fill argument defaults from the config file (flags win)."""
    if not getattr(args, "config", None):
        return
    for key, val in parse_config(args.config).items():
        if key == "format":  # parser stores --format under 'fmt'
            key = "fmt"
        if not hasattr(args, key):
            raise CliError(f"unknown config key {key!r}")
        if getattr(args, key) is None:
            cast = _CONFIG_CASTS.get(key, str)
            setattr(args, key, cast(val))


def _defaults(args) -> None:
    if getattr(args, "preset", None) is None:
        args.preset = "CDICE"
    if getattr(args, "fmt", None) is None:
        args.fmt = "both"
    if getattr(args, "out_dir", None) is None:
        args.out_dir = "."
    if getattr(args, "data_dir", None) is None:
        args.data_dir = str(default_data_dir())


def _emit(args, name: str, table, chart=None) -> None:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if args.fmt in ("csv", "both"):
        scenarios.write_protocol_csv(table, out / f"{name}.csv")
        print(f"wrote {out / (name + '.csv')}")
    if chart is not None and args.fmt in ("svg", "both"):
        charts.write_chart(chart, out / f"{name}.svg")
        print(f"wrote {out / (name + '.svg')}")


def _line_chart(title, ylabel, years, named_series) -> charts.Chart:
    ch = charts.Chart(title=title, x_label="year", y_label=ylabel)
    for label, values in named_series:
        ch.series.append(charts.Series(label, years, values))
    return ch


# ---------------------------------------------------------------------------
# bench


def _bench_one(args, test: str, checks: list) -> None:
    p = get_preset(args.preset)
    tag = p.name.lower().replace("-", "_")
    if test == "test1":
        res = scenarios.test_abrupt_4xco2(p)
        t1000 = float(res["t_at"][-1])
        ecs2 = 2.0 * p.temp.t_2xco2
        checks.append(("abrupt4x T(1000) vs 2*ECS",
                       abs(t1000 / ecs2 - 1.0) <= 0.025,
                       f"{t1000:.3f} K vs {ecs2:.2f} K"))
        chart = _line_chart(f"Abrupt 4xCO2 ({p.name})", "T [K]", res.years,
                            [("T_AT", res["t_at"]), ("T_OC", res["t_oc"])])
        _emit(args, f"abrupt4x_{tag}", res, chart)
    elif test == "test2":
        ramp = scenarios.test_1pct_ramp(p)
        checks.append(("ramp TCR in [1.3, 2.3] K",
                       1.3 <= ramp.tcr <= 2.3, f"TCR {ramp.tcr:.3f} K"))
        chart = _line_chart(f"1%/yr CO2 ramp ({p.name})", "T [K]",
                            ramp.table.years, [("T_AT", ramp.table["t_at"])])
        _emit(args, f"ramp1pct_{tag}", ramp.table, chart)
        print(f"TCR {ramp.tcr:.3f} K at year {ramp.year_doubling:.1f}; "
              f"T at quadrupling {ramp.t_at_quadrupling:.3f} K")
    elif test == "test3":
        pulse = scenarios.test_pulse_100gtc(p)
        from .drivers import load_series
        env = load_series(Path(args.data_dir) / "joos" / "pulse_fraction_envelope.csv")
        lo, hi = env.envelope_at(100.0)
        f100 = float(pulse.fraction_at(100.0))
        checks.append(("pulse fraction(100) inside published envelope",
                       lo <= f100 <= hi, f"{f100:.4f} in [{lo:.4f}, {hi:.4f}]"))
        chart = _line_chart(f"100 GtC pulse ({p.name})", "fraction",
                            pulse.years[pulse.years <= 100],
                            [("airborne fraction",
                              pulse.fraction[pulse.years <= 100])])
        chart.bands.append(charts.Band("envelope", env.years, env.lower,
                                       env.upper))
        _emit(args, f"pulse_{tag}", pulse.table, chart)
    elif test == "test4":
        fex = args.fex or "proportional"
        for rcp in RCP_IDS:
            res = scenarios.test_rcp(p, rcp, mode="emission",
                                     f_ex_mode=fex, data_dir=args.data_dir)
            ratio = res["conc_ppm"][-1] / res["conc_prescribed_ppm"][-1]
            tol = 0.05 if p.name.startswith("CDICE") else 0.20
            checks.append((f"{rcp} emission-driven 2100 concentration",
                           abs(ratio - 1.0) <= tol,
                           f"{res['conc_ppm'][-1]:.1f} ppm "
                           f"(ratio {ratio:.3f}, tol {tol:.0%})"))
            chart = charts.rcp_band_chart(
                res.years, res["conc_ppm"], res["conc_prescribed_ppm"],
                f"{rcp} emission-driven ({p.name})")
            _emit(args, f"rcp_{rcp.lower()}_{tag}", res, chart)
    else:
        raise CliError(f"unknown bench target {test!r}")


def _cmd_bench(args) -> int:
    tests = ["test1", "test2", "test3", "test4"] if args.test == "all" else [args.test]
    checks: list = []
    for t in tests:
        _bench_one(args, t, checks)
    failed = 0
    if args.test == "all":
        print("\nconformance report")
        for label, ok, detail in checks:
            status = "PASS" if ok else "FAIL"
            print(f"  [{status}] {label}: {detail}")
            failed += 0 if ok else 1
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# policy


def _cmd_policy(args) -> int:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    kwargs = {}
    if args.rho is not None:
        kwargs["rho"] = args.rho
    if args.damage is not None:
        kwargs["damage"] = args.damage
    if args.fex is not None:
        kwargs["fex_mode"] = args.fex
    if args.dt is not None:
        kwargs["t_step"] = args.dt
    if args.horizon is not None:
        kwargs["horizon_years"] = args.horizon
    if args.scenario == "sweep":
        results = policy.sweep([args.preset],
                               rhos=(0.001, 0.015, 0.05),
                               damages=(args.damage or "nordhaus",),
                               fex_modes=(args.fex or "linear",))
        path = out / "sweep_summary.csv"
        policy.write_sweep_summary(results, path)
        print(f"wrote {path}")
        return 0
    solver = policy.solve_bau if args.scenario == "bau" else policy.solve_optimal
    traj = solver(args.preset, **kwargs)
    tag = args.preset.lower().replace("-", "_")
    path = out / f"{args.scenario}_{tag}.csv"
    if args.fmt in ("csv", "both"):
        policy.write_trajectory_csv(traj, path)
        print(f"wrote {path}")
    if args.fmt in ("svg", "both"):
        n = traj.problem.n_periods
        ch = _line_chart(f"{args.scenario} trajectory ({args.preset})",
                         "T [K] / USD per tC", traj.years[:n],
                         [("T_AT", traj.t[:n, 0]), ("SCC", traj.scc)])
        svg = out / f"{args.scenario}_{tag}.svg"
        charts.write_chart(ch, svg)
        print(f"wrote {svg}")
    print(f"objective {traj.objective:.6g}  kkt {traj.kkt_residual:.2e}  "
          f"SCC start {traj.scc[0]:.2f} USD/tC  "
          f"SCC 2020 {traj.at_year(2020, 'scc'):.2f} USD/tC")
    return 0 if traj.converged else 1


# ---------------------------------------------------------------------------
# calibrate and spinup


def _cmd_calibrate(args) -> int:
    p = get_preset(args.preset)
    if args.what == "eigen":
        rep = calibrate.preset_carbon_eigen(p)
        evs = ", ".join(f"{v:.4f}" for v in rep.eigenvalues)
        hls = ", ".join("inf" if not np.isfinite(h) else f"{h:.1f}"
                        for h in rep.half_lives)
        print(f"{p.name}: eigenvalues [{evs}]  half-lives [{hls}] years")
        return 0
    if args.what == "timescales":
        rep = calibrate.preset_ebm_timescales(p)
        print(f"{p.name}: fast {rep.tau_fast:.2f} yr  slow {rep.tau_slow:.2f} yr")
        return 0
    targets = calibrate.default_fit_targets(data_dir=args.data_dir)
    report = calibrate.fit_carbon(p.carbon, targets=targets,
                                  data_dir=args.data_dir)
    print(report.summary())
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"fit_{p.name.lower().replace('-', '_')}.csv"
    calibrate.write_fit_report(report, path)
    print(f"wrote {path}")
    return 0


def _cmd_spinup(args) -> int:
    fex = args.fex or "proportional"
    target = args.target_ppm if args.target_ppm is not None else 400.0
    res = scenarios.spin_up_1850(args.preset, f_ex_mode=fex,
                                 target_ppm=target, data_dir=args.data_dir)
    m = res.state.m
    t = res.state.t
    print(f"{args.preset}: {target:g} ppm reached in {res.year}")
    print(f"  M = ({m[0]:.5f}, {m[1]:.5f}, {m[2]:.5f}) [1000 GtC]  "
          f"({mass_to_concentration(m[0]):.1f} ppm)")
    print(f"  T = ({t[0]:.4f}, {t[1]:.4f}) [K]")
    tag = args.preset.lower().replace("-", "_")
    _emit(args, f"spinup_{tag}", res.table,
          _line_chart(f"1850 spin-up ({args.preset})", "ppm / K",
                      res.table.years, [("conc_ppm", res.table["conc_ppm"]),
                                        ("T_AT", res.table["t_at"])]))
    return 0


# ---------------------------------------------------------------------------


def run(argv=None) -> int:
    """Parse arguments, dispatch, and return an exit code."""
    ap = _build_parser()
    args = ap.parse_args(argv)
    if args.command is None:
        ap.print_usage(sys.stderr)
        return 2
    try:
        _apply_config(args)
        _defaults(args)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "policy":
            return _cmd_policy(args)
        if args.command == "calibrate":
            return _cmd_calibrate(args)
        return _cmd_spinup(args)
    except (CliError, ClimateError, EconError, DriverError,
            scenarios.ScenarioError, calibrate.CalibrationError,
            policy.PolicyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
