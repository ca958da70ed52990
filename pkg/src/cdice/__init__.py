"""Climate-economy integrated assessment with a CMIP-recalibrated climate core.

The package couples a three-reservoir carbon cycle and a two-layer energy
balance model to a neoclassical growth economy with abatement.  It ships:

- climate presets (original 2016 and 2007 vintages, a bug-fixed 2016
  variant, and the CMIP5-recalibrated set with high/low-ECS end members);
- four climate benchmark protocols (abrupt 4xCO2, 1%/yr concentration
  ramp, 100 GtC pulse, historical+RCP scenarios) plus an 1850 spin-up;
- eigenvalue/timescale diagnostics and a carbon-cycle refit routine;
- a trajectory optimizer (adjoint gradients, L-BFGS-B) for BAU and
  optimal mitigation paths with SCC and carbon-tax series;
- deterministic SVG charts and CSV writers for every protocol.

See the ``cdice`` command-line entry point for shell access.
"""

from .calibrate import (
    CalibrationError,
    EigenReport,
    FitReport,
    FitTargets,
    TimescaleReport,
    carbon_eigen,
    default_fit_targets,
    ebm_timescales,
    fit_carbon,
    preset_carbon_eigen,
    preset_ebm_timescales,
    pulse_fraction_curve,
)
from .charts import Band, Chart, ChartError, Series, render_chart, write_chart
from .climate import (
    PRESETS,
    CarbonParams,
    ClimateError,
    ClimatePreset,
    ClimateState,
    TempParams,
    build_transfer_matrix,
    get_preset,
    run_climate,
    step_carbon,
    step_temperature,
)
from .drivers import (
    RCP_IDS,
    BenchmarkSeries,
    DriverError,
    default_data_dir,
    load_scenario,
    load_series,
)
from .economy import EconError, EconParams, econ_preset, make_exogenous_path
from .policy import (
    PolicyError,
    PolicyProblem,
    Trajectory,
    carbon_tax,
    make_problem,
    scc,
    scc_finite_difference,
    solve,
    solve_bau,
    solve_optimal,
    sweep,
    write_sweep_summary,
    write_trajectory_csv,
)
from .scenarios import (
    ProtocolResult,
    PulseResult,
    RampResult,
    ScenarioError,
    SpinUpResult,
    spin_up_1850,
    test_1pct_ramp,
    test_abrupt_4xco2,
    test_pulse_100gtc,
    test_rcp,
    write_protocol_csv,
)
from .units import KGTC_PER_PPM, concentration_to_mass, mass_to_concentration

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # climate
    "PRESETS", "CarbonParams", "ClimateError", "ClimatePreset",
    "ClimateState", "TempParams", "build_transfer_matrix", "get_preset",
    "run_climate", "step_carbon", "step_temperature",
    # units
    "KGTC_PER_PPM", "concentration_to_mass", "mass_to_concentration",
    # drivers
    "RCP_IDS", "BenchmarkSeries", "DriverError", "default_data_dir",
    "load_scenario", "load_series",
    # scenarios
    "ProtocolResult", "PulseResult", "RampResult", "ScenarioError",
    "SpinUpResult", "spin_up_1850", "test_1pct_ramp", "test_abrupt_4xco2",
    "test_pulse_100gtc", "test_rcp", "write_protocol_csv",
    # calibration
    "CalibrationError", "EigenReport", "FitReport", "FitTargets",
    "TimescaleReport", "carbon_eigen", "default_fit_targets",
    "ebm_timescales", "fit_carbon", "preset_carbon_eigen",
    "preset_ebm_timescales", "pulse_fraction_curve",
    # economy
    "EconError", "EconParams", "econ_preset", "make_exogenous_path",
    # policy
    "PolicyError", "PolicyProblem", "Trajectory", "carbon_tax",
    "make_problem", "scc", "scc_finite_difference", "solve", "solve_bau",
    "solve_optimal", "sweep", "write_sweep_summary", "write_trajectory_csv",
    # charts
    "Band", "Chart", "ChartError", "Series", "render_chart", "write_chart",
]
