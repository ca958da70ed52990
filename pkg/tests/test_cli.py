"""Command-line front end: dispatch, config precedence, outputs, exit codes."""

import pytest

from cdice.cli import CliError, parse_config, run


def test_no_subcommand_is_usage_error(capsys):
    assert run([]) == 2


def test_bad_choice_exits_2():
    with pytest.raises(SystemExit) as exc:
        run(["bench", "nosuch"])
    assert exc.value.code == 2


def test_unknown_preset_is_computation_error(capsys):
    assert run(["calibrate", "eigen", "--preset", "DICE-2042"]) == 1
    assert "error:" in capsys.readouterr().err


def test_calibrate_eigen(capsys):
    assert run(["calibrate", "eigen", "--preset", "CDICE"]) == 0
    out = capsys.readouterr().out
    assert "0.8912" in out and "201.2" in out


def test_calibrate_timescales(capsys):
    assert run(["calibrate", "timescales", "--preset", "CDICE"]) == 0
    out = capsys.readouterr().out
    assert "4.03" in out and "247.80" in out


def test_bench_test2_outputs(tmp_path, capsys):
    assert run(["bench", "test2", "--preset", "CDICE",
                "--out-dir", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "TCR 1.946" in out
    csv = tmp_path / "ramp1pct_cdice.csv"
    svg = tmp_path / "ramp1pct_cdice.svg"
    assert csv.exists() and svg.exists()
    assert csv.read_text().startswith("# protocol: ramp1pct")
    assert svg.read_text().startswith("<svg ")


def test_bench_format_csv_only(tmp_path, capsys):
    assert run(["bench", "test1", "--preset", "CDICE",
                "--out-dir", str(tmp_path), "--format", "csv"]) == 0
    assert (tmp_path / "abrupt4x_cdice.csv").exists()
    assert not (tmp_path / "abrupt4x_cdice.svg").exists()


def test_spinup(tmp_path, capsys):
    assert run(["spinup", "--preset", "CDICE", "--out-dir", str(tmp_path),
                "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert "400 ppm reached in 1997" in out
    assert (tmp_path / "spinup_cdice.csv").exists()


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# comment line\n"
        "preset = CDICE-GISS-E2-R\n"
        "format = csv   # inline comment\n"
        f"out-dir = {tmp_path}\n"
    )
    assert run(["--config", str(cfg), "calibrate", "timescales"]) == 0
    assert "CDICE-GISS-E2-R" in capsys.readouterr().out
    # explicit flags override the file
    assert run(["--config", str(cfg), "calibrate", "timescales",
                "--preset", "CDICE"]) == 0
    assert "CDICE:" in capsys.readouterr().out


def test_config_rejects_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("warp_speed = 9\n")
    assert run(["--config", str(cfg), "calibrate", "eigen"]) == 1


def test_parse_config_syntax(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("a = 1\nb=two\n")
    assert parse_config(cfg) == {"a": "1", "b": "two"}
    cfg.write_text("no equals sign\n")
    with pytest.raises(CliError):
        parse_config(cfg)


def test_data_dir_flag(tmp_path, capsys):
    # pointing at an empty fixture dir must fail cleanly, not crash
    assert run(["bench", "test4", "--preset", "CDICE",
                "--data-dir", str(tmp_path),
                "--out-dir", str(tmp_path)]) == 1


def test_policy_bau_coarse_step(tmp_path, capsys):
    # 5-year economic step keeps this solve fast enough for the test suite
    assert run(["policy", "bau", "--preset", "CDICE", "--dt", "5",
                "--out-dir", str(tmp_path), "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert "SCC start" in out
    csv = tmp_path / "bau_cdice.csv"
    assert csv.exists()
    header = csv.read_text().splitlines()[0]
    assert header.startswith("year,m_at,")
