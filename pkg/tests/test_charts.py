"""Deterministic SVG rendering: golden files, structure, validation."""

from pathlib import Path

import numpy as np
import pytest

from cdice.charts import (
    Band,
    Chart,
    ChartError,
    Series,
    rcp_band_chart,
    render_chart,
    write_chart,
)

GOLDEN = Path(__file__).resolve().parent / "golden"


def make_chart() -> Chart:
    ch = Chart(title="constant series", x_label="year", y_label="value")
    ch.series.append(Series("flat", [2000, 2010, 2020], [1.0, 1.0, 1.0]))
    ch.series.append(Series("ramp", [2000, 2010, 2020], [0.0, 0.5, 2.0]))
    return ch


def test_golden_file_byte_identical():
    svg = render_chart(make_chart())
    assert svg == (GOLDEN / "constant.svg").read_text()


def test_render_is_deterministic():
    a = render_chart(make_chart())
    b = render_chart(make_chart())
    assert a == b


def test_write_chart_round_trip(tmp_path):
    out = tmp_path / "chart.svg"
    write_chart(make_chart(), out)
    assert out.read_text() == render_chart(make_chart())


def test_svg_structure():
    svg = render_chart(make_chart())
    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg"')
    assert svg.rstrip().endswith("</svg>")
    assert svg.count('class="line"') == 2
    assert "flat" in svg and "ramp" in svg


def test_band_chart_polygons():
    years = np.arange(2000, 2101, 10, dtype=float)
    prescribed = np.linspace(400.0, 900.0, len(years))
    computed = prescribed * 1.02
    ch = rcp_band_chart(years, computed, prescribed, "conformance")
    svg = render_chart(ch)
    assert svg.count('class="band"') == 2  # +-20% and +-5% envelopes
    assert svg.count('class="line"') == 2  # prescribed and computed
    assert "stroke-dasharray" in svg       # prescribed path is dashed


def test_xml_escaping():
    ch = Chart(title="a < b & c", x_label="x", y_label="y")
    ch.series.append(Series("s<1>", [0, 1], [0, 1]))
    svg = render_chart(ch)
    assert "a &lt; b &amp; c" in svg
    assert "s&lt;1&gt;" in svg
    assert "<1>" not in svg


def test_validation_errors():
    with pytest.raises(ChartError):
        render_chart(Chart(title="empty", x_label="x", y_label="y"))
    with pytest.raises(ChartError):
        Series("bad", [0, 1], [0.0])
    with pytest.raises(ChartError):
        Series("nan", [0, 1], [0.0, float("nan")])
    with pytest.raises(ChartError):
        Band("crossed", [0, 1], [1.0, 1.0], [0.0, 0.0])


def test_degenerate_ranges_render():
    ch = Chart(title="point", x_label="x", y_label="y")
    ch.series.append(Series("single", [5.0], [3.0]))
    svg = render_chart(ch)  # constant ranges are padded, not divided by zero
    assert "polyline" in svg
