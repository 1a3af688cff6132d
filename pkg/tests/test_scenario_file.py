from __future__ import annotations

import pytest

from lightcone_detectors.errors import ParseError, ScenarioError
from lightcone_detectors.quadrature import QuadratureConfig
from lightcone_detectors.scenario import DetectorKind, Scenario
from lightcone_detectors.scenario_file import DEFAULT_CONFIG, load_scenario, parse_scenario

FULL = """\
# benchmark with a far detector
[physics]
m = 0.5
omega_eg = 2   # inline comment
[source]
y0 = 0.25
y = 0, 0, 1
[detector]
x = 3 0 1
t_i = 0.5
t_f = 3
kind = GD
[numerics]
rel_tol = 1e-9
max_panels = 5000
"""


def test_minimal_document_uses_defaults():
    doc = parse_scenario("[physics]\nm = 1\n")
    assert doc.scenario == Scenario()
    assert doc.config == DEFAULT_CONFIG
    assert doc.kind is None


def test_empty_document_is_the_benchmark():
    assert parse_scenario("").scenario == Scenario()


def test_full_document():
    doc = parse_scenario(FULL)
    assert doc.scenario == Scenario(m=0.5, omega_eg=2.0, y0=0.25, y=(0.0, 0.0, 1.0),
                                    x=(3.0, 0.0, 1.0), t_i=0.5, t_f=3.0)
    assert doc.scenario.r == 3.0
    assert doc.kind is DetectorKind.GD
    assert doc.config == QuadratureConfig(rel_tol=1e-9, max_panels=5000, uv_damping=0.05)


def test_window_error_names_window_and_line():
    with pytest.raises(ScenarioError) as info:
        parse_scenario("[detector]\nt_i = 3\nt_f = 1\n")
    assert info.value.field == "window"
    assert "line 3" in str(info.value)


def test_unknown_key_suggests_spelling():
    with pytest.raises(ParseError) as info:
        parse_scenario("[physics]\nomega_ge = 1\n")
    assert "omega_eg" in str(info.value)
    assert (info.value.line, info.value.column) == (2, 1)


def test_unknown_section_suggests_spelling():
    with pytest.raises(ParseError, match="numerics"):
        parse_scenario("[numeric]\n")


@pytest.mark.parametrize("text, line", [
    ("[physics]\nm = abc\n", 2),
    ("[physics]\nm = 1\nm = 2\n", 3),
    ("m = 1\n", 1),
    ("[physics\n", 1),
    ("[physics]\nm\n", 2),
    ("[detector]\nx = 1 2\n", 2),
    ("[physics]\nm =\n", 2),
    ("[physics]\nm = nan\n", 2),
    ("[numerics]\nmax_panels = 10.5\n", 2),
    ("[detector]\nkind = telescope\n", 2),
])
def test_malformed_documents_report_location(text, line):
    with pytest.raises(ParseError) as info:
        parse_scenario(text)
    assert info.value.line == line
    assert info.value.column >= 1
    assert f"line {line}" in str(info.value)


def test_config_violation_names_key():
    with pytest.raises(ScenarioError) as info:
        parse_scenario("[numerics]\nrel_tol = -1\n")
    assert info.value.field == "rel_tol"


def test_coincident_detector_and_source():
    with pytest.raises(ScenarioError) as info:
        parse_scenario("[detector]\nx = 0 0 0\n")
    assert info.value.field == "x"


def test_load_from_disk(tmp_path):
    path = tmp_path / "scenario.ini"
    path.write_text(FULL, encoding="utf-8")
    assert load_scenario(path) == parse_scenario(FULL)
