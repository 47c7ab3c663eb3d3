import math

import numpy as np
import pytest

from cavitymix.bogoliubov import first_order_map, static_coefficients
from cavitymix.profiles import SinusoidalProfile
from cavitymix.scenarios import (
    ResultTable,
    ScenarioError,
    load_scenario,
    run_scenario,
)
from conftest import SCENARIO_DIR


def write(tmp_path, text, name="scn.yaml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_sample_scenarios_load(tmp_path):
    kinds = {
        "evolve_resonant.yaml": "evolve",
        "catalog_low_band.yaml": "resonance_catalog",
        "negativity_ridge.yaml": "negativity_sweep",
        "desktop_linear.yaml": "experiment_plan",
        "desktop_circular.yaml": "experiment_plan",
    }
    for name, kind in kinds.items():
        scenario = load_scenario(SCENARIO_DIR / name)
        assert scenario.kind == kind
        assert len(scenario.source_digest) == 64


def test_evolve_scenario_matches_direct_map():
    scenario = load_scenario(SCENARIO_DIR / "evolve_resonant.yaml")
    table = run_scenario(scenario)
    assert table.columns == ("m", "n", "re_a_hat", "im_a_hat", "re_b_hat", "im_b_hat")
    assert len(table.rows) == scenario.cavity.n_max**2
    coeffs = static_coefficients(scenario.cavity)
    map_ = first_order_map(coeffs, scenario.profile)
    by_pair = {(r[0], r[1]): r for r in table.rows}
    a12 = map_.a_entry(1, 2)
    assert by_pair[(1, 2)][2] == pytest.approx(a12.real, abs=1e-15)
    assert by_pair[(1, 2)][3] == pytest.approx(a12.imag, rel=1e-14)


def test_nmax_override(tmp_path):
    scenario = load_scenario(SCENARIO_DIR / "evolve_resonant.yaml", n_max=3)
    assert scenario.cavity.n_max == 3
    table = run_scenario(scenario)
    assert len(table.rows) == 9


def test_sweep_scenario_row_layout():
    scenario = load_scenario(SCENARIO_DIR / "negativity_ridge.yaml")
    table = run_scenario(scenario)
    assert table.columns == ("omega_c", "delta_tau", "negativity")
    assert len(table.rows) == 27 * 10
    omegas = sorted({row[0] for row in table.rows})
    assert len(omegas) == 27
    assert all(row[2] >= 0.0 for row in table.rows)


def test_catalog_scenario_rows():
    scenario = load_scenario(SCENARIO_DIR / "catalog_low_band.yaml")
    table = run_scenario(scenario)
    assert table.columns[0] == "kind"
    kinds = {row[0] for row in table.rows}
    assert kinds == {"mode_mixing", "particle_creation"}


def test_plan_scenario_single_row():
    scenario = load_scenario(SCENARIO_DIR / "desktop_linear.yaml")
    table = run_scenario(scenario)
    assert len(table.rows) == 1
    flat = dict(zip(table.columns, table.rows[0]))
    assert flat["omega_c_si"] == pytest.approx(4.238216e6, rel=1e-5)


def test_render_format(tmp_path):
    table = ResultTable(
        columns=("a", "b"),
        rows=[(1, 0.1), (2, 1.0 / 3.0)],
        scenario_digest="f" * 64,
        generated="2026-08-19T00:00:00+00:00",
    )
    text = table.render()
    lines = text.splitlines()
    assert lines[0].startswith("# cavitymix ")
    assert lines[1] == "# scenario sha256: " + "f" * 64
    assert lines[2] == "# generated: 2026-08-19T00:00:00+00:00"
    assert lines[3] == "a,b"
    assert lines[4] == "1,0.10000000000000001"
    # 17 significant digits round-trip exactly
    assert float(lines[5].split(",")[1]) == 1.0 / 3.0
    out = tmp_path / "t.csv"
    table.write(out)
    assert out.read_text(encoding="utf-8") == text


def test_table_rejects_ragged_rows():
    with pytest.raises(ValueError):
        ResultTable(columns=("a", "b"), rows=[(1.0,)], scenario_digest="0" * 64)


def test_missing_file_and_bad_yaml(tmp_path):
    with pytest.raises(ScenarioError):
        load_scenario(tmp_path / "absent.yaml")
    path = write(tmp_path, "kind: [unclosed\n")
    with pytest.raises(ScenarioError, match="parse error"):
        load_scenario(path)
    path = write(tmp_path, "- just\n- a list\n")
    with pytest.raises(ScenarioError, match="mapping"):
        load_scenario(path)


def test_unknown_kind_and_block(tmp_path):
    path = write(tmp_path, "kind: telepathy\n")
    with pytest.raises(ScenarioError, match="kind"):
        load_scenario(path)
    path = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0}\n"
        "profile: {variant: sinusoidal, h0: 0.001, omega_c: 3.0, tauf: 5.0}\n"
        "extra: {}\n",
    )
    with pytest.raises(ScenarioError, match="unknown top-level block"):
        load_scenario(path)


def test_rigidity_diagnostic_cites_bound(tmp_path):
    path = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0}\n"
        "profile: {variant: sinusoidal, h0: 2.5, omega_c: 3.0, tauf: 5.0}\n",
    )
    with pytest.raises(ScenarioError, match=r"rigidity bound \|h\| < 2") as err:
        load_scenario(path)
    assert any("sup|h| = 2.5" in line for line in err.value.diagnostics)


def test_missing_state_block_has_field_path(tmp_path):
    path = write(
        tmp_path,
        "kind: negativity_sweep\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "sweep:\n"
        "  h0: 1.0e-3\n"
        "  omega_c: [3.0, 3.2]\n"
        "  delta_tau: [5.0, 10.0]\n",
    )
    with pytest.raises(ScenarioError, match="state") as err:
        load_scenario(path)
    assert err.value.diagnostics[0].startswith("state:")


def test_state_and_sweep_validation(tmp_path):
    base = (
        "kind: negativity_sweep\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "state: {pair: [1, 9], squeezing: -1.0}\n"
        "sweep:\n"
        "  h0: 3.0\n"
        "  omega_c: [-1.0]\n"
        "  delta_tau: [0.0]\n"
    )
    with pytest.raises(ScenarioError) as err:
        load_scenario(write(tmp_path, base))
    text = "\n".join(err.value.diagnostics)
    assert "state.pair" in text
    assert "state.squeezing" in text
    assert "sweep.h0" in text and "rigidity" in text
    assert "sweep.omega_c" in text
    assert "sweep.delta_tau" in text


def test_range_mapping_validation(tmp_path):
    path = write(
        tmp_path,
        "kind: negativity_sweep\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "state: {pair: [1, 2], squeezing: 0.5}\n"
        "sweep:\n"
        "  h0: 1.0e-3\n"
        "  omega_c: {start: 3.0, stop: 3.3}\n"
        "  delta_tau: {start: 5.0, stop: 50.0, count: 0}\n",
    )
    with pytest.raises(ScenarioError) as err:
        load_scenario(path)
    text = "\n".join(err.value.diagnostics)
    assert "sweep.omega_c" in text and "count" in text
    assert "sweep.delta_tau.count" in text


def test_range_mapping_expands_to_linspace(tmp_path):
    path = write(
        tmp_path,
        "kind: negativity_sweep\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "state: {pair: [1, 2], squeezing: 0.5}\n"
        "sweep:\n"
        "  h0: 1.0e-3\n"
        "  omega_c: {start: 3.0, stop: 3.2, count: 5}\n"
        "  delta_tau: [4.0, 8.0]\n",
    )
    scenario = load_scenario(path)
    assert np.allclose(scenario.omega_c_values, np.linspace(3.0, 3.2, 5))
    assert np.allclose(scenario.delta_tau_values, [4.0, 8.0])


def test_catalog_requires_max_omega(tmp_path):
    path = write(tmp_path, "kind: resonance_catalog\ncavity: {length: 1.0}\nsweep: {}\n")
    with pytest.raises(ScenarioError, match="max_omega"):
        load_scenario(path)


def test_experiment_scenario_validation(tmp_path):
    path = write(
        tmp_path,
        "kind: experiment_plan\n"
        "experiment:\n"
        "  lx: 0.01\n"
        "  ly: 0.01\n"
        "  lz: 0.01\n"
        "  motion: {type: warp, amplitude: 1.0e-6}\n",
    )
    with pytest.raises(ScenarioError) as err:
        load_scenario(path)
    text = "\n".join(err.value.diagnostics)
    assert "experiment.motion.type" in text
    assert "experiment.wavelength" in text


def test_output_block(tmp_path):
    path = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0}\n"
        "profile: {variant: sinusoidal, h0: 0.001, omega_c: 3.0, tauf: 5.0}\n"
        "output: {path: custom.csv, format: csv}\n",
    )
    assert load_scenario(path).output_path == "custom.csv"
    bare = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0}\n"
        "profile: {variant: sinusoidal, h0: 0.001, omega_c: 3.0, tauf: 5.0}\n",
        name="bare.yaml",
    )
    assert load_scenario(bare).output_path == "bare.csv"
    bad = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0}\n"
        "profile: {variant: sinusoidal, h0: 0.001, omega_c: 3.0, tauf: 5.0}\n"
        "output: {format: json}\n",
        name="bad.yaml",
    )
    with pytest.raises(ScenarioError, match="output.format"):
        load_scenario(bad)


def test_profile_variants_round_trip(tmp_path):
    path = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "profile:\n"
        "  variant: piecewise_constant\n"
        "  segments: [[1.0, 0.01], [2.0, -0.005]]\n",
    )
    scenario = load_scenario(path)
    assert scenario.profile.evaluate(1.5) == -0.005
    path = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "profile:\n"
        "  variant: sampled\n"
        "  tau: [0.0, 1.0, 2.0]\n"
        "  h: [0.0, 0.01, 0.0]\n",
        name="sampled.yaml",
    )
    assert load_scenario(path).profile.evaluate(0.5) == pytest.approx(0.005)
    path = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "profile:\n"
        "  variant: windowed_sinusoid\n"
        "  h0: 0.01\n"
        "  omega_c: 3.0\n"
        "  window_time: 1.0\n"
        "  tauf: 6.0\n",
        name="windowed.yaml",
    )
    assert load_scenario(path).profile.evaluate(0.0) == pytest.approx(0.0, abs=1e-15)
    path = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "profile:\n"
        "  variant: ramp\n"
        "  h0: 0.01\n"
        "  ramp_time: 1.0\n"
        "  tauf: 6.0\n",
        name="ramp.yaml",
    )
    assert load_scenario(path).profile.evaluate(3.0) == pytest.approx(0.01)
    path = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "profile: {variant: sawtooth, h0: 0.01}\n",
        name="unknown.yaml",
    )
    with pytest.raises(ScenarioError, match="profile.variant"):
        load_scenario(path)


def test_profile_construction_error_is_diagnosed(tmp_path):
    path = write(
        tmp_path,
        "kind: evolve\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "profile:\n"
        "  variant: ramp\n"
        "  h0: 0.01\n"
        "  ramp_time: 4.0\n"
        "  tauf: 6.0\n",
    )
    with pytest.raises(ScenarioError, match="profile:"):
        load_scenario(path)


def test_run_scenario_digest_flows_into_table():
    scenario = load_scenario(SCENARIO_DIR / "desktop_linear.yaml")
    table = run_scenario(scenario)
    assert table.scenario_digest == scenario.source_digest


def test_sweep_pair_must_fit_truncation(tmp_path):
    path = write(
        tmp_path,
        "kind: negativity_sweep\n"
        "cavity: {length: 1.0, n_max: 4}\n"
        "state: {pair: [1, 6], squeezing: 0.5}\n"
        "sweep:\n"
        "  h0: 1.0e-3\n"
        "  omega_c: [3.0]\n"
        "  delta_tau: [5.0]\n",
    )
    with pytest.raises(ScenarioError, match="truncation"):
        load_scenario(path)
