import json
import math

import numpy as np
import pytest

from lltunnel import __version__
from lltunnel.cli import main
from lltunnel.engines import Engine
from lltunnel.kinematics import PhysicalScenario
from lltunnel.sweep import (
    CSV_COLUMNS,
    PRESETS,
    SweepSpec,
    Variable,
    _flag_disagreement,
    emit,
    evaluate,
    preset,
    read_csv,
    run_sweep,
    to_csv,
    validate,
)

BASE = PhysicalScenario(80.0, 70.0, 10.0, 0.0)


def small_spec(**kw):
    args = dict(variable=Variable.ANGLE, start=-0.5, stop=0.5, count=5, fixed=BASE)
    args.update(kw)
    return SweepSpec(**args)


@pytest.mark.parametrize(
    "kw",
    [
        dict(count=1),
        dict(start=-1.6),
        dict(variable=Variable.WIDTH, start=0.0, stop=3.0),
        dict(variable=Variable.ENERGY, start=-1.0, stop=3.0),
        dict(engines=()),
        dict(model="2x2", rep_tag="b"),
    ],
)
def test_spec_validation(kw):
    with pytest.raises(ValueError):
        small_spec(**kw)


def test_row_count_and_order():
    result = run_sweep(small_spec())
    assert len(result.rows) == 5 * 3
    keys = [(r.value, r.engine.value) for r in result.rows]
    assert keys == sorted(keys)
    assert all(r.ok for r in result.rows)
    assert all(math.isfinite(r.unitarity_resid) for r in result.rows)


def test_energy_sweep_skips_edge():
    spec = small_spec(variable=Variable.ENERGY, start=60.0, stop=80.0, count=5)
    result = run_sweep(spec)
    skipped = [r for r in result.rows if r.status.startswith("SKIPPED")]
    assert len(skipped) == 3 and all(r.value == 70.0 for r in skipped)
    assert len(result.rows) == 15


def test_disagreement_flag():
    a = evaluate(BASE, Engine.CLOSED_FORM, "4x4", "a")
    b = evaluate(BASE, Engine.ORACLE, "4x4", "a")
    assert _flag_disagreement([a, b]) < 1e-9 and a.ok and b.ok
    b.R2 += 1e-6
    _flag_disagreement([a, b])
    assert a.status == b.status == "DISAGREE"


def test_fig2_3():
    result = run_sweep(preset("fig2_3"))
    assert len(result.rows) == 481 * 3
    assert all(r.ok for r in result.rows)
    assert result.column("R2").max() < 0.05
    assert np.all(result.column("T2") == 0)


def test_fig4():
    result = run_sweep(preset("fig4"))
    assert result.column("T1").max() < 1e-2
    assert result.column("R2").max() < 0.03


def test_fig5_left_resonances():
    result = run_sweep(preset("fig5_left"))
    T1 = result.column("T1")
    assert T1.min() < 0.5 and T1.max() > 0.999
    d = result.column("value")
    assert d[0] == pytest.approx(0.1) and d[-1] == pytest.approx(30.0)


def test_fig5_right_decays():
    T1 = run_sweep(preset("fig5_right")).column("T1")
    assert T1[-1] < 1e-6 < T1[0]


def test_preset_overrides():
    spec = preset("fig4", mass_m=0.5, fermi_velocity=2e6)
    assert spec.fixed.mass_m == 0.5 and spec.fixed.fermi_velocity_v == 2e6
    with pytest.raises(KeyError):
        preset("nope")
    assert set(PRESETS) >= {"fig2_3", "fig4", "fig5_left", "fig5_right"}


def test_csv_round_trip(tmp_path):
    result = run_sweep(small_spec(variable=Variable.ENERGY, start=60.0, stop=80.0, count=5))
    path = emit(result, "csv", tmp_path / "out.csv")
    assert path.read_text().splitlines()[0] == ",".join(CSV_COLUMNS)
    rows = read_csv(path)
    assert len(rows) == len(result.rows)
    for rec, row in zip(rows, result.rows):
        for name in ("T1", "T2", "R1", "R2", "unitarity_resid", "cond"):
            x = getattr(row, name)
            if math.isnan(x):
                assert math.isnan(rec[name])
            else:
                assert rec[name] == float(f"{x:.11e}")
        assert rec["status"] == row.status and rec["engine"] == row.engine.value


def test_json_metadata(tmp_path):
    path = emit(run_sweep(small_spec()), "json", tmp_path / "out.json")
    doc = json.loads(path.read_text())
    meta = doc["metadata"]
    assert meta["mass_m"] == 1.0 and meta["fermi_velocity"] == 1e6
    assert meta["software"]["version"] == __version__
    assert meta["representation"] == "a"
    assert meta["unit_system"]["energy"] == "meV"
    assert len(doc["rows"]) == 15
    assert any(r["T2"] is None for r in doc["rows"])


def test_deterministic_bytes():
    assert to_csv(run_sweep(preset("fig4"))) == to_csv(run_sweep(preset("fig4")))


def test_emit_error_has_path(tmp_path):
    with pytest.raises(OSError, match="missing"):
        emit(run_sweep(small_spec()), "csv", tmp_path / "missing" / "x.csv")


def test_validate_default_grid():
    report = validate()
    assert report.passed, [c for c in report.checks if not c.passed]
    d = report.as_dict()
    assert d["points"] == 200 and d["seed"] == 42
    names = [c["name"] for c in d["checks"]]
    assert any(n.startswith("unitarity") for n in names)
    assert any(n.startswith("spin-sum") for n in names)


# -- CLI --------------------------------------------------------------------


def test_cli_run(capsys):
    code = main(["run", "--E-meV", "80", "--V0-meV", "70", "--d-nm", "10", "--phi-rad", "0.3", "--json"])
    assert code == 0
    recs = json.loads(capsys.readouterr().out)
    assert [r["engine"] for r in recs] == ["closed", "oracle", "schrodinger"]
    assert recs[2]["T2"] is None


def test_cli_run_2x2_table(capsys):
    code = main(["run", "--E-meV", "80", "--V0-meV", "70", "--d-nm", "10", "--phi-rad", "0", "--model", "2x2",
                 "--engine", "oracle"])
    assert code == 0
    assert "oracle" in capsys.readouterr().out


def test_cli_sweep(tmp_path, capsys):
    out = tmp_path / "w.json"
    code = main(["sweep", "--var", "width", "--from", "1", "--to", "5", "--points", "4", "--E-meV", "80",
                 "--V0-meV", "70", "--out", str(out), "--format", "json", "--rep", "b"])
    assert code == 0
    doc = json.loads(out.read_text())
    assert len(doc["rows"]) == 12 and doc["metadata"]["representation"] == "b"


def test_cli_preset(tmp_path):
    out = tmp_path / "p.csv"
    assert main(["preset", "fig4", "--out", str(out)]) == 0
    assert len(read_csv(out)) == 481 * 3


def test_cli_validate(capsys):
    assert main(["validate", "--grid-points", "30", "--seed", "1"]) == 0
    assert "PASSED" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["run", "--E-meV", "80"],
        ["run", "--E-meV", "-80", "--V0-meV", "70", "--d-nm", "10", "--phi-rad", "0"],
        ["sweep", "--var", "angle", "--from", "-2", "--to", "2", "--points", "3", "--E-meV", "80", "--V0-meV",
         "70", "--d-nm", "10", "--out", "x.csv"],
        ["sweep", "--var", "angle", "--from", "0", "--to", "1", "--points", "3", "--E-meV", "80", "--out", "x.csv"],
        ["validate", "--grid-points", "0"],
    ],
)
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_cli_validation_failure_exit(monkeypatch, capsys):
    from lltunnel import cli
    from lltunnel.sweep import Check, ValidationReport

    monkeypatch.setattr(cli, "validate", lambda n, s: ValidationReport([Check("x", 1.0, 0.5)], n, s, 0.0))
    assert main(["validate"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_representation_contrast_invariant():
    def flip_fraction(name):
        rows = run_sweep(preset(name)).engine_rows(Engine.ORACLE)
        return max(r.R2 / (r.R1 + r.R2) for r in rows if r.R1 + r.R2 > 1e-6)

    assert flip_fraction("fig6") > 0.9
    assert flip_fraction("fig2_3") < 0.2


def test_rep_b_spin_kept_fraction_is_kinematic():
    """R1/(R1+R2) for rep b equals ky^2 / 2(ky^2 + kappa^2) independent of d."""
    from lltunnel.kinematics import derive_kinematics

    for d in (3.0, 10.0, 27.0):
        s = BASE.with_(width_d=d, angle_phi=1.2)
        c = evaluate(s, Engine.ORACLE, "4x4", "b")
        ky = derive_kinematics(s).ky
        assert np.isclose(c.R1 / (c.R1 + c.R2), ky**2 / (2 * (ky**2 + s.kappa**2)), rtol=1e-10)
