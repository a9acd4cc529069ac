"""Command-line interface: output formats, exit codes, golden rows."""

import json

import pytest

from svoa.cli import main
from svoa.qseries import QSeries


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_text(capsys):
    code, out, _ = run(capsys, "--order", "3", "series", "j")
    assert code == 0
    assert out.strip() == "q^-1 + 744 + 196884 q + 21493760 q^2"


def test_series_json_round_trip(capsys):
    code, out, _ = run(capsys, "--format", "json", "--order", "4", "series", "eta")
    assert code == 0
    obj = json.loads(out)
    x = QSeries.from_json(obj)
    assert x.coeff(2) == 1 and x.coeff(50) == -1


def test_series_vacuum_requires_rank(capsys):
    code, _, err = run(capsys, "series", "vacuum")
    assert code == 1 and "rank" in err


def test_extremal_svoa_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "extremal-svoa",
                       "--rank", "47/2")
    assert code == 0
    obj = json.loads(out)
    assert obj["a"] == ["1", "-47", "0"]
    terms = dict((n, v) for n, v in obj["series"]["terms"])
    assert terms[-47] == "1"
    assert terms[-47 + 72] == "4371"


def test_extremal_voa_text(capsys):
    code, out, _ = run(capsys, "extremal-voa", "--rank", "24")
    assert code == 0
    assert "196884" in out and "a = [1, -744]" in out


def test_shadow_text(capsys):
    code, out, _ = run(capsys, "shadow", "--rank", "16")
    assert code == 0
    assert "B* = -15/16" in out
    assert "integral=False" in out and "nonneg=False" in out


def test_classify_table_golden(capsys):
    code, out, _ = run(capsys, "classify", "--from", "8", "--to", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("rank   | status")
    assert lines[2].startswith("8      | exists_known  | E8")
    assert lines[3].startswith("17/2   | ruled_out     | G")
    assert lines[4].startswith("9      | ruled_out     | G")
    assert lines[6].startswith("10     | conditional_L | L")


def test_classify_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "classify",
                       "--from", "47/2", "--to", "24")
    rows = json.loads(out)
    assert rows[0]["rank"] == "47/2" and rows[0]["name"] == "VB"
    assert rows[1]["rank"] == "24" and rows[1]["status"] == "exists_known"


def test_classify_deterministic(capsys):
    _, out1, _ = run(capsys, "classify", "--from", "16", "--to", "18")
    _, out2, _ = run(capsys, "classify", "--from", "16", "--to", "18")
    assert out1 == out2


def test_monster_poly_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "monster-poly")
    rows = json.loads(out)
    d = {(i, j, k): v for i, j, k, v in rows}
    assert d[(44, 4, 0)] == "804" and d[(0, 0, 48)] == "2048"


def test_monster_poly_constraints_file(capsys, tmp_path):
    # a consistent constraint file reproduces the default solution
    rows = [[48, 0, 0, "1"], [46, 2, 0, "0"], [39, 1, 8, "0"],
            [32, 0, 16, "0"], [44, 4, 0, "804"], [16, 0, 32, "9024"],
            [0, 0, 48, "2048"]]
    path = tmp_path / "constraints.json"
    path.write_text(json.dumps(rows))
    code, out, _ = run(capsys, "--format", "json", "monster-poly",
                       "--constraints", str(path))
    assert code == 0
    d = {(i, j, k): v for i, j, k, v in json.loads(out)}
    assert d[(24, 24, 0)] == "7891186524"


def test_series_generic_module(capsys):
    code, out, _ = run(capsys, "--order", "3", "series", "generic_module",
                       "--rank", "24", "--weight", "2")
    assert code == 0
    assert out.strip().startswith("q + q^2")


def test_baby_sector(capsys):
    code, out, _ = run(capsys, "--format", "json", "--order", "5",
                       "baby", "--sector", "1")
    obj = json.loads(out)
    terms = dict(obj["1"]["terms"])
    assert terms[-47 + 72] == "4371"


def test_molien(capsys):
    code, out, _ = run(capsys, "molien", "--rank", "1/2", "--deg", "6")
    assert code == 0
    assert "group order 1152" in out
    assert "1 t^0 + 1 t^3 + 1 t^6" in out


def test_verlinde_text(capsys):
    code, out, _ = run(capsys, "verlinde", "--rank", "1/2")
    assert "M2 x M2 = M0 + M1" in out


def test_theta_and_orbifold(capsys):
    code, out, _ = run(capsys, "--order", "3", "theta", "--lattice", "E8")
    assert out.strip().startswith("1 + 240 q + 2160 q^2")
    code, out, _ = run(capsys, "--order", "3", "--format", "json",
                       "orbifold", "--lattice", "Leech")
    obj = json.loads(out)
    terms = dict(obj["terms"])
    assert terms[-48] == "1" and terms[48] == "196884"


def test_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--from", "8"])
    assert exc.value.code == 64


def test_computation_exit_code(capsys):
    code, _, err = run(capsys, "extremal-voa", "--rank", "7")
    assert code == 1
    assert "multiple of 8" in err


def test_order_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SVOA_ORDER", "2")
    code, out, _ = run(capsys, "series", "j")
    assert out.strip() == "q^-1 + 744 + 196884 q"
