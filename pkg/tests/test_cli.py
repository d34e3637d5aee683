import csv
import io
import json
import math

import pytest

from annular_cp import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def parse_csv(text):
    first, rest = text.split("\n", 1)
    assert first.startswith("#")
    meta = json.loads(first[1:])
    rows = list(csv.reader(io.StringIO(rest)))
    return meta, rows[0], rows[1:]


def test_energy_table_layout_and_determinism():
    code, text = run("energy", "--h", "0:5:501", "--theta", "0,30,60,75")
    assert code == 0
    meta, header, rows = parse_csv(text)
    assert header == ["h_over_a", "theta_deg", "value_reduced", "value_natural"]
    assert len(rows) == 4 * 501
    assert meta["provenance"] == ["closed form"] and len(meta["config_hash"]) == 16
    assert "\r\n" in text
    assert run("energy", "--h", "0:5:501", "--theta", "0,30,60,75")[1] == text
    # first row: h = 0, theta = 0, radial ring -> 0
    assert float(rows[0][2]) == 0.0


def test_both_sources_agree():
    code, text = run("force", "--geometry", "plate", "--pol", "axial", "--h", "0:3:7",
                     "--theta", "0:90:4", "--source", "both")
    assert code == 0
    _, header, rows = parse_csv(text)
    assert header[-2:] == ["oracle_reduced", "rel_diff"]
    assert max(float(r[-1]) for r in rows) < 1e-9


def test_angle_suffixes_and_units():
    _, deg = run("energy", "--h", "0.5", "--theta", "30deg")
    _, rad = run("energy", "--h", "0.5", "--theta", f"{math.radians(30)!r}rad")
    assert parse_csv(deg)[2][0][2] == parse_csv(rad)[2][0][2]
    _, ev = run("energy", "--h", "0.5", "--theta", "30", "--ev")
    a = float(parse_csv(deg)[2][0][3])
    assert float(parse_csv(ev)[2][0][3]) == pytest.approx(a * cli.HBAR_C_EV_NM)
    # absolute heights with a = 2 give the same reduced values at h/a = 0.5
    _, absolute = run("energy", "--h", "1.0", "--theta", "30", "--a", "2", "--absolute")
    row = parse_csv(absolute)[2][0]
    assert float(row[0]) == 0.5 and row[2] == parse_csv(deg)[2][0][2]


def test_json_table_is_single_object():
    code, text = run("torque", "--h", "0.2,0.4", "--theta", "45", "--format", "json")
    assert code == 0
    obj = json.loads(text)
    assert set(obj) == {"metadata", "columns", "rows"} and len(obj["rows"]) == 2


def test_oracle_only_configurations():
    code, text = run("energy", "--geometry", "disc", "--b", "1.5", "--axis", "3", "--beta", "30",
                     "--h", "0.5", "--theta", "40")
    assert code == 0 and parse_csv(text)[0]["provenance"] == ["quadrature oracle"]
    assert run("energy", "--geometry", "disc", "--axis", "3", "--source", "closed", "--h", "0.5")[0] == 2
    assert run("energy", "--kernel", "london", "--h", "0.5")[0] == 0


def test_scan_and_regions_csv():
    code, text = run("scan", "--h", "0:2:5", "--theta", "0,90", "--pol", "axial")
    assert code == 0
    assert parse_csv(text)[1] == ["h_over_a", "theta_deg", "energy_reduced", "force_reduced", "torque_reduced"]
    code, text = run("regions", "--format", "csv", "--h", "0.01:1:20", "--theta", "0:90:4")
    assert code == 0
    rows = parse_csv(text)[2]
    assert {r[3] for r in rows} == {"true", "false"}


def test_roots_report():
    code, text = run("roots", "--geometry", "ring", "--pol", "radial")
    rep = json.loads(text)
    assert code == 0
    assert [round(x, 2) for x in rep["roots_h_over_a"]] == [0.36, 3.45]
    assert rep["max_abs_difference"] < 1e-10


def test_regions_report():
    code, text = run("regions", "--pol", "axial", "--theta", "90")
    rep = json.loads(text)
    assert code == 0
    assert rep["repulsion"][0]["intervals_h_over_a"][0][1] == pytest.approx(math.sqrt(2 / 9))


def test_threshold_report():
    code, text = run("threshold", "--theta", "90deg")
    assert code == 0
    assert json.loads(text)["thresholds"][0]["b_star_over_a"] == pytest.approx(1.257, abs=5e-3)


def test_machine_outputs(tmp_path):
    code, text = run("machine")
    rep = json.loads(text)["report"]
    assert code == 0 and rep["W_ab"] > 0 and abs(rep["W_cd"]) < 1e-12
    target = tmp_path / "machine.csv"
    assert run("machine", "--format", "csv", "--output", str(target))[0] == 0
    meta, header, rows = parse_csv(target.read_text())
    assert header == ["h_over_a", "theta_deg", "energy_over_E0"]
    assert {r[1] for r in rows} == {"0", "90"}


def test_electro():
    code, text = run("electro", "--h", "0", "--theta", "0")
    assert code == 0
    assert float(parse_csv(text)[2][0][2]) == pytest.approx(2 * math.pi)
    code, text = run("electro", "--direction", "tangential", "--h", "0.3", "--theta", "50")
    assert code == 0 and abs(float(parse_csv(text)[2][0][2])) < 1e-12
    assert run("electro", "--direction", "radial", "--source", "closed")[0] == 2


def test_verify_passes():
    code, text = run("verify", "--tol", "1e-9")
    rep = json.loads(text)
    assert code == 0 and rep["summary"] == "PASS"
    assert len(rep["families"]) == 22


@pytest.mark.parametrize("argv", [
    ("energy", "--h", "0:1:1"),
    ("energy", "--theta", "north"),
    ("energy", "--geometry", "disc", "--b", "0.5"),
    ("energy", "--geometry", "plate", "--pol", "tangential"),
    ("energy", "--rel-tol", "0.5"),
    ("energy", "--axis", "4"),
    ("energy", "--geometry", "cone"),
    ("roots", "--axis", "2"),
])
def test_config_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        code = cli.main(list(argv), out=io.StringIO())
        raise SystemExit(code)
    assert info.value.code == 2


def test_numeric_failure_exit_3():
    assert run("threshold", "--theta", "0")[0] == 3


def test_parsers():
    assert cli.parse_grid("0:1:3") == [0.0, 0.5, 1.0]
    assert cli.parse_grid("1,2.5") == [1.0, 2.5]
    assert cli.parse_angles("0:90:3deg") == pytest.approx([0, math.pi / 4, math.pi / 2])
    assert cli.parse_angles("0.1rad,90") == pytest.approx([0.1, math.pi / 2])
