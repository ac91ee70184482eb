import csv
import io
import json

import pytest

from hankel_loginv.cli import FIELDS, main, parse_alpha, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(out):
    return list(csv.DictReader(io.StringIO("\n".join(l for l in out.splitlines() if not l.startswith("#")))))


def test_bounds_row(capsys):
    code, out, _ = run(capsys, "bounds", "--class", "starlike", "--alpha", "1.0")
    assert code == 0
    assert out.splitlines()[0].startswith("# hankel-loginv")
    (r,) = rows(out)
    assert list(r) == list(FIELDS)
    assert (r["alpha"], r["class"], r["branch"]) == ("1.0", "starlike", "branch3")
    assert r["bound"].startswith("1.0833333333")
    assert abs(float(r["bound"]) - 13 / 12) < 1e-12


def test_bounds_range(capsys):
    code, out, _ = run(capsys, "bounds", "--class", "convex", "--alpha", "0:1:0.5")
    assert code == 0
    assert [r["alpha"] for r in rows(out)] == ["0.5", "1.0"]
    assert abs(float(rows(out)[1]["bound"]) - 1 / 33) < 1e-12


def test_csv_roundtrip_many(capsys):
    from hankel_loginv.bounds import bound_starlike

    code, out, _ = run(capsys, "bounds", "--class", "starlike", "--alpha", "0.05:1:0.05")
    assert code == 0
    rs = rows(out)
    assert len(rs) == 20
    for r in rs:
        b, br = bound_starlike(float(r["alpha"]))
        assert abs(float(r["bound"]) - b) <= 1e-12 * max(1, b) and r["branch"] == br


def test_series_demo(capsys):
    code, out, _ = run(capsys, "series-demo")
    assert code == 0
    assert "H21(Koebe) = 1.0833333333" in out
    assert "Gamma_n = -1, 1.5, -3.33333333333" in out


def test_verify_ok_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "--class", "convex", "--alpha", "0.1:1:0.3")
    assert code == 0 and all(abs(float(r["gap"])) <= 1e-9 for r in rows(out))
    code, out, err = run(capsys, "verify", "--class", "starlike", "--alpha", "0.3", "--tol", "1e-300")
    # a gap of exactly zero still passes the tightest tolerance, so force failure
    if code == 0:
        assert float(rows(out)[0]["gap"]) == 0.0
    else:
        assert code == 1 and "FAIL" in err


def test_maximize(capsys):
    code, out, _ = run(capsys, "maximize", "--class", "starlike", "--alpha", "1.0", "--grid", "21")
    assert code == 0
    (r,) = rows(out)
    assert -1e-6 <= float(r["margin"]) <= 1e-3
    code, out, err = run(capsys, "maximize", "--class", "starlike", "--alpha", "1.0", "--grid", "21", "--tol", "-1")
    assert code == 1 and "FAIL" in err


def test_ybc(capsys):
    code, out, _ = run(capsys, "ybc-test", "--samples", "50")
    assert code == 0
    (r,) = rows(out)
    assert float(r["max_discrepancy"]) <= 2e-5
    code, _, err = run(capsys, "ybc-test", "--samples", "50", "--tol", "-1")
    assert code == 1 and "FAIL" in err


def test_json_and_out(capsys, tmp_path):
    path = tmp_path / "b.json"
    code, out, _ = run(capsys, "bounds", "--class", "convex", "--alpha", "1", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    data = json.loads(path.read_text())
    assert data["rows"][0]["branch"] == "branch2" and data["rows"][0]["ok"]
    code, out, _ = run(capsys, "bounds", "--class", "convex", "--alpha", "1", "--format", "text")
    assert "branch=branch2" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["bounds"],
        ["bounds", "--class", "convex", "--alpha", "2"],
        ["bounds", "--class", "convex", "--alpha", "x"],
        ["bounds", "--class", "convex", "--alpha", "1.1:2:0.1"],
        ["bounds", "--class", "spiral"],
        ["nope"],
        ["series-demo", "--seed", "-3"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as e:
        code = main(argv)
        raise SystemExit(code)
    assert e.value.code == 2
    assert capsys.readouterr().err


def test_parse_alpha():
    assert parse_alpha("0.1:0.3:0.1") == [0.1, 0.2, 0.3]
    with pytest.raises(UsageError):
        parse_alpha("0.1:0.3:0")
