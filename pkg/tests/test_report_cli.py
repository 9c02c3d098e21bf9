import csv
import io
import json
import subprocess
import sys

import pytest

from lmeansq.cli import main, parse_k_range
from lmeansq.records import Tolerance, make_record
from lmeansq.report import build_report, report_csv


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tolerance_model():
    t = Tolerance()
    assert t.atol_for(10) == pytest.approx(1e-7)
    assert t.accepts(1e-7 * 0.99, 0.0, 10)
    assert not t.accepts(1e-7, 0.0, 10)
    assert Tolerance(atol=1e-3).atol_for(10**6) == 1e-3


def test_make_record_exact():
    r = make_record("s", "i", 3, 5, 5)
    assert r.passed and r.abs_err == 0 and r.closed_exact == "5/1"
    assert not make_record("s", "i", 3, 5, 6).passed


def test_parse_range():
    assert parse_k_range("3..60") == (3, 60)
    assert parse_k_range("7") == (7, 7)


def test_verify_ok_json(capsys):
    code, out, _ = run(["verify", "theorem3", "--k", "3..8", "--workers", "1"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1
    assert rep["summary"]["failed"] == 0
    keys = [(r["suite"], r["k"], r["identity"]) for r in rep["records"]]
    assert keys == sorted(keys)
    first = rep["records"][0]
    assert first["identity"] == "meansq3:finite" and first["closed_exact"] == "160/3"


def test_verify_bad_range(capsys):
    with pytest.raises(SystemExit) as e:
        main(["verify", "theorem3", "--k", "2..5"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "bogus", "--k", "3..5"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "trig", "--k", "9..5"])
    assert e.value.code == 2


@pytest.mark.parametrize("suite", ["theorem3", "theorem4", "trig", "alpha", "ramanujan", "finiteform"])
def test_injected_failure_exit_1(suite, capsys):
    # a tolerance no floating computation can meet
    code, out, _ = run(["verify", suite, "--k", "5..7", "--atol", "0", "--rtol", "0", "--format", "csv"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert any(r["passed"] == "false" for r in rows)
    assert code == 1


def test_determinism_modulo_timestamp(capsys):
    argv = ["verify", "alpha", "--k", "3..9", "--workers", "1"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    ja, jb = json.loads(a), json.loads(b)
    ja["metadata"].pop("timestamp")
    jb["metadata"].pop("timestamp")
    assert ja == jb
    _, c, _ = run(argv[:-2] + ["--format", "csv"], capsys)
    _, d, _ = run(argv[:-2] + ["--format", "csv"], capsys)
    assert c == d


def test_parallel_equals_serial(capsys):
    _, a, _ = run(["verify", "trig", "--k", "3..30", "--workers", "1", "--format", "csv"], capsys)
    _, b, _ = run(["verify", "trig", "--k", "3..30", "--workers", "2", "--format", "csv"], capsys)
    assert a == b


def test_workers_env(monkeypatch):
    from lmeansq import cli

    monkeypatch.setenv("NT_WORKERS", "3")
    assert cli.default_workers() == 3


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(["verify", "phi4", "--k", "3..4", "--out", str(tmp_path / "no" / "x.json")], capsys)
    assert code == 1 and "cannot write" in err
    code, _, _ = run(["table", "jordan", "--k", "1..3", "--out", str(tmp_path / "no" / "t.csv")], capsys)
    assert code == 1


def test_out_file(capsys, tmp_path):
    p = tmp_path / "r.csv"
    code, out, _ = run(["verify", "phi4", "--k", "3..5", "--format", "csv", "--out", str(p)], capsys)
    assert code == 0 and out == ""
    text = p.read_bytes().decode()
    assert text.startswith("suite,identity,k,closed_exact")
    assert "\r\n" in text


def test_table_jordan(capsys):
    code, out, _ = run(["table", "jordan", "--k", "1..5", "--s", "2"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["J"]) for r in rows] == [1, 3, 8, 12, 24]


def test_table_meansq3(capsys):
    code, out, _ = run(["table", "meansq3", "--k", "3..10"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 8 and rows[0]["exact"] == "160/3"
    assert float(rows[0]["value"]) == pytest.approx(0.7814981, abs=1e-7)


def test_table_charcount_json(capsys):
    code, out, _ = run(["table", "charcount", "--k", "3..20", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0
    for row in doc["rows"]:
        assert row["odd"] == row["even"] == row["phi"] // 2


def test_table_rejects_small_k(capsys):
    with pytest.raises(SystemExit) as e:
        main(["table", "meansq4", "--k", "2..4"])
    assert e.value.code == 2


def test_chartable(capsys):
    code, out, _ = run(["chartable", "3"], capsys)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2
    assert rows[1]["chi(2)"] == "1/2" and rows[1]["parity"] == "odd"
    assert rows[0]["chi(3)"] == ""
    _, out, _ = run(["chartable", "1", "--format", "json"], capsys)
    doc = json.loads(out)
    assert len(doc["characters"]) == 1 and doc["characters"][0]["values"] == ["0/1"]
    _, out, _ = run(["chartable", "8", "--format", "json"], capsys)
    doc = json.loads(out)
    assert len(doc["characters"]) == 4
    assert all(2 % c["order"] == 0 for c in doc["characters"])
    assert doc["characters"][0]["values"][1] is None


def test_report_null_for_infinite_rel_err():
    rec = make_record("s", "zero", 3, 0.0, 1e-20)
    rep = build_report([rec], {})
    assert rep["records"][0]["rel_err"] is None
    json.dumps(rep, allow_nan=False)
    assert report_csv(rep).splitlines()[1].split(",")[7] == ""


def test_exact_records_ignore_tolerance(capsys):
    code, _, _ = run(["verify", "phi4", "--k", "3..9", "--atol", "0", "--rtol", "0"], capsys)
    assert code == 0


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "lmeansq", "table", "jordan", "--k", "1..3"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout.splitlines()[1] == "1,1,1"
