import csv
import io
import json
import math
import os
import subprocess
import sys

import pytest

from zetaforge.cli import CSV_HEADER, main, parse_complex


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0, text
    return [json.loads(line) for line in text.splitlines()]


# ---------------------------------------------------------------- field-info


def test_field_info_gaussian():
    (rec,) = run_json("field-info", "-d", "-4")
    assert rec["schema_version"] == "1" and rec["command"] == "field-info"
    r = rec["results"]
    assert r["h"] == "1" and r["w"] == "4"
    assert abs(float(r["residue"]) - 0.7853981634) < 1e-10
    assert len(r["ideal_counts"]) == 20
    assert isinstance(rec["elapsed_ms"], int) and rec["elapsed_ms"] >= 0


def test_field_info_regulator():
    (rec,) = run_json("field-info", "-d", "5")
    assert abs(float(rec["results"]["regulator"]) - 0.4812118251) < 1e-10
    assert rec["results"]["signature"] == "(2,0)"


def test_field_info_non_fundamental(capsys):
    code, _ = run("field-info", "-d", "9")
    assert code == 2
    assert "squarefree" in capsys.readouterr().err


def test_field_info_csv():
    code, text = run("field-info", "-d", "-7", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["key", "value"]
    assert dict(rows[1:])["h"] == "1"


# ---------------------------------------------------------------- zeta


def test_zeta_zagier_anchor():
    (rec,) = run_json("zeta", "-d", "-7", "-s", "2", "--route", "zagier")
    assert abs(float(rec["results"]["value_re"]) - 1.89484144897) < 1e-8
    assert rec["results"]["route"] == "Zagier"


def test_zeta_closed_vs_factored():
    (a,) = run_json("zeta", "-d", "5", "-s", "4", "--route", "closed")
    (b,) = run_json("zeta", "-d", "5", "-s", "4", "--route", "factored")
    assert abs(float(a["results"]["value_re"]) - float(b["results"]["value_re"])) < 1e-9


def test_zeta_all_routes_triple_agreement():
    (rec,) = run_json("zeta", "-d", "-4", "-s", "3", "--all-routes")
    routes = rec["results"]["routes"]
    assert {"direct", "factored", "closed"} <= set(routes)
    for name, delta in rec["results"]["deltas"].items():
        assert float(delta) < 1e-10, name


def test_zeta_rational_field_and_complex_s():
    (rec,) = run_json("zeta", "-d", "0", "-s", "0.5+14j")
    assert rec["results"]["value_im"] != "0"


def test_zeta_incompatible_route(capsys):
    assert run("zeta", "-d", "5", "-s", "2", "--route", "zagier")[0] == 2
    assert run("zeta", "-d", "-4", "-s", "3", "--route", "zagier")[0] == 2
    assert run("zeta", "-d", "12x", "-s", "2")[0] == 2
    assert run("zeta", "-d", "5", "-s", "abc")[0] == 2


def test_zeta_csv_row():
    code, text = run("zeta", "-d", "-3", "-s", "3", "--route", "closed", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == CSV_HEADER[:-1]
    assert rows[1][:3] == ["-3", "3", "closed"]


def test_numbers_have_enough_digits():
    (rec,) = run_json("zeta", "-d", "-4", "-s", "2")
    digits = rec["results"]["value_re"].replace(".", "").lstrip("0")
    assert len(digits) >= 15


# ---------------------------------------------------------------- verify-wilton


def test_verify_wilton_rational_decreasing():
    recs = run_json("verify-wilton", "-d", "0", "-u", "2", "-v", "2", "-M", "100,400,1600")
    res = [float(r["results"]["residual"]) for r in recs]
    assert len(recs) == 3 and res[0] > res[1] > res[2]


def test_verify_wilton_record_count():
    recs = run_json("verify-wilton", "-d", "5", "-u", "2.3", "-v", "2.4", "-M", "50,200")
    assert [r["results"]["M"] for r in recs] == ["50", "200"]


def test_verify_wilton_constraint(capsys):
    code, _ = run("verify-wilton", "-d", "5", "-u", "1", "-v", "2")
    assert code == 2
    assert "u ≠ 1" in capsys.readouterr().err


def test_verify_wilton_csv():
    code, text = run("verify-wilton", "-d", "-4", "-u", "0.9", "-v", "2.5", "-M", "20,40", "--csv",
                     "--variant", "corrected")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["M", "residual", "tail_estimate", "flags"]
    assert [r[0] for r in rows[1:]] == ["20", "40"]


def test_verify_wilton_bad_M_list():
    assert run("verify-wilton", "-d", "0", "-u", "2", "-v", "2", "-M", "400,100")[0] == 2
    assert run("verify-wilton", "-d", "0", "-u", "2", "-v", "2", "-M", "x")[0] == 2


# ---------------------------------------------------------------- table


def test_table_reference_anchors(tmp_path):
    out = tmp_path / "t.csv"
    code, _ = run("table", "--row=-7,2,zagier", "--row=-3,2,factored", "-o", str(out))
    assert code == 0
    raw = out.read_bytes()
    assert b"\r\n" not in raw
    rows = list(csv.reader(io.StringIO(raw.decode("utf-8"))))
    assert rows[0] == CSV_HEADER
    assert abs(float(rows[1][3]) - 1.89484144897) < 1e-8
    assert abs(float(rows[2][3]) - 1.2851909554841494) < 1e-12


def test_table_empty_batch():
    code, text = run("table")
    assert code == 0
    assert text == ",".join(CSV_HEADER) + "\n"


def test_table_bad_row_keeps_others(tmp_path):
    spec = tmp_path / "batch.csv"
    spec.write_text("D,s,route\n5,2,closed\n5,2,zagier\n-4,2,factored\n", encoding="utf-8")
    code, text = run("table", "--batch", str(spec))
    assert code == 1
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == 4
    assert rows[1][-1] == "" and rows[3][-1] == ""
    assert rows[2][-1] != "" and rows[2][3] == ""


def test_table_json_spec(tmp_path):
    spec = tmp_path / "batch.json"
    spec.write_text(json.dumps([{"D": 8, "s": 2, "route": "closed"}]), encoding="utf-8")
    code, text = run("table", "--batch", str(spec))
    assert code == 0
    assert text.splitlines()[1].startswith("8,2,closed,")


# ---------------------------------------------------------------- general


def test_json_round_trip_and_determinism():
    a = run_json("zeta", "-d", "8", "-s", "3", "--all-routes")[0]
    b = run_json("zeta", "-d", "8", "-s", "3", "--all-routes")[0]
    again = json.loads(json.dumps(a))
    assert set(again) == set(a) and set(again["results"]) == set(a["results"])
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_parse_complex():
    assert parse_complex("2") == 2
    assert parse_complex("1.5+3j") == 1.5 + 3j
    assert parse_complex("-0.5-2i") == -0.5 - 2j


def test_max_terms_flag_and_env(monkeypatch):
    # a tiny term cap leaves the Meijer series truncated
    (rec,) = run_json("zeta", "-d", "5", "-s", "3", "--route", "wilton", "-M", "20", "--max-terms", "8")
    assert "Truncated" in rec["results"]["flags"]
    env = dict(os.environ, ZETAFORGE_MAX_TERMS="8")
    proc = subprocess.run([sys.executable, "-m", "zetaforge", "zeta", "-d", "5", "-s", "3", "--route", "wilton",
                           "-M", "20"], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["value_re"] == rec["results"]["value_re"]
    proc = subprocess.run([sys.executable, "-m", "zetaforge", "zeta", "-d", "5", "-s", "3", "--route", "wilton",
                           "-M", "20", "--max-terms", "400"], capture_output=True, text=True, env=env)
    (full,) = run_json("zeta", "-d", "5", "-s", "3", "--route", "wilton", "-M", "20")
    assert json.loads(proc.stdout)["results"]["value_re"] == full["results"]["value_re"]


def test_usage_error_exit_code():
    assert run("no-such-command")[0] == 2
    assert run("zeta", "-s", "2")[0] == 2
