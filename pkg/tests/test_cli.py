"""CLI surface: flags, exit codes, CSV/JSON formats."""

from __future__ import annotations

import csv
import json
import pathlib

from atlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound_genus2(capsys):
    code, out, _ = run(capsys, "bound", "--genus", "2", "--form", "exact",
                       "--area", "c36")
    assert code == 0
    assert "17.8770835427" in out


def test_bound_genus2_json_roundtrip(capsys):
    code, out, _ = run(capsys, "bound", "--genus", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["genus"] == 2
    assert abs(payload["upper_exact"] - 17.877083542725214) < 1e-9
    assert payload["upper_bound"] == payload["upper_exact"]
    assert json.loads(json.dumps(payload)) == payload


def test_bound_genus1_redirects_to_elliptic(capsys):
    code, _, err = run(capsys, "bound", "--genus", "1")
    assert code == 2
    assert "elliptic" in err


def test_bound_simplified_headline(capsys):
    code, out, _ = run(capsys, "bound", "--genus", "11", "--form", "simplified")
    assert code == 0
    assert "9.85728551271" in out


def test_elliptic_values(capsys):
    code, out, _ = run(capsys, "elliptic", "--tau", "0,1")
    assert code == 0
    assert "0.255844644916" in out    # arakelov_logdet
    assert "1.22201039817" in out     # upper bound
    assert "0.966165753" in out       # slack


def test_elliptic_json_golden_hexagonal(capsys):
    # Golden output at the hexagonal point, cross-checked against a 30-digit
    # evaluation of the closed forms when frozen.
    code, out, _ = run(capsys, "elliptic", "--tau", "0.5,0.866025403784", "--json")
    assert code == 0
    payload = json.loads(out)
    golden = json.loads(
        (pathlib.Path(__file__).parent / "data" / "elliptic_hex_golden.json")
        .read_text())
    assert set(payload) == set(golden)
    assert payload["tau"] == golden["tau"]
    for key in ("arakelov_area", "log_arakelov_area", "arakelov_logdet",
                "d_ar", "upper_bound_log", "bound_slack"):
        assert abs(payload[key] - golden[key]) <= 1e-12 * max(1.0, abs(golden[key]))
    assert abs(payload["bound_slack"]
               - (payload["upper_bound_log"] - payload["arakelov_logdet"])) < 1e-12


def test_elliptic_domain_errors(capsys):
    assert run(capsys, "elliptic", "--tau", "0,-1")[0] == 2
    assert run(capsys, "elliptic", "--tau", "zzz")[0] == 2
    assert run(capsys, "elliptic", "--tau", "1;2")[0] == 2


def test_torus_det_both(capsys):
    code, out, _ = run(capsys, "torus-det", "--tau", "0,1", "--method", "both")
    assert code == 0
    assert "-1.054688281" in out
    assert "logdet_oracle" in out


def test_torus_det_closed_only(capsys):
    code, out, _ = run(capsys, "torus-det", "--tau", "0,1", "--method", "closed")
    assert code == 0
    assert "oracle" not in out


def test_torus_det_shift_invariance(capsys):
    _, out_a, _ = run(capsys, "torus-det", "--tau", "1,1", "--method", "closed")
    _, out_b, _ = run(capsys, "torus-det", "--tau", "0,1", "--method", "closed")
    assert out_a == out_b


def test_torus_det_tolerance_exit(capsys):
    code, _, err = run(capsys, "torus-det", "--tau", "0,1", "--tol", "1e-18")
    assert code == 1
    assert "FAIL" in err


def test_table_csv(tmp_path, capsys):
    path = tmp_path / "out.csv"
    code, _, _ = run(capsys, "table", "--from", "2", "--to", "12",
                     "--csv", str(path))
    assert code == 0
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["genus", "heat_term", "csel_lower", "log_area_bound",
                       "a_g", "e_g_refined", "upper_exact", "upper_simplified",
                       "paper_value", "delta"]
    assert len(rows) == 1 + 11
    by_genus = {row[0]: row for row in rows[1:]}
    assert by_genus["2"][8] == "18.01100181"
    assert abs(float(by_genus["2"][9]) - (-0.133918)) < 1e-5
    assert by_genus["11"][8] == "" and by_genus["11"][9] == ""
    # locale-independent, 12 significant digits
    for row in rows[1:]:
        for cell in row[1:8]:
            assert "," not in cell
            assert len(cell.replace("-", "").replace(".", "").replace("e", "")) <= 13
    assert float(by_genus["3"][6]) == float(f"{9.95356716139:.12g}")


def test_table_json(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, _, _ = run(capsys, "table", "--from", "2", "--to", "3",
                     "--json", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert [row["genus"] for row in payload] == [2, 3]
    assert payload[0]["paper_value"] == 18.01100181
    assert set(payload[0]) == {"genus", "heat_term", "csel_lower",
                               "log_area_bound", "a_g", "e_g_refined",
                               "upper_exact", "upper_simplified",
                               "paper_value", "delta"}


def test_table_unwritable_path(capsys):
    code, _, err = run(capsys, "table", "--from", "2", "--to", "3",
                       "--csv", "/nonexistent-dir/out.csv")
    assert code == 2
    assert "cannot write" in err


def test_table_bad_range(capsys):
    assert run(capsys, "table", "--from", "5", "--to", "3")[0] == 2
    assert run(capsys, "table", "--from", "1", "--to", "3")[0] == 2


def test_verify_claims_default(capsys):
    code, out, _ = run(capsys, "verify-claims")
    assert code == 0
    assert "summary:" in out
    assert "CL-05" in out and "CONFIRMED" in out


def test_verify_claims_only(capsys):
    code, out, _ = run(capsys, "verify-claims", "--only", "CL-05")
    assert code == 0
    assert out.count("CL-") == 1
    assert "CONFIRMED" in out


def test_verify_claims_unknown_id(capsys):
    assert run(capsys, "verify-claims", "--only", "CL-99")[0] == 2


def test_verify_claims_strict_passes_with_shipped_allowlist(capsys):
    assert run(capsys, "verify-claims", "--strict")[0] == 0


def test_verify_claims_json_roundtrip(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify-claims", "--json", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["summary"]["errored"] == 0
    assert json.loads(json.dumps(payload)) == payload
    ids = [rec["id"] for rec in payload["claims"]]
    assert ids == sorted(ids, key=lambda s: [int(p) if p.isdigit() else p
                                             for p in __import__("re").split(r"(\d+)", s)])


def test_precision_env_override(capsys, monkeypatch):
    monkeypatch.setenv("ATL_PRECISION", "1e-10")
    code, out, _ = run(capsys, "torus-det", "--tau", "0,1", "--method", "both")
    assert code == 0
    monkeypatch.setenv("ATL_PRECISION", "not-a-number")
    assert run(capsys, "elliptic", "--tau", "0,1")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "bound")[0] == 2            # missing --genus
    assert run(capsys, "no-such-command")[0] == 2
