import io
import json
import subprocess
import sys

import pytest

from hopfplumb.cli import main
from hopfplumb.invariants import knot_signature
from hopfplumb.plumbing import SeifertMatrix, seifert_family
from hopfplumb.records import rows_from_csv


def run(*argv, **kw):
    out = io.StringIO()
    code = main(list(argv), out=out, **kw)
    return code, out.getvalue()


def test_family_g2_n1():
    code, text = run("family", "--genus", "2", "--n", "1")
    assert code == 0
    rec = json.loads(text)
    assert rec["classification"] == "pseudo-Anosov"
    assert rec["signature"] == -4
    assert rec["monodromy_order"] == 10
    assert rec["seifert_equals_chain"] is True
    assert rec["filling_assumed"] is True


def test_family_g2_n0():
    code, text = run("family", "--genus", "2", "--n", "0")
    rec = json.loads(text)
    assert code == 0 and rec["classification"] == "non-pA-elliptic"
    assert rec["bounds_report"] == "n/a"


def test_family_pretty_and_convention():
    code, text = run("family", "--genus", "3", "--n", "2", "--format", "pretty")
    assert code == 0 and "pseudo-Anosov" in text
    code, text = run("family", "--genus", "2", "--n", "1", "--convention", "+1")
    assert code == 0 and json.loads(text)["signature"] == 4


@pytest.mark.parametrize("argv", [
    ("family", "--genus", "1", "--n", "1"),
    ("family", "--genus", "2", "--n", "-1"),
    ("family", "--genus", "2"),
    ("family", "--genus", "2", "--n", "1", "--tol", "0"),
    ("family", "--genus", "2", "--n", "1", "--convention", "2"),
    ("verify", "--g-max", "1"),
    ("verify", "--n-max", "0"),
    ("lt-signature", "--genus", "2", "--n", "1", "--samples", "1"),
    ("nosuchcommand",),
])
def test_input_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_family_table_csv():
    code, text = run("family-table", "--genus", "2", "--n-max", "3", "--format", "csv")
    assert code == 0
    lines = text.strip().split("\n")
    assert len(lines) == 5
    rows = rows_from_csv(text)
    mus = [float(r["mu_lo"]) for r in rows]
    assert all(a < b for a, b in zip(mus, mus[1:]))
    assert all('"' not in line for line in lines)


def test_family_table_single_row_and_formats():
    code, text = run("family-table", "--genus", "3", "--n-max", "0")
    assert code == 0 and len(text.strip().split("\n")) == 2
    code, js = run("family-table", "--genus", "2", "--n-max", "2", "--format", "json")
    code2, pretty = run("family-table", "--genus", "2", "--n-max", "2", "--format", "pretty")
    data = json.loads(js)
    assert code == code2 == 0 and len(data) == 3
    for r in data:
        assert r["mu_lo"] in pretty


def write_matrix(tmp_path, rows, name="m.json"):
    p = tmp_path / name
    p.write_text(json.dumps({"rows": rows}))
    return str(p)


def test_thurston_file_pa(tmp_path):
    code, text = run("thurston", write_matrix(tmp_path, [[1, 4], [1, 1]]), "--assume-filling")
    assert code == 0
    res = json.loads(text)
    assert res["classification"] == "pseudo-Anosov" and res["assume_filling"] is True
    assert float(res["lambda_abs"]["lo"]) < 16.4530993666 < float(res["lambda_abs"]["hi"])


def test_thurston_file_elliptic(tmp_path):
    code, text = run("thurston", write_matrix(tmp_path, [[1, 0], [1, 1]]), "--assume-filling")
    assert code == 0 and json.loads(text)["classification"] == "non-pA-elliptic"
    assert json.loads(text)["lambda_abs"] is None


def test_thurston_requires_flag_and_valid_file(tmp_path):
    good = write_matrix(tmp_path, [[1, 4], [1, 1]])
    assert run("thurston", good)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("thurston", str(bad), "--assume-filling")[0] == 2
    assert run("thurston", str(tmp_path / "missing.json"), "--assume-filling")[0] == 2
    assert run("thurston", write_matrix(tmp_path, [[1, -1]], "neg.json"), "--assume-filling")[0] == 2


def test_invariants_file(tmp_path):
    code, text = run("invariants", write_matrix(tmp_path, seifert_family(2, 1).tolist()))
    res = json.loads(text)
    assert code == 0
    assert res["signature"] == -4 and res["monodromy_order"] == 10
    assert res["alexander"] == [[-2, 1], [-1, -1], [0, 1], [1, -1], [2, 1]]
    assert len(res["levine_tristram"]) == 64


def test_invariants_non_unimodular(tmp_path):
    code, text = run("invariants", write_matrix(tmp_path, [[2, 1], [0, 2]]))
    assert code == 0 and json.loads(text)["monodromy"] == "n/a"
    assert run("invariants", write_matrix(tmp_path, [[1, 2]], "r.json"))[0] == 2


def test_lt_signature_identical_across_n():
    outs = {run("lt-signature", "--genus", "2", "--n", str(n), "--samples", "10")[1] for n in (1, 4)}
    assert len(outs) == 1
    lines = outs.pop().strip().split("\n")
    assert lines[0] == "theta,sigma_omega,degenerate"
    assert len(lines) == 11
    last = lines[-1].split(",")
    assert float(last[0]) == pytest.approx(3.141592653589793) and last[1] == "-4"
    assert lines[1].split(",")[1] == "0"


def test_verify_passes():
    code, text = run("verify", "--g-max", "4", "--n-max", "5")
    assert code == 0
    assert text.strip().split("\n")[-1].startswith("overall: VERIFIED")
    assert "FAIL" not in text


def corrupted(g, n, convention=-1):
    A = seifert_family(g, n, convention).matrix.tolist()
    A[-1][0] += 1 if n == 3 else 0
    return _raw(A, convention)


def _raw(rows, convention):
    from hopfplumb.linalg import IntegerMatrix
    try:
        return SeifertMatrix(IntegerMatrix(rows), convention)
    except ValueError:
        # keep the corrupted matrix even when it is no longer unimodular
        obj = object.__new__(SeifertMatrix)
        object.__setattr__(obj, "matrix", IntegerMatrix(rows))
        object.__setattr__(obj, "convention", convention)
        return obj


def test_verify_fault_injection_names_check():
    code, text = run("verify", "--g-max", "3", "--n-max", "3", seifert=corrupted)
    assert code == 1
    fails = [line for line in text.split("\n") if line.startswith("FAIL")]
    assert any("seifert-form" in line for line in fails)
    assert "overall: FAILED" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfplumb", "family", "--genus", "2", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["signature"] == knot_signature(seifert_family(2, 2))
