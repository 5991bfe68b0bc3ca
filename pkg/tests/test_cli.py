import json

import numpy as np
import pytest

from htype import fixtures
from htype import hr_family as F
from htype.algebra_core import HTypeAlgebra, verify_h_type
from htype.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_rho_examples(capsys):
    assert run(capsys, "rho", "16")[:2] == (0, "9\n")
    code, out, err = run(capsys, "rho", "0")
    assert code == 2 and "usage" in err and out == ""
    assert run(capsys, "rho", "--rho-t", "3", "1")[1] == "rho_1(2^3) = 5\n"
    assert run(capsys, "rho", "--tau", "3")[1] == "tau(2^3) = 8\n"


def test_rho_table_grids(capsys):
    code, out, _ = run(capsys, "rho", "--table1")
    assert code == 0
    assert out.splitlines()[2:] == [
        "2       1    0    -    -    -",
        "4       3    1    1    -    -",
        "8       7    3    3    3    3",
        "16      8    7    5    4    4",
        "32      9    8    7    5    5",
    ]
    code, out, _ = run(capsys, "rho", "--table2")
    assert code == 0 and out.splitlines()[-1] == "32      9    8    6    6    5"


def test_bad_flags_exit_two(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "algebra", "--k", "2", "--sig-z", "x")[0] == 2
    assert run(capsys, "factorize", "--k", "4", "--style", "kirkman", "--classify", "1", "1")[0] == 2
    assert run(capsys, "iso", "--files", "/nonexistent/a.json", "/nonexistent/b.json")[0] == 2


def test_algebra_examples(capsys):
    code, out, _ = run(capsys, "algebra", "--k", "2", "--sig-z", "3,0")
    assert code == 0 and "dim z = 3" in out and "FAIL" not in out
    code, out, _ = run(capsys, "algebra", "--k", "2", "--sig-z", "2,1")
    assert code == 1 and out.startswith("no pseudo H-type algebra with center signature (2,1)")
    code, out, _ = run(capsys, "algebra", "--k", "1", "--sig-z", "1,0")
    assert code == 0 and "w1 = e1xe2" in out


def test_algebra_from_factorizations(capsys):
    code, out, _ = run(capsys, "algebra", "--k", "4", "--factorization", "steiner8")
    assert code == 0 and "dim z = 7" in out and "FAIL" not in out
    code, out, _ = run(capsys, "algebra", "--k", "4", "--factorization", "kirkman8")
    assert code == 1 and "no anticommuting" in out


def test_algebra_factorization_file(tmp_path, capsys):
    path = tmp_path / "k4.txt"
    path.write_text("1-2 3-4\n1-3 2-4\n1-4 2-3\n")
    code, out, _ = run(capsys, "algebra", "--k", "2", "--factorization", str(path))
    assert code == 0 and "coefficient assignments found: 16" in out


def test_algebra_export_round_trip(tmp_path, capsys):
    path = tmp_path / "alg.json"
    code, _, _ = run(capsys, "algebra", "--k", "4", "--sig-z", "3,4", "--export", str(path))
    assert code == 0
    alg = HTypeAlgebra.from_json(path.read_text())
    assert alg.sig_z == (3, 4) and verify_h_type(alg).passed


def test_iso_examples(capsys):
    code, out, _ = run(capsys, "iso", "--example", "omega1", "omega3")
    assert code == 0
    assert "conjugacy verified: True" in out and "rank deficiency certificate: valid" in out
    assert "reference conjugator verifies: True; among enumerated solutions: True" in out
    code, out, _ = run(capsys, "iso", "--example", "omega1", "omega1")
    assert code == 0 and out.startswith("B =\n[1 0 0 0]\n[0 1 0 0]\n[0 0 1 0]\n[0 0 0 1]\n")
    code, out, _ = run(capsys, "iso", "--example", "omega1", "omega2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["B"] == fixtures.B1_SWAP34.tolist() and data["matching"] == [0, 2, 1]


def test_iso_files(tmp_path, capsys):
    o = F.example_family("octonion8")
    B = np.eye(8, dtype=np.int64)[[1, 0, 2, 3, 4, 5, 7, 6]]
    conj = F.HRFamily(8, 7, 0, [B @ E @ B.T for E in o.members])
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text(o.to_json())
    b.write_text(conj.to_json())
    code, out, _ = run(capsys, "iso", "--files", str(a), str(b))
    assert code == 0 and "conjugacy verified: True" in out
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "iso", "--files", str(a), str(bad))[0] == 2


def test_design_examples(capsys):
    code, out, _ = run(capsys, "design", "--n", "8", "--verify")
    assert code == 0 and "on 8 variables" in out and "FAIL" not in out
    code, out, _ = run(capsys, "design", "--n", "2", "--amicable", "1", "--verify")
    assert code == 0 and "FAIL" not in out


def test_factorize_examples(capsys):
    code, out, _ = run(capsys, "factorize", "--k", "4", "--style", "kirkman", "--classify", "1", "2")
    assert code == 0 and "factors 1,2: {8}" in out
    code, out, _ = run(capsys, "factorize", "--k", "4", "--style", "steiner", "--classify-all")
    pairs = [l for l in out.splitlines() if l.startswith("factors ")]
    assert code == 0 and len(pairs) == 21 and all(l.endswith("{4,4}") for l in pairs)
    assert "all pairs square: True" in out


def test_json_and_output_file(tmp_path, capsys):
    code, out, _ = run(capsys, "rho", "16", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["command"] == "rho" and data["status"] == 0
    path = tmp_path / "out.json"
    code, out, _ = run(capsys, "factorize", "--k", "4", "--style", "steiner", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["valid"] is True


@pytest.mark.parametrize("argv", [
    ("design", "--n", "16", "--amicable", "2", "--verify", "--seed", "3"),
    ("iso", "--example", "omega1", "omega3", "--all"),
    ("algebra", "--k", "2", "--sig-z", "1,2", "--format", "json"),
])
def test_deterministic(capsys, argv):
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)
