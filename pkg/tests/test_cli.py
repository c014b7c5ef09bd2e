import json
import subprocess
import sys

import pytest

from pfaffext.cli import main
from pfaffext.selftest import default_golden_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ext_power_square(capsys):
    code, out, _ = run(capsys, "ext", "--n", "6", "--ideal", "pow:4:2", "--deg", "-18..-6")
    assert code == 0
    data = json.loads(out)
    assert {r["j"] for r in data["terms"]} == {6, 15}
    assert {tuple(r["lambda"]) for r in data["terms"] if r["j"] == 15} == {(6,) * 6}


def test_ext_basic(capsys):
    code, out, _ = run(capsys, "ext", "--n", "6", "--ideal", "gens:2,1", "--deg", "-18..-6")
    terms = json.loads(out)["terms"]
    assert {tuple(r["lambda"]) for r in terms if r["j"] == 15} == {(6, 6, 6, 6, 5, 5), (6,) * 6}


def test_ext_degree_zero(capsys):
    # Ext^6(S/I_4) is finitely generated, so it is nonzero in degree 0 too
    _, out, _ = run(capsys, "ext", "--n", "6", "--ideal", "pfaff:4", "--deg", "0..0")
    terms = json.loads(out)["terms"]
    assert [(r["j"], r["lambda"]) for r in terms] == [(6, [3, 3, 3, 3, -6, -6])]


def test_ext_low_degrees_empty(capsys):
    # the lowest term is S_(6,6,6,6,6,6) in degree -18
    _, out, _ = run(capsys, "ext", "--n", "6", "--ideal", "pow:4:2", "--deg", "-500..-19")
    assert json.loads(out)["terms"] == []


def test_deterministic(capsys):
    args = ("maps", "--n", "6", "--ideal", "gens:2,1", "--ideal2", "pow:4:2", "--deg", "-18..-6")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]
    threaded = run(capsys, *args, "--threads", "2")[1]
    assert threaded == run(capsys, *args)[1]


def test_reg(capsys):
    data = json.loads(run(capsys, "reg", "--n", "6", "--ideal", "pow:4:2")[1])
    assert data["reg_ideal"] == 5 and data["reg_quotient"] == 4
    assert data["linear_resolution"] is False and data["route"] == "computed"
    data = json.loads(run(capsys, "reg", "--n", "8", "--ideal", "sym:4:6")[1])
    assert data["reg_ideal"] == 12 and data["route"] == "closed-form"
    data = json.loads(run(capsys, "reg", "--n", "6", "--ideal", "gens:1,1")[1])
    assert data["reg_ideal"] == 4 and data["generator_degree"] == 2
    data = json.loads(run(capsys, "reg", "--n", "6", "--ideal", "gens:2;1,1,1")[1])
    assert data["generator_degree"] is None and data["linear_resolution"] is None


def test_maps(capsys):
    code, out, _ = run(capsys, "maps", "--n", "6", "--ideal", "gens:2,1", "--ideal2", "pow:4:2",
                       "--deg", "-18..-6")
    data = json.loads(out)
    assert code == 0
    assert data["labels"] == {"kernel": ["J[(1,1),0]"], "image": ["J[(),1]", "J[(1,1,1),0]"],
                              "cokernel": ["J[(1,1),1]"]}
    code, out, _ = run(capsys, "maps", "--n", "6", "--ideal", "pow:4:2", "--ideal2", "pow:4:2",
                       "--deg", "-18..-6")
    assert {r["role"] for r in json.loads(out)["terms"]} == {"image"}


def test_cohomology_and_kodaira(capsys):
    _, out, _ = run(capsys, "cohomology", "--n", "6", "--ideal", "pfaff:4", "--q", "8..8",
                    "--twist", "-6..-6")
    assert json.loads(out)["rows"] == [{"q": 8, "twist": -6, "dim": 1}]
    code, out, _ = run(capsys, "kodaira", "--n", "6", "--ideal", "pow:4:2")
    assert code == 0 and json.loads(out)["pass"] is True


def test_pretty(capsys):
    _, out, _ = run(capsys, "ext", "--n", "6", "--ideal", "pfaff:4", "--deg", "-7..-6", "--pretty")
    assert "S_(3,3,3,3,1,1)" in out
    _, out, _ = run(capsys, "cohomology", "--n", "6", "--ideal", "pfaff:4", "--q", "0..0",
                    "--twist", "0..1", "--pretty")
    assert out.splitlines() == ["q,twist,dim", "0,0,1", "0,1,15"]


@pytest.mark.parametrize("argv,code", [
    (("ext", "--n", "6", "--ideal", "nonsense", "--deg", "0..0"), 2),
    (("ext", "--n", "6", "--ideal", "pfaff:4", "--deg", "x..y"), 2),
    (("ext", "--n", "6", "--ideal", "pow:5:2", "--deg", "0..0"), 1),
    (("maps", "--n", "6", "--ideal", "pow:4:2", "--ideal2", "gens:2,1", "--deg", "0..0"), 1),
    (("reg", "--n", "6", "--ideal", "gens:"), 1),
    (("ext", "--n", "6"), 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "quick")
    assert code == 0
    assert out.count("PASS") == 4


def test_selftest_corrupted_golden(capsys, tmp_path):
    data = json.loads(default_golden_path().read_text())
    data["reg_quotient"]["pow:4:2"] = 5
    bad = tmp_path / "golden.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run(capsys, "selftest", "quick", "--golden", str(bad))
    assert code == 1
    assert "FAIL golden" in out and '-  "pow:4:2": 5' in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pfaffext", "reg", "--n", "6", "--ideal", "pfaff:4"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["reg_quotient"] == 3
