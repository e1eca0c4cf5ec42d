import io
import subprocess
import sys

import pytest

from helpers import DATA
from sigcolor.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


UT = DATA / "unbalanced_triangle.sg"
BT = DATA / "balanced_triangle.sg"
K2 = DATA / "k2_positive.sg"


def test_count_brute_unbalanced_triangle():
    assert call("count", UT, "-k", 2, "--method", "brute") == (0, "2\n", "")


@pytest.mark.parametrize("method", ["brute", "ie", "nbc"])
@pytest.mark.parametrize("k", [0, 1, 2, 3, 4, 5])
def test_count_methods_agree(method, k):
    expected = {0: 0, 1: 0, 2: 2, 3: 8, 4: 28, 5: 64}[k]
    assert call("count", UT, "-k", k, "--method", method)[1] == f"{expected}\n"


def test_count_with_list_file():
    for method in ("brute", "ie", "nbc"):
        code, out, _ = call("count", UT, "--list", DATA / "zero_free_pairs.lst", "--method", method)
        assert (code, out) == (0, "2\n")


def test_poly_balanced_triangle():
    code, out, _ = call("poly", BT)
    assert code == 0
    assert out == "c: 1 3 2 0\nc*: 1 3 2\nP1: 1 -3 2 0\nP0: 1 -3 2 0\n"


def test_poly_unbalanced_triangle_with_order():
    code, out, _ = call("poly", UT, "--order", "2,0,1")
    assert out == "c: 1 3 3 1\nc*: 1 3 3\nP1: 1 -3 3 -1\nP0: 1 -3 3 0\n"


def test_poly_empty_graph(tmp_path):
    path = tmp_path / "empty.sg"
    path.write_text("0 0\n")
    assert call("poly", path)[1] == "c: 1\nc*: 1\nP1: 1\nP0: 1\n"


def test_switch_k2():
    code, out, _ = call("switch", K2, "--at", "0")
    assert code == 0 and out == "2 1\n0 1 -\n"


def test_circuits_output():
    code, out, _ = call("circuits", BT)
    assert code == 0
    assert "cycles: 1\n  0,1,2 balanced\n" in out
    assert "broken circuits: 1\n  0,1 x1\n" in out
    code, out, _ = call("circuits", DATA / "double_digon.sg")
    assert "barbells: 1\n  0,1,2,3 cycles=0,1|2,3 path=-\n" in out


def test_verify_passes_on_fixtures():
    for path in sorted(DATA.glob("*.sg")):
        code, out, _ = call("verify", path, "--kmax", 5, "--trials", 5, "--seed", 3)
        assert code == 0, out
        assert out.endswith("all checks passed\n")


def test_minimize_output_is_deterministic():
    argv = ("minimize", UT, "-k", 4, "--mode", "zero-free", "--random", 50, "--seed", 1)
    first = call(*argv)
    assert first == call(*argv)
    code, out, _ = first
    assert code == 0
    assert "strategy: random seed=1\n" in out and "canonicalCount: 28\n" in out
    assert "counterexampleFound: false\n" in out


def test_minimize_exhaustive_finds_small_k_counterexample():
    code, out, _ = call("minimize", UT, "-k", 2, "--mode", "any", "--universe", 3, "--exhaustive")
    assert code == 0
    assert "minCount: 1\n" in out and "counterexampleFound: true\n" in out
    assert out.endswith("argmin:\n0: -3 0\n1: -3 0\n2: -3 0\n")


@pytest.mark.parametrize(
    "argv, code",
    [
        (("nope", "x.sg"), 1),
        (("count", UT), 1),
        (("count", UT, "-k", 2, "--bogus"), 1),
        (("count", "/nonexistent/graph.sg", "-k", 2), 1),
        (("poly", UT, "--order", "0,0,1"), 1),
        (("switch", K2, "--at", "5"), 1),
        (("minimize", UT, "-k", 3, "--mode", "zero-free"), 1),
        (("minimize", UT, "-k", 4, "--mode", "any", "--universe", 9), 3),
    ],
)
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "loop.sg"
    bad.write_text("1 1\n0 0 +\n")
    code, _, err = call("poly", bad)
    assert code == 2 and "loop" in err
    lst = tmp_path / "bad.lst"
    lst.write_text("0: 1\n")
    assert call("count", UT, "--list", lst)[0] == 2


def test_resource_exit_code(tmp_path):
    big = tmp_path / "big.sg"
    big.write_text("2 21\n" + "0 1 +\n" * 21)
    assert call("count", big, "-k", 3, "--method", "ie")[0] == 3


def test_verify_reports_mismatch(monkeypatch):
    import sigcolor.cli as cli

    monkeypatch.setattr(cli, "inclusion_exclusion_count", lambda g, L: -1)
    code, out, _ = call("verify", UT, "--trials", 2)
    assert code == 4 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sigcolor", "count", str(UT), "-k", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "8\n"
