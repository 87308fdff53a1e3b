import json
import subprocess
import sys

import pytest

from wordmaps.cli import EXIT_INAPPLICABLE, EXIT_OK, EXIT_PARSE, main, parse_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "[x,y]", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["psl2_verdict"] == "Surjective"


def test_analyze_text_with_big(capsys):
    code, out, _ = run(capsys, "analyze", "[y x y^-1, x^-1]", "--big", "1")
    assert code == EXIT_OK and "SL(2) verdict:   Surjective" in out


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "[x,y]")
    assert code == EXIT_OK and json.loads(out)["P"]


def test_big(capsys):
    code, out, _ = run(capsys, "big", "[y x y^-1, x^-1]", "--t", "1")
    assert code == EXIT_OK and json.loads(out)["verdict"] == "BigAt(1)"


def test_witness_unipotent(capsys):
    code, out, _ = run(capsys, "witness", "[x,y]", "--target", "1,0;7/36,1", "--point", "2,3")
    assert code == EXIT_OK and json.loads(out)["verified"]


def test_witness_trace(capsys):
    code, out, _ = run(capsys, "--seed", "3", "witness", "[x,y]", "--target", "7")
    assert code == EXIT_OK and json.loads(out)["residual"] < 1e-8


def test_minusid(capsys):
    code, out, _ = run(capsys, "minusid", "[x,y]")
    assert code == EXIT_OK and json.loads(out)["N"] == 2


def test_ff_image(capsys):
    code, out, _ = run(capsys, "ff-image", "[x,y]", "--prime", "5", "--projective")
    assert code == EXIT_OK and json.loads(out)["image_size"] == 60


def test_verify(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == EXIT_OK and "FAIL" not in out


@pytest.mark.parametrize(
    "argv",
    [
        ("analyze", "[x,y"),
        ("trace", "x y q"),
        ("analyze", "x", "--generators", "1", "--big", "abc"),
        ("witness", "[x,y]", "--target", "1,2,3"),
        ("nonsense",),
    ],
)
def test_parse_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_PARSE


@pytest.mark.parametrize(
    "argv",
    [
        ("minusid", "x^2 y"),
        ("trace", "g1 g2 g3"),
        ("big", "1", "--t", "1"),
        ("ff-image", "x", "--prime", "4"),
        ("witness", "[x,y]", "--target", "2,0;0,1"),
    ],
)
def test_inapplicable(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_INAPPLICABLE


def test_parse_matrix_forms():
    assert parse_matrix("[[1,2],[3,7]]") == parse_matrix("1,2;3,7")


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "wordmaps", "minusid", "[x,y]"], capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["N"] == 2
    p = subprocess.run([sys.executable, "-m", "wordmaps", "analyze", "[x,"], capture_output=True, text=True)
    assert p.returncode == 1


def test_verification_failure_exit_code(capsys, monkeypatch):
    from wordmaps import paper_checks
    from wordmaps.cli import EXIT_VERIFY

    def broken(seed=0):
        rep = paper_checks.SuiteReport()
        rep.add(paper_checks.Check("forced mismatch", False, 1, 2))
        return rep

    monkeypatch.setattr(paper_checks, "verify_paper_suite", broken)
    code, out, _ = run(capsys, "verify-paper")
    assert code == EXIT_VERIFY and "[FAIL] forced mismatch" in out
