import io
import json
import subprocess
import sys

import pytest

from eulerian.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_poly_examples():
    assert run("poly", "--family", "T", "--n", "3", "--format", "plain") == (0, "2 22 22 2\n")
    assert run("poly", "--family", "I", "--n", "2") == (0, "1 3\n")
    code, text = run("poly", "--family", "P", "--n", "1", "--format", "json")
    d = json.loads(text)
    assert code == 0
    assert (d["family"], d["n"], d["coeffs"]) == ("P", 1, ["1", "3"])


def test_poly_csv():
    code, text = run("poly", "--family", "V", "--n", "2", "--format", "csv")
    assert code == 0
    assert text.splitlines() == ["degree,coefficient", "0,1", "1,8", "2,3"]


@pytest.mark.parametrize("argv", [
    ("poly", "--family", "Q", "--n", "2"),
    ("poly", "--family", "P", "--n", "5"),
    ("poly", "--family", "I", "--n", "0"),
    ("verify", "--suite", "nope"),
    ("verify", "--suite", "conj327", "--n-max", "5"),
    ("enumerate", "--kind", "invseq", "--n", "2"),
    ("enumerate", "--kind", "invseq", "--rule", "fibonacci", "--n", "2"),
    ("enumerate", "--kind", "invseq", "--rule", "explicit:2,3", "--n", "3"),
    ("enumerate", "--kind", "extension", "--forest", "(()"),
    ("enumerate", "--kind", "extension", "--forest", "(())", "--labels", "1"),
    ("enumerate", "--kind", "extension", "--forest", "(())", "--labels", "1 -1"),
    ("enumerate", "--kind", "signedword", "--class", "P", "--n", "0"),
    ("frobnicate",),
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_verify_conj327():
    code, text = run("verify", "--suite", "conj327", "--n-max", "3", "--no-timing")
    reports = [json.loads(line) for line in text.splitlines()]
    assert code == 0
    assert len(reports) == 3
    assert all(r["status"] == "pass" and r["schema"] == "1" for r in reports)
    assert all("elapsed_ms" not in r for r in reports)


@pytest.mark.parametrize("suite,n_max", [("series", 6), ("realroots", 4)])
def test_verify_suites_pass(suite, n_max):
    code, text = run("verify", "--suite", suite, "--n-max", str(n_max))
    assert code == 0
    reports = [json.loads(line) for line in text.splitlines()]
    assert reports and all(r["status"] == "pass" for r in reports)
    assert all(isinstance(r["elapsed_ms"], int) for r in reports)


def test_verify_output_independent_of_jobs():
    one = run("verify", "--suite", "thm33", "--n-max", "3", "--no-timing", "--jobs", "1")
    two = run("verify", "--suite", "thm33", "--n-max", "3", "--no-timing", "--jobs", "2")
    assert one == two and one[0] == 0


def test_poly_output_independent_of_jobs(monkeypatch):
    base = run("poly", "--family", "U", "--n", "3")
    assert run("poly", "--family", "U", "--n", "3", "--jobs", "2") == base
    monkeypatch.setenv("EULERIAN_JOBS", "2")
    assert run("poly", "--family", "U", "--n", "3") == base


def test_enumerate_examples():
    code, text = run("enumerate", "--kind", "invseq", "--rule", "paper-I", "--n", "2")
    assert code == 0 and text.splitlines() == ["0 0", "0 1", "0 2", "0 3"]
    assert run("enumerate", "--kind", "signedword", "--class", "V", "--n", "1") == (0, "-1\n")
    code, text = run("enumerate", "--kind", "extension", "--forest", "(()())")
    assert code == 0 and text.splitlines() == ["0.1 0.2 0.0", "0.2 0.1 0.0"]


def test_enumerate_labeled_extensions():
    code, text = run("enumerate", "--kind", "extension", "--forest", "(())()", "--labels", "2,-1,3")
    assert code == 0
    assert text.splitlines() == ["-1 2 3", "-1 3 2", "3 -1 2"]


def test_enumerate_limit_and_json():
    code, text = run("enumerate", "--kind", "signedword", "--class", "P", "--n", "2", "--limit", "3",
                     "--format", "json")
    assert code == 0
    assert [json.loads(line) for line in text.splitlines()] == [[1, 1, 2, 2], [-1, 1, 2, 2], [1, -1, 2, 2]]
    assert run("enumerate", "--kind", "invseq", "--rule", "natural", "--n", "3", "--limit", "0") == (0, "")


def test_enumerate_labelings_and_D():
    code, text = run("enumerate", "--kind", "labeling", "--family", "L_Fn", "--n", "1")
    assert code == 0 and text.splitlines() == ["2 1", "2 -1", "-2 1", "-1 -2"]
    code, text = run("enumerate", "--kind", "signedword", "--class", "D", "--n", "2")
    assert code == 0 and len(text.splitlines()) == 4


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eulerian", "poly", "--family", "D", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1 11 11 1\n"
    proc = subprocess.run([sys.executable, "-m", "eulerian", "poly", "--family", "D"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "usage" in proc.stderr
