import io
import json
import subprocess
import sys

import jsonschema
import pytest

from fibalg import algebra as alg
from fibalg.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main

REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "cases", "failures", "elapsed_ms"],
    "properties": {
        "suite": {"type": "string"},
        "cases": {"type": "integer", "minimum": 0},
        "elapsed_ms": {"type": "integer", "minimum": 0},
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["op", "inputs", "lhs", "rhs"],
                "properties": {
                    "op": {"type": "string"},
                    "inputs": {"type": "object", "additionalProperties": {"type": "string"}},
                    "lhs": {"type": "string"},
                    "rhs": {"type": "string"},
                },
            },
        },
        "suites": {"type": "array", "items": {"$ref": "#"}},
    },
}

# octonion multiplication table at alpha = beta = gamma = 1, written out by hand
OCTONION_UNIT_TABLE = [
    ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
    ["e1", "-1", "e3", "-e2", "e5", "-e4", "-e7", "e6"],
    ["e2", "-e3", "-1", "e1", "e6", "e7", "-e4", "-e5"],
    ["e3", "e2", "-e1", "-1", "e7", "-e6", "e5", "-e4"],
    ["e4", "-e5", "-e6", "-e7", "-1", "e1", "e2", "e3"],
    ["e5", "e4", "-e7", "e6", "-e1", "-1", "-e3", "e2"],
    ["e6", "e7", "e4", "-e5", "-e2", "e3", "-1", "-e1"],
    ["e7", "-e6", "e5", "e4", "-e3", "-e2", "e1", "-1"],
]


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_show_table_octonion_unit_params():
    code, text = run_cli("show", "table", "--algebra", "octonion:1,1,1")
    assert code == EXIT_OK
    rows = [line.split("|")[1].split() for line in text.splitlines()[2:]]
    assert rows == OCTONION_UNIT_TABLE


def test_show_fib_element_and_cross():
    assert run_cli("show", "fib-element", "--algebra", "quaternion:1,1", "--m", "0") == (EXIT_OK, "(0, 1, 1, 2)\n")
    assert run_cli("show", "cross", "--dim", "7", "--k", "0", "--m", "1") == (EXIT_OK, "(-3, 2, 7, 0, 4, -9, 3)\n")
    assert run_cli("show", "cross", "--dim", "3", "--k", "0", "--m", "1") == (EXIT_OK, "(1, 1, -1)\n")
    assert run_cli("show", "fib-element", "--algebra", "quaternion:1,1", "--m", "-1")[1] == "(1, 0, 1, 1)\n"


def test_show_unknown_algebra_is_usage_error():
    assert run_cli("show", "table", "--algebra", "sedenion:1")[0] == EXIT_USAGE
    assert run_cli("show", "table")[0] == EXIT_USAGE


def test_single_point_cassini():
    code, text = run_cli("verify", "--suite", "cassini", "--algebra", "quaternion:1,1", "--m-range", "0..0")
    doc = json.loads(text)
    assert code == EXIT_OK
    assert doc["cases"] == 1 and doc["failures"] == []
    jsonschema.validate(doc, REPORT_SCHEMA)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "scalar-identities", "--m-range", "0..-1"],
        ["verify", "--suite", "nonsense"],
        ["verify", "--m-range", "1-5"],
        ["verify", "--suite", "cassini", "--algebra", "quaternion:1,1/0"],
        ["verify", "--p-max", "-1"],
        ["verify", "--corrupt", "1,2=3"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run_cli(*argv)[0] == EXIT_USAGE
    assert capsys.readouterr().err


def test_split_and_fractional_parameters():
    code, text = run_cli("verify", "--suite", "cassini", "--algebra", "quaternion:-1,2/3",
                         "--algebra", "octonion:1/2,-3,5", "--m-range", "-4..4")
    assert code == EXIT_OK
    assert json.loads(text)["cases"] == 18


def test_spec_file_roundtrip_and_corruption(tmp_path):
    code, text = run_cli("show", "spec", "--algebra", "octonion:2,1,3")
    path = tmp_path / "o213.json"
    path.write_text(text)
    assert alg.loads_spec(text) == alg.make_generalized_octonion(2, 1, 3)
    assert run_cli("verify", "--suite", "cassini", "--algebra-file", str(path))[0] == EXIT_OK

    # a table corrupted consistently is still a bilinear algebra, so Cassini keeps holding
    doc = json.loads(text)
    doc["table"][(1 * 8 + 2) * 8 + 3] = "2"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert run_cli("verify", "--suite", "cassini", "--algebra-file", str(bad))[0] == EXIT_OK
    # ...but the closed-form norm no longer matches x * conj(x)
    assert run_cli("verify", "--suite", "algebra-axioms", "--algebra-file", str(bad), "--elements", "5")[0] == EXIT_FAILED


def test_non_unital_file_is_rejected(tmp_path):
    doc = alg.spec_to_dict(alg.make_generalized_quaternion(1, 1))
    doc["table"][1 * 4 + 1] = "0"  # c[0][1][1]
    path = tmp_path / "nonunital.json"
    path.write_text(json.dumps(doc))
    assert run_cli("verify", "--suite", "cassini", "--algebra-file", str(path))[0] == EXIT_USAGE


def test_corruption_fails_cassini_with_exit_1():
    code, text = run_cli("verify", "--suite", "cassini", "--algebra", "octonion:1,1,1",
                         "--m-range", "-3..3", "--corrupt", "1,2,3=2")
    doc = json.loads(text)
    assert code == EXIT_FAILED
    assert doc["failures"] and {f["op"] for f in doc["failures"]} == {"cassini"}
    assert doc["failures"][0]["inputs"] == {"algebra": "O(1,1,1)", "m": "-3"}
    jsonschema.validate(doc, REPORT_SCHEMA)


def test_exit_code_agrees_with_report():
    for extra in ([], ["--corrupt", "2,1,3=5"]):
        code, text = run_cli("verify", "--suite", "cassini", "--m-range", "-2..2", *extra)
        assert (code == EXIT_OK) == (json.loads(text)["failures"] == [])


def test_reports_are_deterministic():
    argv = ["verify", "--suite", "algebra-axioms", "--seed", "5", "--elements", "20", "--random-count", "4"]
    assert run_cli(*argv) == run_cli(*argv)
    other = run_cli("verify", "--suite", "algebra-axioms", "--seed", "6", "--elements", "20", "--random-count", "4")
    assert json.loads(other[1])["cases"] > 0


def test_timing_is_opt_in():
    _, text = run_cli("verify", "--suite", "cassini", "--m-range", "0..0", "--timing")
    assert json.loads(text)["elapsed_ms"] >= 0


def test_text_format():
    code, text = run_cli("verify", "--suite", "fib-vectors", "--k-max", "3", "--format", "text")
    assert code == EXIT_OK
    assert text.startswith("PASS fib-vectors:")


def test_python_dash_m_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fibalg", "show", "cross", "--dim", "3", "--k", "2", "--m", "5"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "(2, 2, -2)\n"
