import json
import subprocess
import sys

import pytest

from ppsums.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def antichain_file(tmp_path):
    path = tmp_path / "two.poset"
    path.write_text("# two incomparable elements\nelements: 1_1, 1_2\n")
    return str(path)


@pytest.mark.parametrize("argv, expected", [
    (("expand", "p", "1,1,2", "--to", "M"), "2*M[1,1,2] + 1*M[2,2]"),
    (("expand", "p", "1,2,1", "--to", "F"), "-2*F[1,1,2] + 2*F[1,3]"),
    (("expand", "pr", "1,1"), "2*M[1,1] + 1*M[2]"),
    (("expand", "p", "e"), "1*M[e]"),
    (("expand", "M", "2", "--to", "F"), "-1*F[1,1] + 1*F[2]"),
    (("expand", "p", "1,1,2", "--format", "latex"), "2M_{112} + M_{22}"),
])
def test_expand_golden(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "p", "1,1,2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"basis": "M", "terms": [
        {"composition": [1, 1, 2], "coeff": {"num": 2, "den": 1}},
        {"composition": [2, 2], "coeff": {"num": 1, "den": 1}}]}


def test_json_is_byte_identical_on_repeat(capsys):
    for argv in (("expand", "p", "2,1,1", "--to", "F", "--format", "json"),
                 ("verify", "matrices", "4", "--format", "json"),
                 ("matrices", "R", "1,2,1", "1,3", "--format", "json")):
        first = run(capsys, *argv)[1]
        second = run(capsys, *argv)[1]
        assert first == second


def test_matrices(capsys):
    code, out, _ = run(capsys, "matrices", "R", "1,2,1", "1,3")
    assert code == 0
    assert out.strip().endswith("count: 2")
    assert ". 1 .\n2 . 1" in out
    code, out, _ = run(capsys, "matrices", "Q", "1,2,1", "1,3", "--format", "json")
    obj = json.loads(out)
    assert obj["count"] == 2
    assert obj["matrices"] == [[[0, 1, 0], [2, 0, 1]], [[0, 0, 1], [2, 1, 0]]]
    code, out, _ = run(capsys, "matrices", "Rsym", "2,1,1", "4")
    assert code == 0 and out.strip().endswith("count: 1")


def test_verify_and_worked_examples(capsys):
    code, out, _ = run(capsys, "verify", "refinement", "4")
    assert code == 0 and out.startswith("ok:")
    code, out, _ = run(capsys, "verify", "all", "3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["status"] == "ok" and "elapsed_ms" not in obj
    code, out, _ = run(capsys, "paper-examples")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") >= 20


def test_timing_flag_adds_elapsed(capsys):
    code, out, _ = run(capsys, "verify", "positivity", "3", "--format", "json", "--timing")
    assert code == 0 and "elapsed_ms" in json.loads(out)


def test_poset_subcommands(capsys, antichain_file):
    code, out, _ = run(capsys, "poset", "extensions", antichain_file)
    assert code == 0 and out == "1_1 1_2\n1_2 1_1\ncount: 2\n"
    code, out, _ = run(capsys, "poset", "lowersets", antichain_file)
    assert out.strip().endswith("count: 4")
    code, out, _ = run(capsys, "poset", "kpartitions", antichain_file, "--vars", "2")
    assert out.strip().endswith("count: 4")
    code, out, _ = run(capsys, "poset", "ktruncate", antichain_file)
    assert out.strip() == "1*x1^2 + 2*x1*x2 + 1*x2^2"
    code, out, _ = run(capsys, "poset", "kexpand", antichain_file)
    assert out.strip() == "2*M[1,1] + 1*M[2]"


@pytest.mark.parametrize("argv", [
    ("expand", "p", "1,,2"),
    ("expand", "q", "1"),
    ("matrices", "R", "1,2", "1,1"),
    ("matrices", "Rsym", "1,2", "3"),
    ("verify", "nonsense"),
    ("frobnicate",),
    ("poset", "extensions", "/nonexistent/file"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_empty_and_bad_poset_files_exit_2(capsys, tmp_path):
    empty = tmp_path / "empty.poset"
    empty.write_text("")
    assert run(capsys, "poset", "extensions", str(empty))[0] == 2
    cyclic = tmp_path / "cyclic.poset"
    cyclic.write_text("elements: 1_1, 1_2\ncovers: 1_1<1_2; 1_2<1_1\n")
    assert run(capsys, "poset", "extensions", str(cyclic))[0] == 2


def test_caps_exit_1(capsys, tmp_path):
    big = tmp_path / "big.poset"
    big.write_text("elements: " + ", ".join(f"1_{k}" for k in range(1, 12)) + "\n")
    assert run(capsys, "poset", "extensions", str(big))[0] == 1
    assert run(capsys, "expand", "p", ",".join(["1"] * 8))[0] == 1
    assert run(capsys, "expand", "p", ",".join(["1"] * 8), "--max-degree", "8")[0] == 0
    assert run(capsys, "verify", "matrices", "9")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ppsums", "expand", "p", "1,2,1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2*M[1,2,1] + 2*M[1,3]"
