import json
import subprocess
import sys

import pytest

from suffixient.cli import EXIT_INPUT, EXIT_OK, EXIT_SIZE, EXIT_VERIFY, main
from suffixient.formats import from_binary


@pytest.fixture
def golden_file(tmp_path):
    p = tmp_path / "t.txt"
    p.write_bytes(b"AGCACAGCA")
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_text(capsys, golden_file):
    code, out, err = run(capsys, "build", "-i", golden_file)
    assert code == EXIT_OK
    assert out.split() == ["10", "1", "5", "7"]
    assert "chi=4" in err


def test_build_json_and_zero_based(capsys, golden_file):
    code, out, _ = run(capsys, "build", "-i", golden_file, "--output", "json", "--zero-based")
    doc = json.loads(out)
    assert doc["positions"] == [9, 0, 4, 6]
    assert doc["index_base"] == 0
    assert doc["stats"]["rowlist_max_size"] == 4


def test_build_binary(golden_file, tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "suffixient", "build", "-i", str(golden_file), "--output", "binary"],
        capture_output=True, check=True,
    )
    assert from_binary(proc.stdout) == (10, 4, [10, 1, 5, 7])


def test_build_small_and_dump(capsys, tmp_path):
    p = tmp_path / "a.txt"
    p.write_bytes(b"a")
    dump = tmp_path / "arrays.txt"
    code, out, _ = run(capsys, "build", "-i", p, "--engine", "reference", "--dump-arrays", dump)
    assert out.split() == ["2", "1"]
    assert "[SA]" in dump.read_text()


def test_fasta_and_require(capsys, tmp_path):
    fa = tmp_path / "x.fa"
    fa.write_bytes(b">r\nAGCA\nCAGCA\n")
    assert run(capsys, "build", "-i", fa, "--format", "fasta")[1].split() == ["10", "1", "5", "7"]
    req = tmp_path / "req.txt"
    req.write_bytes(b"AGCACAGCA#")
    assert run(capsys, "build", "-i", req, "--sentinel", "require")[1].split() == ["10", "1", "5", "7"]


@pytest.mark.parametrize("content", [b"", b"a\x00b"])
def test_input_errors_exit_2(capsys, tmp_path, content):
    p = tmp_path / "bad.txt"
    p.write_bytes(content)
    code, _, err = run(capsys, "build", "-i", p)
    assert code == EXIT_INPUT
    assert "error" in err


def test_missing_file_exit_2(capsys, tmp_path):
    assert run(capsys, "build", "-i", tmp_path / "nope")[0] == EXIT_INPUT


def test_verify_passes_on_golden(capsys, golden_file):
    code, out, _ = run(capsys, "verify", "-i", golden_file)
    assert code == EXIT_OK
    assert "FAIL" not in out
    for name in ("engines-agree", "suffixient", "fulll-equal", "colex-order", "contains-n", "minimum-size"):
        assert f"PASS {name}" in out


def test_verify_catches_dropped_position(capsys, golden_file, tmp_path):
    pos = tmp_path / "pos.txt"
    pos.write_text("10\n5\n7\n")
    code, out, _ = run(capsys, "verify", "-i", golden_file, "--positions", pos)
    assert code == EXIT_VERIFY
    assert "FAIL suffixient" in out


def test_verify_minimality_size_limit(capsys, tmp_path):
    p = tmp_path / "n20.txt"
    p.write_bytes(b"ACGT" * 5)
    assert run(capsys, "verify", "-i", p, "--check-min")[0] == EXIT_SIZE
    code, out, _ = run(capsys, "verify", "-i", p)
    assert code == EXIT_OK
    assert "SKIP minimum-size" in out


def test_stats(capsys, golden_file, tmp_path):
    code, out, _ = run(capsys, "stats", "-i", golden_file, "--output", "json")
    doc = json.loads(out)
    assert (doc["chi"], doc["sigma"], doc["rowlist_max_size"]) == (4, 4, 4)
    a4 = tmp_path / "a4.txt"
    a4.write_bytes(b"aaaa")
    doc = json.loads(run(capsys, "stats", "-i", a4, "--output", "json")[1])
    assert doc["stack_max_depth"] == 5 == doc["h"] + 1
    assert doc["depth_within_bound"] is True
    one = tmp_path / "a.txt"
    one.write_bytes(b"a")
    assert "chi=2" in run(capsys, "stats", "-i", one)[1]


def test_trace_command(capsys, golden_file, tmp_path):
    code, out, _ = run(capsys, "trace", "-i", golden_file)
    assert code == EXIT_OK
    assert "rowList" in out
    doc = json.loads(run(capsys, "trace", "-i", golden_file, "--output", "json")[1])
    assert [c["sa"] for c in doc[:10]] == [10, 9, 4, 6, 1, 5, 7, 2, 8, 3]
    big = tmp_path / "big.txt"
    big.write_bytes(b"ab" * 40)
    assert run(capsys, "trace", "-i", big)[0] == EXIT_SIZE
