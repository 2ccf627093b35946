"""Command-line behaviour: output, exit codes and the json-lines schema."""

import io
import json

import numpy as np
import pytest

from lnorms.cli import build_parser, config_from_args, main
from lnorms.core.constants import ExitCodes, ModeTag

RECORD_KEYS = {"mode", "d", "value", "argmax_word", "strategy", "shape_before", "shape_after",
               "threads", "elapsed_ms"}


@pytest.fixture
def matrix_file(tmp_path):
    def write(text, name="matrix.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_worked_example(matrix_file, capsys):
    path = matrix_file("4 -7 -2\n-5 2 3\n9 -1 4\n")
    code, out, _ = run(["compute", path, "--mode", "l1", "--threads", "2"], capsys)
    assert code == ExitCodes.OK
    assert "L1 = 29" in out
    assert "strategy: +1 -1 +1" in out
    assert "threads: 2" in out


def test_compute_reports_the_reduction(matrix_file, capsys):
    path = matrix_file("# reducible\n0 0 0 0\n4 -7 2 -1\n8 -14 4 -2\n1 -3 4 4\n")
    code, out, _ = run(["compute", path], capsys)
    assert code == ExitCodes.OK
    assert "4×4 → 2×4" in out
    assert "removed zero row 0" in out


def test_compute_ld_single_row(matrix_file, capsys):
    path = matrix_file("3 -4 5 0 -1\n")
    code, out, _ = run(["compute", path, "--mode", "ld", "--d", "3", "--format", "jsonl"], capsys)
    assert code == ExitCodes.OK
    record = json.loads(out)
    assert record["value"] == 13
    assert record["mode"] == "ld" and record["d"] == 3


def test_jsonl_matches_text(matrix_file, capsys):
    path = matrix_file("1 2 -3\n-2 0 4\n5 -1 1\n2 2 2\n")
    _, text, _ = run(["compute", path, "--mode", "marg", "--threads", "1"], capsys)
    _, lines, _ = run(["compute", path, "--mode", "marg", "--threads", "1", "--format", "jsonl"], capsys)
    records = [json.loads(line) for line in lines.splitlines()]
    assert len(records) == 1
    record = records[0]
    assert set(record) == RECORD_KEYS
    assert f"Lmarg = {record['value']}" in text
    assert f"argmax word: {record['argmax_word']}" in text
    assert f"threads: {record['threads']}" in text
    assert record["shape_before"] == [4, 3]


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"4 -7 -2\n-5 2 3\n9 -1 4\n")))
    code, out, _ = run(["compute", "-", "--format", "jsonl"], capsys)
    assert code == ExitCodes.OK
    assert json.loads(out)["value"] == 29


@pytest.mark.parametrize("text,mode", [
    ("4 -7 -2\n-5 2 3\n9 -1 4\n", ["--mode", "l1"]),
    ("1 -2 0\n3 1 -1\n-2 2 5\n0 4 1\n", ["--mode", "marg"]),
    ("2 -1 3\n-3 0 1\n1 1 -4\n", ["--mode", "ld", "--d", "3"]),
])
def test_verify_matches(matrix_file, capsys, text, mode):
    code, out, _ = run(["verify", matrix_file(text)] + mode, capsys)
    assert code == ExitCodes.OK
    assert out.rstrip().splitlines()[-1] == "MATCH"
    assert "[oracle]" in out and "[iterative]" in out and "[preprocessed]" in out


def test_verify_jsonl_records(matrix_file, capsys):
    path = matrix_file("4 -7 -2\n-5 2 3\n9 -1 4\n")
    code, out, _ = run(["verify", path, "--no-preprocess", "--format", "jsonl"], capsys)
    assert code == ExitCodes.OK
    records = [json.loads(line) for line in out.splitlines()]
    assert [record["engine"] for record in records] == ["oracle", "iterative"]
    assert records[0]["value"] == records[1]["value"] == 29
    assert records[0]["argmax_word"] == records[1]["argmax_word"] == 3


def test_parse_error_exit_code(matrix_file, capsys):
    code, _, err = run(["compute", matrix_file("1 2\n3\n")], capsys)
    assert code == ExitCodes.PARSE_ERROR
    assert "line 2" in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(["compute", str(tmp_path / "absent.txt")], capsys)
    assert code == ExitCodes.PARSE_ERROR
    assert "cannot read input" in err


def test_feasibility_exit_code(matrix_file, capsys):
    rng = np.random.default_rng(7)
    rows = rng.integers(-9, 10, size=(64, 64))
    path = matrix_file("\n".join(" ".join(str(v) for v in row) for row in rows))
    code, _, err = run(["compute", path], capsys)
    assert code == ExitCodes.FEASIBILITY_ERROR
    assert "63" in err


def test_verify_respects_the_oracle_guard(matrix_file, capsys):
    path = matrix_file("\n".join(" ".join(["1", "-1"] if x % 2 else ["2", "3"]) for x in range(30)))
    code, _, err = run(["verify", path, "--no-preprocess"], capsys)
    assert code == ExitCodes.FEASIBILITY_ERROR
    assert "oracle" in err


@pytest.mark.parametrize("argv", [
    ["compute", "m.txt", "--mode", "ld"],
    ["compute", "m.txt", "--mode", "ld", "--d", "1"],
    ["compute", "m.txt", "--d", "3"],
    ["compute", "m.txt", "--threads", "0"],
    ["bench", "--min-n", "12"],
    ["bench", "--min-n", "22", "--max-n", "18"],
    ["bench", "--trials", "0"],
])
def test_invalid_configurations(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2


def test_config_defaults():
    cfg = config_from_args(build_parser().parse_args(["compute", "m.txt"]))
    assert cfg.mode is ModeTag.L1
    assert cfg.preprocess
    assert cfg.workers is None
    assert cfg.solve_mode().d == 2


def test_bench_smallest_size(tmp_path, capsys):
    code, out, _ = run(["bench", "--min-n", "14", "--max-n", "14", "--trials", "1",
                        "--format", "jsonl", "--output-dir", str(tmp_path / "scaling")], capsys)
    assert code == ExitCodes.OK
    record = json.loads(out)
    assert record["n"] == 14
    assert record["t_naive"] > 0 and record["t_iterative"] > 0
    assert "cpu" in record
    assert (tmp_path / "scaling" / "scaling.csv").exists()
    assert (tmp_path / "scaling" / "scaling_summary.txt").exists()
