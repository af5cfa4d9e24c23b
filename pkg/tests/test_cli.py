import csv
import io
import json

import pytest

from cli.app import build_parser, run_app
from cli.constants import EXIT_OK, EXIT_PARSE, EXIT_USAGE, EXIT_VERIFY_FAILED
from core.instance_io import read_instance

TRIANGLE = (
    '{"dim":2,"format":"onecenter-instance","kind":"points","metadata":{},"metric":"l1","n":3,"version":1}\n'
    "[0,0]\n[4,0]\n[0,4]\n"
)


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.jsonl"
    path.write_text(TRIANGLE, encoding="utf-8")
    return path


def test_solve_prints_one_json_record(triangle_file, capsys):
    assert run_app(["solve", str(triangle_file)]) == EXIT_OK
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 1
    record = json.loads(out[0])
    assert record["index"] == 0
    assert record["value"] == 4
    assert record["algorithm"] == "l1-fast"


def test_solve_to_file(triangle_file, tmp_path, capsys):
    target = tmp_path / "result.json"
    assert run_app(["solve", str(triangle_file), "--objective", "diameter", "-o", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["pair"] == [1, 2]


def test_incompatible_algorithm_is_a_usage_error(triangle_file, capsys):
    assert run_app(["solve", str(triangle_file), "--algo", "ulam-approx"]) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_bad_instance_exits_with_parse_code(tmp_path):
    path = tmp_path / "broken.jsonl"
    path.write_text("{not json\n", encoding="utf-8")
    assert run_app(["solve", str(path)]) == EXIT_PARSE
    assert run_app(["solve", str(tmp_path / "missing.jsonl")]) == EXIT_PARSE


def test_unknown_option_exits_with_usage():
    with pytest.raises(SystemExit) as info:
        run_app(["solve"])
    assert info.value.code == EXIT_USAGE


def test_gen_is_reproducible(tmp_path):
    first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    argv = ["gen", "--gadget", "hsc-lp", "--n", "3", "--m", "4", "--mode", "planted-yes", "--seed", "7"]
    assert run_app(argv + ["-o", str(first)]) == EXIT_OK
    assert run_app(argv + ["-o", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    instance = read_instance(first)
    assert instance.metadata["thresholds"] == [12, 13]
    assert instance.metadata["seed"] == 7


def test_gen_then_verify(tmp_path, capsys):
    files = []
    for seed in (1, 2):
        path = tmp_path / f"perms{seed}.jsonl"
        run_app(["gen", "--gadget", "random-perms", "--n", "6", "--d", "16", "--moves", "2",
                 "--seed", str(seed), "-o", str(path)])
        files.append(str(path))
    capsys.readouterr()
    assert run_app(["verify", *files, "--eps", "0.5"]) == EXIT_OK
    captured = capsys.readouterr()
    reports = [json.loads(line) for line in captured.out.splitlines()]
    assert [r["passed"] for r in reports] == [True, True]
    assert "2/2 passed" in captured.err


def test_verify_failure_exit_code(triangle_file, monkeypatch):
    from core.solvers import CenterResult

    monkeypatch.setattr(
        "core.solve_service.l1_center",
        lambda points, threads, keep: CenterResult(index=2, radius=8, algorithm="l1-fast"),
    )
    assert run_app(["verify", str(triangle_file), "--algo", "l1-fast"]) == EXIT_VERIFY_FAILED


def test_bench_csv(capsys):
    assert run_app(["bench", "--suite", "l1-scaling", "--d", "2", "--sizes", "8", "16", "--reps", "2"]) == EXIT_OK
    captured = capsys.readouterr()
    rows = list(csv.DictReader(io.StringIO(captured.out)))
    assert len(rows) == 4
    assert {row["n"] for row in rows} == {"8", "16"}
    assert "median n=8 d=2 l1-fast" in captured.err


def test_config_file_is_applied(triangle_file, tmp_path, capsys):
    config = tmp_path / "settings.json"
    config.write_text(json.dumps({"l1_dimension_cap": 1}), encoding="utf-8")
    assert run_app(["--config", str(config), "solve", str(triangle_file)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["algorithm"] == "brute"


def test_parser_defaults():
    args = build_parser().parse_args(["solve", "x.jsonl"])
    assert args.objective == "center"
    assert args.algo == "auto"
    assert args.eps is None


@pytest.mark.parametrize("argv", [
    ["--threads", "1", "solve", "{file}"],
    ["solve", "{file}", "--threads", "1"],
    ["verify", "{file}", "--threads", "2"],
])
def test_threads_before_or_after_subcommand(triangle_file, argv, capsys):
    argv = [a.format(file=triangle_file) for a in argv]
    assert run_app(argv) == EXIT_OK
    assert capsys.readouterr().out.strip()


def test_threads_option_on_every_subcommand():
    parser = build_parser()
    assert parser.parse_args(["--threads", "3", "solve", "x.jsonl"]).threads == 3
    assert parser.parse_args(["solve", "x.jsonl", "--threads", "3"]).threads == 3
    assert parser.parse_args(["gen", "--gadget", "random-points", "--threads", "2"]).threads == 2
    assert parser.parse_args(["bench", "--suite", "l1-scaling", "--threads", "0"]).threads == 0
    assert parser.parse_args(["solve", "x.jsonl"]).threads is None


def test_log_file_written_after_run(triangle_file, tmp_path, capsys):
    log = tmp_path / "run.log"
    assert run_app(["-v", "--log-file", str(log), "solve", str(triangle_file)]) == EXIT_OK
    text = log.read_text(encoding="utf-8")
    assert "l1_center" in text
    assert "[INFO]" in text


def test_log_file_written_on_error(tmp_path, capsys):
    log = tmp_path / "run.log"
    missing = tmp_path / "missing.jsonl"
    assert run_app(["solve", str(missing), "--log-file", str(log)]) == EXIT_PARSE
    assert "ERROR" in log.read_text(encoding="utf-8")
