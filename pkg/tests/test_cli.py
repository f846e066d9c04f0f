"""CLI parsing, dispatch, output formats, exit codes, and doc examples."""

import json
import pathlib
import shlex
import shutil
import subprocess

import pytest

from collatz_lab import cli, verify
from collatz_lab.cli import main, parse_cli

ROOT = pathlib.Path(__file__).resolve().parent.parent

# every command shown in README.md; the docs test executes each one
README_COMMANDS = [
    "collatz-lab trace --kind A --start 7 --budget 100",
    "collatz-lab trace --kind U --start 20 --budget 100 --format csv",
    "collatz-lab trace --kind G --start 7 --param-a 3 --param-b 1 --budget 100 --format json",
    "collatz-lab verify --theorem covering --lo 1 --hi 10000 --budget 100000 --workers 4",
    "collatz-lab verify --theorem u-residues --lo 2 --hi 20000",
    "collatz-lab verify --theorem conjecture-apt --lo 1 --hi 5000 --format json",
    "collatz-lab tree --candidates 40 --depth 12 --format dot",
    "collatz-lab stats --lo 1 --hi 100 --format csv",
    "collatz-lab oeis-check --bfile tests/data/b001511.txt --generator ruler --count 10000",
]


# --- parsing ------------------------------------------------------------------


def test_parse_trace_defaults():
    config = parse_cli(["trace", "--kind", "A", "--start", "7"])
    assert config.command == "trace"
    assert config.kind == "A"
    assert config.start == 7
    assert config.budget == verify.DEFAULT_BUDGET
    assert config.fmt == "text"
    assert config.output is None
    assert config.workers == 1


def test_parse_verify_defaults():
    config = parse_cli(["verify", "--theorem", "p3n", "--lo", "0", "--hi", "9"])
    assert config.theorem == "p3n"
    assert (config.lo, config.hi) == (0, 9)
    assert config.cap == verify.DEFAULT_VIOLATION_CAP
    assert config.workers == 1


def test_parse_tree_and_oeis_defaults():
    tree = parse_cli(["tree"])
    assert (tree.candidates, tree.depth) == (100, 16)
    oeis = parse_cli(["oeis-check", "--bfile", "x", "--generator", "ruler"])
    assert oeis.count == 10_000


@pytest.mark.parametrize(
    "argv",
    [
        ["trace", "--kind", "A", "--start", "7", "--format", "dot"],
        ["tree", "--format", "csv"],
        ["stats", "--lo", "1", "--hi", "5", "--format", "dot"],
        ["verify", "--theorem", "p3n", "--lo", "0", "--hi", "9", "--format", "dot"],
    ],
)
def test_format_rejected_per_command(argv):
    with pytest.raises(SystemExit) as exc:
        parse_cli(argv)
    assert exc.value.code == 2


def test_workers_env_override(monkeypatch):
    monkeypatch.setenv("COLLATZ_LAB_WORKERS", "6")
    config = parse_cli(
        ["verify", "--theorem", "p3n", "--lo", "0", "--hi", "9", "--workers", "2"]
    )
    assert config.workers == 6


@pytest.mark.parametrize("value", ["abc", "0", "-1"])
def test_workers_env_invalid(monkeypatch, value):
    monkeypatch.setenv("COLLATZ_LAB_WORKERS", value)
    with pytest.raises(SystemExit) as exc:
        parse_cli(["verify", "--theorem", "p3n", "--lo", "0", "--hi", "9"])
    assert exc.value.code == 2


def test_main_usage_errors_exit_two():
    assert main([]) == 2
    assert main(["bogus"]) == 2
    assert main(["trace", "--kind", "Q", "--start", "1"]) == 2


# --- trace --------------------------------------------------------------------


def test_trace_csv_exact(capsys):
    assert main(["trace", "--kind", "U", "--start", "20",
                 "--budget", "100", "--format", "csv"]) == 0
    assert capsys.readouterr().out == "step,value\n0,20\n1,8\n2,2\n"


def test_trace_json_decimal_strings(capsys):
    assert main(["trace", "--kind", "A", "--start", "7", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["elements"] == ["7", "26", "13", "20", "5", "8", "1"]
    assert payload["stopping_time"] == "6"
    assert payload["outcome"] == "reached-target"
    assert payload["start"] == "7"


def test_trace_text(capsys):
    assert main(["trace", "--kind", "A", "--start", "7"]) == 0
    out = capsys.readouterr().out
    assert "kind A from 7: reached-target" in out
    assert "stopping time: 6" in out


def test_trace_domain_error_exits_two(capsys):
    assert main(["trace", "--kind", "C", "--start", "0"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_trace_generalized_requires_params(capsys):
    assert main(["trace", "--kind", "G", "--start", "7"]) == 2
    assert "--param-a" in capsys.readouterr().err
    assert main(["trace", "--kind", "H", "--start", "7",
                 "--param-a", "3", "--param-b", "1"]) == 0


# --- verify -------------------------------------------------------------------


def test_verify_clean_range(capsys):
    assert main(["verify", "--theorem", "p3n", "--lo", "0", "--hi", "2000"]) == 0
    captured = capsys.readouterr()
    assert "p3n over [0, 2000]: OK" in captured.out
    assert "checked 2001" in captured.err   # progress goes to stderr


def test_verify_u_residues_accepts_multiples_of_six(capsys):
    assert main(["verify", "--theorem", "u-residues", "--lo", "2", "--hi", "2000"]) == 0
    assert "violations 0" in capsys.readouterr().err


def _bad_span(lo, hi, budget):
    return hi - lo + 1, [(n, "synthetic") for n in range(lo, hi + 1)], []


def test_verify_violations_exit_one(monkeypatch, capsys):
    monkeypatch.setitem(
        verify.CHECKERS, "covering", verify.CheckerSpec(_bad_span, 1)
    )
    assert main(["verify", "--theorem", "covering", "--lo", "1", "--hi", "5"]) == 1
    assert "VIOLATIONS" in capsys.readouterr().out


def test_observational_violations_keep_exit_zero(monkeypatch, capsys):
    monkeypatch.setitem(
        verify.CHECKERS,
        "u-residues-odd-starts",
        verify.CheckerSpec(_bad_span, 1, observational=True),
    )
    assert main(["verify", "--theorem", "u-residues-odd-starts",
                 "--lo", "1", "--hi", "5"]) == 0
    assert "observational" in capsys.readouterr().out


def test_verify_bad_range_exits_two(capsys):
    assert main(["verify", "--theorem", "p3n", "--lo", "9", "--hi", "0"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_max_violations_caps_listing(monkeypatch, capsys):
    monkeypatch.setitem(
        verify.CHECKERS, "covering", verify.CheckerSpec(_bad_span, 1)
    )
    assert main(["verify", "--theorem", "covering", "--lo", "1", "--hi", "50",
                 "--max-violations", "3", "--format", "csv"]) == 1
    out = capsys.readouterr().out
    assert out == "input,detail\n1,synthetic\n2,synthetic\n3,synthetic\n"


# --- tree ---------------------------------------------------------------------


def test_tree_dot_output(capsys):
    assert main(["tree", "--candidates", "20", "--depth", "12",
                 "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph reverse_tree {")
    assert "  7 -> 13;" in out
    assert "  1 -> 1 [style=dashed, color=gray];" in out
    assert "style=dotted" in out   # orphans are drawn detached


def test_tree_json_output(capsys):
    assert main(["tree", "--candidates", "12", "--depth", "8",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["root"] == {"w": "1", "z": "2"}
    assert payload["nodes"][0]["children"] == ["1", "5"]


# --- stats --------------------------------------------------------------------


def test_stats_csv_exact(capsys):
    assert main(["stats", "--lo", "1", "--hi", "5", "--format", "csv"]) == 0
    assert capsys.readouterr().out == (
        "n,c_len,t_len,a_len,exhausted\n"
        "1,1,1,1,false\n"
        "2,2,2,2,false\n"
        "3,8,6,3,false\n"
        "4,3,3,2,false\n"
        "5,6,5,3,false\n"
    )


def test_stats_exhausted_row_leaves_blanks(capsys):
    assert main(["stats", "--lo", "7", "--hi", "7", "--budget", "3",
                 "--format", "csv"]) == 0
    assert capsys.readouterr().out == (
        "n,c_len,t_len,a_len,exhausted\n7,,,,true\n"
    )


# --- oeis-check ---------------------------------------------------------------


def test_oeis_check_fixture(capsys, data_dir):
    bfile = str(data_dir / "b025480.txt")
    assert main(["oeis-check", "--bfile", bfile, "--generator", "interleave_p",
                 "--count", "1000"]) == 0
    assert "oeis-A025480-interleave_p" in capsys.readouterr().out


def test_oeis_check_divergent_file_exits_one(tmp_path):
    bad = tmp_path / "b.txt"
    bad.write_text("1 1\n2 2\n3 7\n")
    assert main(["oeis-check", "--bfile", str(bad), "--generator", "ruler",
                 "--count", "3"]) == 1


def test_oeis_check_missing_file_exits_two(capsys):
    assert main(["oeis-check", "--bfile", "/no/such/file",
                 "--generator", "ruler"]) == 2
    assert "error:" in capsys.readouterr().err


def test_oeis_check_malformed_file_exits_two(tmp_path, capsys):
    bad = tmp_path / "b.txt"
    bad.write_text("1 one\n")
    assert main(["oeis-check", "--bfile", str(bad), "--generator", "ruler",
                 "--count", "1"]) == 2
    assert "line 1" in capsys.readouterr().err


# --- sinks and determinism ------------------------------------------------------


def test_output_file_matches_stdout(tmp_path, capsys):
    argv = ["trace", "--kind", "A", "--start", "27", "--format", "json"]
    assert main(argv) == 0
    stdout_bytes = capsys.readouterr().out
    out_file = tmp_path / "trace.json"
    assert main(argv + ["--output", str(out_file)]) == 0
    assert capsys.readouterr().out == ""
    assert out_file.read_text() == stdout_bytes


def test_unwritable_sink_exits_two(tmp_path, capsys):
    assert main(["trace", "--kind", "A", "--start", "7",
                 "--output", str(tmp_path)]) == 2
    assert "cannot write output" in capsys.readouterr().err


@pytest.mark.parametrize("fmt", ["json", "text", "csv"])
def test_verify_bytes_identical_across_worker_counts(tmp_path, fmt):
    files = []
    for workers in ("1", "8"):
        path = tmp_path / f"report-{workers}.{fmt}"
        argv = ["verify", "--theorem", "covering", "--lo", "1", "--hi", "500",
                "--workers", workers, "--format", fmt, "--output", str(path)]
        assert main(argv) == 0
        files.append(path)
    assert files[0].read_bytes() == files[1].read_bytes()


def test_stats_bytes_identical_across_worker_counts(tmp_path, monkeypatch):
    paths = []
    for workers in ("1", "6"):
        monkeypatch.setenv("COLLATZ_LAB_WORKERS", workers)
        path = tmp_path / f"stats-{workers}.csv"
        assert main(["stats", "--lo", "1", "--hi", "300", "--format", "csv",
                     "--output", str(path)]) == 0
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


# --- documentation examples -----------------------------------------------------


def test_readme_lists_every_command():
    readme = (ROOT / "README.md").read_text()
    for command in README_COMMANDS:
        assert command in readme, f"README missing: {command}"


@pytest.mark.parametrize("command", README_COMMANDS, ids=range(len(README_COMMANDS)))
def test_readme_commands_run_clean(command, monkeypatch):
    monkeypatch.chdir(ROOT)
    argv = shlex.split(command)[1:]
    assert main(argv) == 0


def test_console_script_entry_point():
    exe = shutil.which("collatz-lab")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run(
        [exe, "trace", "--kind", "U", "--start", "20", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "step,value\n0,20\n1,8\n2,2\n"
