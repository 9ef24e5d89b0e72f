import pytest

from monoqueue import cli
from monoqueue.cli import EXIT_INVALID, EXIT_IO, EXIT_OK, EXIT_VERIFY, main
from monoqueue.graph import read_dimacs

TRIANGLE_DUMP = "d 1 0\nd 2 2\nd 3 3\n"


def test_gen_path_to_stdout(capsys):
    assert main(["gen", "--path", "--n", "4", "--w", "3"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["p sp 4 3", "a 1 2 3", "a 2 3 3", "a 3 4 3"]


def test_gen_is_deterministic(tmp_path):
    first, second = tmp_path / "a.gr", tmp_path / "b.gr"
    argv = ["gen", "--random", "--n", "30", "--m", "90", "--w-max", "50", "--seed", "4"]
    assert main(argv + ["-o", str(first)]) == EXIT_OK
    assert main(argv + ["-o", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    graph = read_dimacs(first)
    assert (graph.n, graph.m) == (30, 90)


def test_gen_grid(tmp_path):
    output = tmp_path / "grid.gr"
    assert main(["gen", "--grid", "--rows", "3", "--cols", "3", "-o", str(output)]) == EXIT_OK
    assert read_dimacs(output).m == 12


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--path", "--n", "0"],
        ["gen", "--random", "--n", "5"],
        ["gen", "--grid", "--rows", "3"],
    ],
)
def test_gen_invalid(argv, capsys):
    assert main(argv) == EXIT_INVALID
    assert capsys.readouterr().err.startswith("error:")


@pytest.mark.parametrize("backend", ["dial", "mlb", "radix2", "hot", "array"])
def test_solve_dump(triangle_file, capsys, backend):
    assert main(["solve", str(triangle_file), "--backend", backend, "--verify"]) == EXIT_OK
    assert capsys.readouterr().out == TRIANGLE_DUMP


def test_solve_other_source(triangle_file, capsys):
    assert main(["solve", str(triangle_file), "--source", "2", "--backend", "radix1"]) == EXIT_OK
    assert capsys.readouterr().out == "d 1 UNREACHABLE\nd 2 0\nd 3 1\n"


def test_solve_rejects_wide_multiplier(triangle_file):
    assert main(["solve", str(triangle_file), "--backend", "mlb", "--p", "3"]) == EXIT_INVALID


def test_solve_rejects_source(triangle_file):
    assert main(["solve", str(triangle_file), "--source", "4"]) == EXIT_INVALID


def test_solve_bad_input(tmp_path):
    path = tmp_path / "bad.gr"
    path.write_text("p sp 2 1\na 1 2 x\n", encoding="utf-8")
    assert main(["solve", str(path)]) == EXIT_INVALID


def test_solve_missing_file(tmp_path):
    assert main(["solve", str(tmp_path / "absent.gr")]) == EXIT_IO


def test_solve_verification_failure(triangle_file, monkeypatch, capsys):
    monkeypatch.setattr(cli, "verify", lambda graph, source, result: ["slack at vertex 3"])
    assert main(["solve", str(triangle_file), "--verify"]) == EXIT_VERIFY
    err = capsys.readouterr().err
    assert "verification failed" in err
    assert "slack at vertex 3" in err


def test_bench_then_plot(tmp_path):
    config = tmp_path / "bench.conf"
    config.write_text(
        "instance = path n=50 w=8\ninstance = path n=50 w=64\nbackends = dial, mlb\n",
        encoding="utf-8",
    )
    table = tmp_path / "bench.csv"
    chart = tmp_path / "bench.svg"
    assert main(["bench", str(config), "--output", str(table), "--threads", "2"]) == EXIT_OK
    assert len(table.read_text(encoding="utf-8").splitlines()) == 1 + 4
    assert main(["plot", str(table), "--x", "C", "--y", "empty_scans", "--log", "-o", str(chart)]) == EXIT_OK
    assert chart.read_text(encoding="utf-8").count("<polyline") == 2


def test_plot_missing_field(tmp_path):
    table = tmp_path / "bench.csv"
    table.write_text("C,backend\n4,dial\n", encoding="utf-8")
    assert main(["plot", str(table), "--y", "wall_ns", "-o", str(tmp_path / "x.svg")]) == EXIT_INVALID


def test_bench_bad_thread_count(tmp_path):
    config = tmp_path / "bench.conf"
    config.write_text("instance = path n=5 w=1\nbackends = dial\n", encoding="utf-8")
    assert main(["bench", str(config), "--threads", "0"]) == EXIT_INVALID
