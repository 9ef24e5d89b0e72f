import csv

import pytest

from monoqueue.bench import (
    THREADS_ENV,
    build_instance,
    check_rows,
    load_bench_config,
    parse_bench_config,
    pick_source,
    resolve_threads,
    run_bench,
    write_csv,
)
from monoqueue.exceptions import ConfigurationError, ParseError, ValidationError, VerificationError
from monoqueue.models import BENCH_HEADER, Backend, BenchConfig, InstanceSpec

EXAMPLE = """
# two instances, three backends
instance = path n=2000 w=64
instance = random n=200 m=2000 w_max=16 seed=7
backends = dial, mlb, hot
k = 2, 3
t = default, 4
p = 1, min
repetitions = 2
output = bench.csv
"""

SMALL = """
instance = grid rows=6 cols=7 w_max=20 seed=1
instance = random n=40 m=160 w_max=9 seed=2
backends = dial, radix1, radix2
delta = 2, 4
source = random
repetitions = 1
threads = 2
verify = true
"""


def test_parse_example():
    config = parse_bench_config(EXAMPLE)
    assert [spec.name for spec in config.instances] == [
        "path-n2000-w64",
        "random-m2000-n200-seed7-w_max16",
    ]
    assert len(config.backends) == 1 + 4 + 8
    assert [spec.label for spec in config.backends[:3]] == ["dial", "mlb:k=2:p=1", "mlb:k=2:p=min"]
    assert config.repetitions == 2
    assert config.source == 1
    assert config.verify is False


@pytest.mark.parametrize(
    "text, error",
    [
        ("instance = path n=4 w=1\nbackends = dial\nbogus = 1\n", ParseError),
        ("instance = path n=4 w=1\nbackends = dial\njust words\n", ParseError),
        ("instance = path n=four w=1\nbackends = dial\n", ParseError),
        ("instance = torus n=4\nbackends = dial\n", ParseError),
        ("instance = path n=4 w=1\nbackends = fibonacci\n", ConfigurationError),
        ("instance = path n=4 w=1\nbackends = mlb\nk = two\n", ConfigurationError),
        ("instance = path n=4 w=1\nbackends = dial\nverify = maybe\n", ConfigurationError),
        ("instance = path n=4 w=1\n", ValidationError),
        ("backends = dial\n", ValidationError),
        ("instance = path n=4 w=1\nbackends = dial\nrepetitions = 0\n", ValidationError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_bench_config(text)


def test_parse_error_line_number():
    with pytest.raises(ParseError) as info:
        parse_bench_config("\n# note\ninstance = path n=4 w=1\nnope\n")
    assert info.value.line_number == 4


def test_file_instance_resolves_against_config(tmp_path, triangle_file):
    config_path = tmp_path / "bench.conf"
    config_path.write_text("instance = file path=triangle.gr\nbackends = dial\n", encoding="utf-8")
    config = load_bench_config(config_path)
    assert config.instances[0].params["path"] == str(triangle_file)
    assert build_instance(config.instances[0]).m == 3


def test_build_instance_rejects_unknown_parameter():
    with pytest.raises(ConfigurationError):
        build_instance(InstanceSpec("path", {"n": 4, "w": 1, "colour": 3}))


def test_pick_source():
    graph = build_instance(InstanceSpec("path", {"n": 5, "w": 1}))
    assert pick_source(BenchConfig(source=3), graph, 0) == 2
    with pytest.raises(ConfigurationError):
        pick_source(BenchConfig(source=6), graph, 0)
    chosen = pick_source(BenchConfig(source="random"), graph, 4)
    assert 0 <= chosen < 5
    assert chosen == pick_source(BenchConfig(source="random"), graph, 4)


def test_run_small_matrix():
    config = parse_bench_config(SMALL)
    rows = run_bench(config, threads=2)
    assert len(rows) == 2 * (1 + 1 + 2)
    assert [row.backend for row in rows[:4]] == [
        Backend.DIAL,
        Backend.RADIX1,
        Backend.RADIX2,
        Backend.RADIX2,
    ]
    assert [row.delta for row in rows[2:4]] == [2, 4]
    for instance in {row.instance for row in rows}:
        assert len({row.dist_checksum for row in rows if row.instance == instance}) == 1
    for row in rows:
        assert row.counters.inserts <= row.n
        assert row.budget_violations() == []


def test_matrix_counts_every_repetition():
    config = parse_bench_config(
        "instance = path n=30 w=5\ninstance = grid rows=4 cols=4\n"
        "backends = mlb, hot\nk = 2\nt = default, 1, 6\np = 1, min\nrepetitions = 1\n"
    )
    rows = run_bench(config)
    assert len(rows) == 2 * (2 + 3 * 2)
    wide = [row for row in rows if row.instance.startswith("path") and row.p == 5]
    assert len(wide) == 4
    assert {row.t for row in rows if row.backend == Backend.HOT and row.instance.startswith("grid")} == {
        1,
        4,
        6,
    }


def test_threads_from_environment(monkeypatch):
    config = parse_bench_config("instance = path n=4 w=1\nbackends = dial\nthreads = 3\n")
    monkeypatch.delenv(THREADS_ENV, raising=False)
    assert resolve_threads(config) == 3
    monkeypatch.setenv(THREADS_ENV, "5")
    assert resolve_threads(config) == 5
    monkeypatch.setenv(THREADS_ENV, "zero")
    with pytest.raises(ConfigurationError):
        resolve_threads(config)


def test_check_rows_flags_disagreement():
    rows = run_bench(parse_bench_config("instance = path n=20 w=3\nbackends = dial, radix1\n"))
    check_rows(rows)
    rows[1].dist_checksum = "0" * 16
    with pytest.raises(VerificationError) as info:
        check_rows(rows)
    assert "disagree" in info.value.violations[0]


def test_check_rows_flags_budget():
    rows = run_bench(parse_bench_config("instance = path n=20 w=3\nbackends = dial\n"))
    rows[0].counters.extracts = 21
    with pytest.raises(VerificationError):
        check_rows(rows)


def test_write_csv(tmp_path):
    rows = run_bench(parse_bench_config("instance = path n=20 w=3\nbackends = dial, mlb\n"))
    path = tmp_path / "out" / "bench.csv"
    write_csv(rows, path)
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        assert reader.fieldnames == BENCH_HEADER
        records = list(reader)
    assert [r["backend"] for r in records] == ["dial", "mlb"]
    assert records[0]["k"] == ""
    assert records[1]["k"] == "2"
    assert records[0]["extracts"] == "20"
    assert records[0]["dist_checksum"] == records[1]["dist_checksum"]
