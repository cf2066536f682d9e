import pytest

from maxleaf import parse
from maxleaf.cli import main, parse_gen_spec


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_star_file(tmp_path, capsys):
    path = tmp_path / "star.edgelist"
    path.write_text("5 4\n0 1\n0 2\n0 3\n0 4\n")
    code, out, err = run_cli(capsys, "solve", str(path))
    assert code == 0
    assert err == ""
    assert out == "n=5\nm=4\nleaves=4\n"


def test_solve_reads_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("3 2\n0 1\n1 2\n"))
    code, out, err = run_cli(capsys, "solve", "-")
    assert code == 0
    assert "leaves=2" in out


def test_solve_trace_on_cycle5(capsys):
    code, out, err = run_cli(capsys, "solve", "--gen", "cycle:5", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6   # n, m, leaves plus one line per expansion step
    assert lines[:3] == ["n=5", "m=5", "leaves=2"]
    assert lines[3] == "step=1 case=W2 center=0 added=1,4"
    assert lines[4] == "step=2 case=W0 center=4 added=3"
    assert lines[5] == "step=3 case=W1 center=3 added=2"


def test_solve_edges_and_dot(capsys):
    code, out, _ = run_cli(capsys, "solve", "--gen", "cycle:5", "--edges", "--dot")
    assert code == 0
    assert "0 1\n0 4\n2 3\n3 4\n" in out
    assert "graph G {" in out
    assert "1 -- 2 [style=dashed];" in out  # the one non-tree edge


def test_solve_disconnected_exit_3(tmp_path, capsys):
    path = tmp_path / "two.edgelist"
    path.write_text("4 2\n0 1\n2 3\n")
    code, out, err = run_cli(capsys, "solve", str(path))
    assert code == 3
    assert "disconnected" in err


def test_solve_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.edgelist"
    path.write_text("2 1\n0 0\n")
    code, out, err = run_cli(capsys, "solve", str(path))
    assert code == 2
    assert "line 2" in err


def test_certify_cycle5(capsys):
    code, out, err = run_cli(capsys, "certify", "--gen", "cycle:5")
    assert code == 0
    assert out == ("n=5\nm=5\nleaves=2\nu_size=2\nk=1\n"
                   "upper_bound=3\nratio_bound=1.5000\nlemmas=pass\n")


def test_certify_star5(capsys):
    code, out, _ = run_cli(capsys, "certify", "--gen", "star:5")
    assert code == 0
    assert "u_size=0" in out and "k=1" in out
    assert "upper_bound=5" in out and "leaves=4" in out
    assert "lemmas=pass" in out


def test_certify_small_n_is_rejected(capsys, tmp_path):
    path = tmp_path / "edge.edgelist"
    path.write_text("2 1\n0 1\n")
    code, out, err = run_cli(capsys, "certify", str(path))
    assert code == 1
    assert "at least 3 vertices" in err


def test_compare_star5(capsys):
    code, out, _ = run_cli(capsys, "compare", "--gen", "star:5")
    assert code == 0
    assert out == "alg=4 opt=4 ratio=1.0000 bound_ok=true\n"


def test_oracle_command(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--gen", "complete:4", "--edges")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "opt=3"
    assert lines[1] == "trees=16"
    assert len(lines) == 5


def test_oracle_budget_exit_5(capsys):
    code, out, err = run_cli(capsys, "oracle", "--gen", "complete:6", "--budget", "10")
    assert code == 5
    assert "exhausted" in err
    assert out.startswith("opt=")


def test_gen_round_trips_through_solve(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "gen", "--gen", "grid:3x3")
    assert code == 0
    g = parse(out)
    assert g.n == 9 and g.m == 12
    path = tmp_path / "grid.edgelist"
    path.write_text(out)
    code, out2, _ = run_cli(capsys, "solve", str(path))
    assert code == 0 and "n=9" in out2


def test_gen_dimacs_format(capsys):
    code, out, _ = run_cli(capsys, "gen", "--gen", "complete:3", "--format", "dimacs")
    assert code == 0
    assert out == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_gen_requires_spec(capsys):
    code, _, err = run_cli(capsys, "gen")
    assert code == 1
    assert "--gen" in err


def test_gen_infeasible_exit_1(capsys):
    code, _, err = run_cli(capsys, "gen", "--gen", "random:5:3")
    assert code == 1
    assert "error" in err


def test_both_input_sources_rejected(tmp_path, capsys):
    path = tmp_path / "x.edgelist"
    path.write_text("2 1\n0 1\n")
    code, _, err = run_cli(capsys, "solve", str(path), "--gen", "cycle:5")
    assert code == 1
    assert "not both" in err


def test_start_policy_flag(capsys):
    code, out, _ = run_cli(capsys, "solve", "--gen", "grid:3x3",
                           "--start-policy", "maxdeg", "--trace")
    assert code == 0
    assert "center=4" in out.splitlines()[3]  # first expansion at the grid center


def test_bench_single_rung(capsys):
    code, out, _ = run_cli(capsys, "bench", "--ladder", "8:8", "--runs", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,n,median_ms,ratio"
    assert len(lines) == 2
    m, n, median_ms, ratio = lines[1].split(",")
    assert (m, n, ratio) == ("256", "64", "")
    assert float(median_ms) > 0


def test_bench_ladder_has_ratios(capsys):
    code, out, _ = run_cli(capsys, "bench", "--ladder", "8:10", "--runs", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[1].endswith(",")           # first rung: empty ratio
    assert not lines[2].endswith(",")


def test_tight_search_writes_best_instance(tmp_path, capsys):
    out_path = tmp_path / "best.edgelist"
    code, out, _ = run_cli(capsys, "tight-search", "--n-max", "8",
                           "--trials", "300", "--seed", "4", "--out", str(out_path))
    assert code == 0
    assert "alg=" in out and "opt=" in out and "ratio=" in out
    persisted = parse(out_path.read_text())
    header = out.splitlines()[0]
    assert header == f"{persisted.n} {persisted.m}"


def test_tight_search_rerun_is_identical(tmp_path, capsys):
    args = ("tight-search", "--n-max", "8", "--trials", "200", "--seed", "6",
            "--out", str(tmp_path / "t.edgelist"))
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert (code1, out1) == (code2, out2)


def test_parse_gen_spec_errors():
    with pytest.raises(ValueError, match="unknown generator family"):
        parse_gen_spec("moebius:5", 0)
    with pytest.raises(ValueError, match="parameter"):
        parse_gen_spec("cycle:5:7", 0)
    with pytest.raises(ValueError, match="bad generator"):
        parse_gen_spec("grid:3xq", 0)


def test_missing_input_exit_1(capsys):
    code, _, err = run_cli(capsys, "solve")
    assert code == 1
    assert "no input" in err


def test_unreadable_file_exit_1(capsys):
    code, _, err = run_cli(capsys, "solve", "/nonexistent/path.edgelist")
    assert code == 1
