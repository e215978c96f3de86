from netctrl.cli import main
from netctrl.edgelist import dumps, loads, read_edge_list
from netctrl.graph import DirectedGraph


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, name, n, edges):
    g = DirectedGraph(n)
    for u, v in edges:
        g.add_edge(u, v)
    path = tmp_path / name
    path.write_text(dumps(g))
    return path


def test_generate_writes_edge_list(tmp_path, capsys):
    out = tmp_path / "er.tsv"
    code, _, _ = run(
        ["generate", "--model", "ER", "--n", "50", "--k", "4", "--seed", "9",
         "--output", str(out)],
        capsys,
    )
    assert code == 0
    g = read_edge_list(out)
    assert g.n == 50 and g.edge_count == 100


def test_generate_deterministic_stdout(capsys):
    code1, out1, _ = run(["generate", "--model", "SF", "--n", "30", "--k", "3",
                          "--gamma", "4", "--seed", "2"], capsys)
    code2, out2, _ = run(["generate", "--model", "SF", "--n", "30", "--k", "3",
                          "--gamma", "4", "--seed", "2"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert loads(out1).edge_count == 45


def test_generate_infeasible_is_data_error(capsys):
    code, _, err = run(["generate", "--model", "ER", "--n", "3", "--k", "10"], capsys)
    assert code == 2
    assert "exceeds" in err


def test_analyze_key_value_output(tmp_path, capsys):
    path = write_graph(tmp_path, "p.tsv", 3, [(0, 1), (1, 2)])
    code, out, _ = run(["analyze", str(path)], capsys)
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert kv["N"] == "3"
    assert kv["L"] == "2"
    assert kv["n_driver"] == "1"
    assert kv["n_d"] == "0.333333"
    assert kv["H"] == "0.166667"  # degrees (1,2,1): double sum 4 over 2*9*(4/3)
    assert kv["r_in_in"] == ""  # undefined on this graph


def test_analyze_csv_row(tmp_path, capsys):
    path = write_graph(tmp_path, "p.tsv", 3, [(0, 1), (1, 2)])
    code, out, _ = run(["analyze", str(path), "--csv"], capsys)
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.split(",")[:5] == ["N", "L", "k_avg", "n_driver", "n_d"]
    assert row.split(",")[0] == "3"


def test_classify_output(tmp_path, capsys):
    path = write_graph(tmp_path, "t.tsv", 3, [(0, 1), (1, 2), (0, 2)])
    code, out, _ = run(["classify", str(path)], capsys)
    assert code == 0
    assert out.splitlines() == [
        "0\t1\tcritical",
        "0\t2\tredundant",
        "1\t2\tcritical",
    ]


def test_rewire_roundtrip(tmp_path, capsys):
    path = write_graph(tmp_path, "t.tsv", 3, [(0, 1), (1, 2), (0, 2)])
    out_path = tmp_path / "rewired.tsv"
    report_path = tmp_path / "report.csv"
    code, _, err = run(
        ["rewire", str(path), "--method", "regular", "--output", str(out_path),
         "--report", str(report_path)],
        capsys,
    )
    assert code == 0
    rewired = read_edge_list(out_path)
    assert rewired.edge_count == 3
    lines = report_path.read_text().splitlines()
    assert lines[0] == "iteration,deleted_u,deleted_v,added_u,added_v,n_driver"
    assert lines[1] == "0,0,2,2,0,1"
    assert "termination=no-redundant-links" in err


def test_rewire_quiet_suppresses_summary(tmp_path, capsys):
    path = write_graph(tmp_path, "t.tsv", 3, [(0, 1), (1, 2), (0, 2)])
    code, _, err = run(
        ["rewire", str(path), "--method", "random", "--seed", "4", "--quiet"],
        capsys,
    )
    assert code == 0
    assert err == ""


def test_verify_output(tmp_path, capsys):
    path = write_graph(tmp_path, "p.tsv", 3, [(0, 1), (1, 2)])
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 0
    assert out.strip() == "controllable=true m=1 rank=3"


def test_sweep_csv(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    args = ["sweep", "--models", "ER", "--n-list", "60", "--k-list", "2,3",
            "--methods", "original", "--replicates", "2", "--seed", "3",
            "--output", str(out_path)]
    assert run(args, capsys)[0] == 0
    text1 = out_path.read_text()
    assert run(args, capsys)[0] == 0
    assert out_path.read_text() == text1  # byte-identical rerun
    lines = text1.strip().splitlines()
    assert lines[0].startswith("model,n,k_target,k_realized,gamma,method")
    assert len(lines) == 5


def test_sweep_replay_single_record(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    run(["sweep", "--models", "ER", "--n-list", "60", "--k-list", "2",
         "--methods", "regular", "--replicates", "1", "--seed", "3",
         "--output", str(out_path)], capsys)
    row = out_path.read_text().strip().splitlines()[1]
    code, out, _ = run(["sweep", "--replay", "ER,60,2,,regular,0", "--seed", "3"], capsys)
    assert code == 0
    assert out.strip().splitlines()[1] == row


def test_usage_errors_exit_one(capsys):
    assert run(["figure", "fig9"], capsys)[0] == 1
    assert run(["bogus-command"], capsys)[0] == 1
    assert run(["generate", "--model", "XX", "--n", "5", "--k", "2"], capsys)[0] == 1
    assert run(["sweep", "--replay", "not-enough-fields"], capsys)[0] == 1
    assert run(["sweep", "--models", "SF", "--n-list", "20", "--k-list", "2",
                "--methods", "original"], capsys)[0] == 1  # SF without gamma


def test_data_errors_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.tsv"
    bad.write_text("# nodes=3\n0\t0\n")
    assert run(["analyze", str(bad)], capsys)[0] == 2
    assert run(["classify", str(tmp_path / "missing.tsv")], capsys)[0] == 2
