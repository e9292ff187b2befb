import json

import pytest

from secdiff import Graph, save_allocation, save_graph, save_sequence
from secdiff.cli import main
from secdiff.game import AttackSequence


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_evaluate_path_fixture(tmp_path, capsys):
    g = Graph(3, [(0, 1), (1, 2)])
    save_graph(g, str(tmp_path / "g.json"))
    save_allocation([0.0, 0.0, 0.0], str(tmp_path / "phi.json"))
    save_sequence(AttackSequence([0, 1, 2], 1), str(tmp_path / "seq.json"))
    code, out, err = run_cli(
        capsys, "evaluate", "-g", str(tmp_path / "g.json"),
        "--phi", str(tmp_path / "phi.json"), "--gamma", str(tmp_path / "seq.json"),
        "--T", "4",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["eta"] == 2
    assert payload["cumulative"] == [1.0, 3.0, 4.0]


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "gen", "--model", "tree", "--n", "5",
                         "--seed", "1", "--frobnicate")
    assert code == 2


def test_missing_seed_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "gen", "--model", "tree", "--n", "5")
    assert code == 2


def test_gen_tree(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "gen", "--model", "tree", "--n", "2", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 2 and doc["edges"] == [[0, 1]]


def test_gen_to_file_and_chain(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    code, _, _ = run_cli(capsys, "gen", "--model", "ba", "--n", "12", "--seed", "3",
                         "-o", gpath)
    assert code == 0
    apath = str(tmp_path / "alloc.json")
    code, _, _ = run_cli(capsys, "defend", "--strategy", "high_degree",
                         "--Phi", "24", "-g", gpath, "-o", apath)
    assert code == 0
    alloc = json.loads(open(apath).read())
    assert sum(alloc["phi"]) == pytest.approx(24.0)
    code, out, _ = run_cli(capsys, "attack", "--strategy", "greedy", "-g", gpath,
                           "--phi", apath, "--T", "12", "--seed", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["eta"] >= 1
    # replay the reported sequence through evaluate
    spath = str(tmp_path / "seq.json")
    with open(spath, "w") as fh:
        json.dump(payload["sequence"], fh)
    code, out, _ = run_cli(capsys, "evaluate", "-g", gpath, "--phi", apath,
                           "--gamma", spath, "--T", "12")
    assert code == 0
    assert json.loads(out)["eta"] == payload["eta"]


def test_defend_random_requires_seed(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    save_graph(Graph(3, [(0, 1), (1, 2)]), gpath)
    code, _, _ = run_cli(capsys, "defend", "--strategy", "random", "--Phi", "3",
                         "-g", gpath)
    assert code == 2


def test_centrality_csv(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    save_graph(Graph(3, [(0, 1), (1, 2)]), gpath)
    code, out, _ = run_cli(capsys, "centrality", "--measure", "degree", "-g", gpath)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "node,score"
    assert len(lines) == 4


def test_optimal_attack_and_domain_error(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    apath = str(tmp_path / "phi.json")
    save_graph(Graph(3, [(0, 1), (1, 2)]), gpath)
    save_allocation([0.0, 0.0, 0.0], apath)
    code, out, _ = run_cli(capsys, "optimal-attack", "-g", gpath, "--phi", apath,
                           "--T", "10", "--any-seed")
    assert code == 0
    assert json.loads(out)["eta"] == 3
    # tree method on a cyclic graph is a domain error -> exit 1
    save_graph(Graph(3, [(0, 1), (1, 2), (0, 2)]), gpath)
    code, _, err = run_cli(capsys, "optimal-attack", "-g", gpath, "--phi", apath,
                           "--T", "10", "--seed", "0", "--method", "tree")
    assert code == 1
    assert "error" in err


def test_optimal_defense_with_lp_export(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    save_graph(Graph(3, [(0, 1), (1, 2)]), gpath)
    spath = str(tmp_path / "seqs.json")
    with open(spath, "w") as fh:
        json.dump({"sequences": [{"gamma": [0, 1, 2], "seeds": 1},
                                 {"gamma": [2, 1, 0], "seeds": 1}]}, fh)
    lppath = str(tmp_path / "model.lp")
    code, out, _ = run_cli(capsys, "optimal-defense", "-g", gpath,
                           "--sequences", spath, "--Phi", "3", "--T", "4",
                           "--export-lp", lppath)
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 2
    text = open(lppath).read()
    assert "Maximize" in text and "Binaries" in text


def test_reduce_setcover(tmp_path, capsys):
    spath = str(tmp_path / "sets.json")
    with open(spath, "w") as fh:
        json.dump({"sets": [[0, 1, 2]]}, fh)
    code, out, _ = run_cli(capsys, "reduce-setcover", "--m", "3", "--sets", spath,
                           "--b", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["graph"]["n"] == 20
    assert payload["r_star"] == 19 and payload["T_star"] == 284.0


def test_experiment_command(tmp_path, capsys):
    spec = {
        "network": {"model": "er", "n": 10, "d": 4},
        "runs": 2,
        "defenders": ["uniform"],
        "attackers": ["greedy"],
        "master_seed": 5,
        "repeated_rounds": 2,
    }
    spath = str(tmp_path / "spec.json")
    with open(spath, "w") as fh:
        json.dump(spec, fh)
    out_dir = str(tmp_path / "out")
    code, _, _ = run_cli(capsys, "experiment", "--spec", spath, "-o", out_dir)
    assert code == 0
    matrix = open(out_dir + "/matrix.csv").read()
    assert matrix.startswith("defender,attacker,mean_fraction,std,runs")
