import json

import pytest

from sgprod import __version__
from sgprod.cli import generate, main, parse_signs
from sgprod.exceptions import GraphError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def files(tmp_path):
    def write(name, *argv):
        path = tmp_path / name
        assert main([*argv, "-o", str(path)]) == 0
        return str(path)

    return write


def test_gen_cycle(capsys):
    code, out, _ = run(capsys, "gen", "cycle", "4")
    assert code == 0
    assert json.loads(out) == {"n": 4, "edges": [[0, 1, 1], [0, 3, 1], [1, 2, 1], [2, 3, 1]]}


def test_gen_random_signs_are_deterministic(capsys):
    _, first, _ = run(capsys, "gen", "path", "5", "random(7)")
    _, second, _ = run(capsys, "gen", "path", "5", "random(7)")
    assert first == second
    assert len(json.loads(first)["edges"]) == 4


def test_gen_rejects_bad_signs(capsys):
    code, _, err = run(capsys, "gen", "cycle", "4", "1,1")
    assert code == 2
    assert "sgprod: error:" in err
    code, _, err = run(capsys, "gen", "cycle", "4", "1,0,1,1")
    assert code == 2
    assert "1 or -1" in err


def test_unknown_flag_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["gen", "cycle", "4", "--bogus"])
    assert info.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_invalid_option_value(capsys):
    code, _, err = run(capsys, "gen", "cycle", "4", "--edge-guard", "0")
    assert code == 2
    assert "edge_guard" in err


def test_bad_environment(capsys, monkeypatch):
    monkeypatch.setenv("SG_JOBS", "lots")
    code, _, err = run(capsys, "gen", "cycle", "4")
    assert code == 2
    assert "SG_JOBS" in err


def test_chi_and_verify(capsys, files, tmp_path):
    graph = files("c4.json", "gen", "cycle", "4", "1,1,1,-1")
    code, out, _ = run(capsys, "chi", graph)
    assert code == 0
    result = json.loads(out)
    assert result["delta"] == 2
    assert result["chi"] == 3

    witness = tmp_path / "witness.json"
    witness.write_text(json.dumps(result["witness"]))
    code, out, _ = run(capsys, "verify", graph, str(witness))
    assert code == 0
    assert json.loads(out)["valid"] is True

    broken = dict(result["witness"])
    broken["values"] = [[u, v, fu, fu] for u, v, fu, _ in broken["values"]]
    witness.write_text(json.dumps(broken))
    code, out, _ = run(capsys, "verify", graph, str(witness))
    assert code == 1
    assert json.loads(out)["violations"]


def test_verify_missing_file(capsys, files, tmp_path):
    graph = files("p3.json", "gen", "path", "3")
    code, _, err = run(capsys, "verify", graph, str(tmp_path / "missing.json"))
    assert code == 2
    assert "Cannot read" in err


def test_product_and_color(capsys, files):
    path = files("p3.json", "gen", "path", "3", "1,-1")
    cycle = files("c4.json", "gen", "cycle", "4", "1,1,1,-1")
    product = files("prod.json", "product", "cartesian", path, cycle)
    code, out, _ = run(capsys, "color", product, "--verify")
    assert code == 0
    outcome = json.loads(out)
    assert outcome["claim"] == "delta"
    assert outcome["delta"] == 4
    assert outcome["certificate"] == ["path-cycle-decomposition"]


def test_color_with_wrong_method(capsys, files):
    path = files("p3.json", "gen", "path", "3")
    product = files("prod.json", "product", "tensor", path, path)
    code, _, _ = run(capsys, "color", product, "--method", "corona")
    assert code == 2


def test_corona_links(capsys, files):
    cycle = files("c3.json", "gen", "cycle", "3")
    edge = files("p2.json", "gen", "path", "2")
    code, out, _ = run(capsys, "product", "corona", cycle, edge, "--links", "1,1,1,1,1,1")
    assert code == 0
    assert json.loads(out)["kind"] == "corona"
    code, _, _ = run(capsys, "product", "corona", cycle, edge, "--links", "1,1")
    assert code == 2
    code, _, err = run(capsys, "product", "corona", cycle, edge, "--links", "1,1,2,1,1,1")
    assert code == 2
    assert "1 or -1" in err


def test_class_ratio(capsys, files):
    cycle = files("c4.json", "gen", "cycle", "4")
    code, out, _ = run(capsys, "class-ratio", "--graph", cycle, "--strategy", "full")
    assert code == 0
    assert json.loads(out)["ratio"] == "1/2"

    code, out, _ = run(capsys, "class-ratio", "--graph", cycle)
    assert json.loads(out)["total"] == 2

    code, out, _ = run(capsys, "class-ratio", "--strategy", "product-induced", "--cycles", "4", "3")
    assert code == 0
    assert json.loads(out)["ratio"] == "1/2"


def test_class_ratio_needs_input(capsys):
    code, _, _ = run(capsys, "class-ratio", "--strategy", "product-induced")
    assert code == 2
    code, _, _ = run(capsys, "class-ratio")
    assert code == 2


def test_class_ratio_guard_is_a_failure(capsys, files):
    complete = files("k5.json", "gen", "complete", "5")
    code, _, err = run(capsys, "class-ratio", "--graph", complete, "--coset-guard", "3")
    assert code == 1
    assert "guard" in err


def test_class_ratio_resume(capsys, files, tmp_path):
    cycle = files("c5.json", "gen", "cycle", "5")
    state = str(tmp_path / "state.json")
    argv = ["class-ratio", "--graph", cycle, "--strategy", "full", "--chunk", "8", "--resume", state]
    code, out, _ = run(capsys, *argv, "--limit", "16")
    assert json.loads(out)["complete"] is False
    code, out, _ = run(capsys, *argv)
    report = json.loads(out)
    assert report["complete"] is True
    assert report["total"] == 32
    assert report["ratio"] == "1/2"


def test_switch(capsys, files, tmp_path):
    cycle = files("c4.json", "gen", "cycle", "4", "1,-1,-1,1")
    code, out, _ = run(capsys, "switch", cycle, "--to-positive")
    assert code == 0
    assert all(s == 1 for _, _, s in json.loads(out)["edges"])

    code, out, _ = run(capsys, "switch", cycle, "0")
    assert [s for _, _, s in json.loads(out)["edges"]] == [-1, -1, -1, -1]

    code, _, _ = run(capsys, "switch", cycle, "--to", "1,1,1,-1")
    assert code == 2


def test_switch_with_coloring(capsys, files, tmp_path):
    cycle = files("c4.json", "gen", "cycle", "4", "1,-1,-1,1")
    _, out, _ = run(capsys, "chi", cycle)
    coloring = tmp_path / "c.json"
    coloring.write_text(json.dumps(json.loads(out)["witness"]))
    switched_graph = tmp_path / "s.json"
    switched_coloring = tmp_path / "sc.json"
    code = main(
        [
            "switch",
            cycle,
            "1",
            "2",
            "--coloring",
            str(coloring),
            "--coloring-out",
            str(switched_coloring),
            "-o",
            str(switched_graph),
        ]
    )
    assert code == 0
    assert main(["verify", str(switched_graph), str(switched_coloring)]) == 0


def test_reproduce_with_low_guard(capsys, tmp_path):
    output = tmp_path / "report.json"
    code = main(["reproduce", "cycle-ratios", "--coset-guard", "1", "-o", str(output)])
    assert code == 1
    report = json.loads(output.read_text())
    assert report["table"] == "cycle-ratios"
    statuses = [row["status"] for row in report["rows"]]
    assert statuses.count("skipped") == 3
    assert statuses.count("passed") == 3


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("all-plus", [1, 1, 1]),
        ("all-minus", [-1, -1, -1]),
        ("1,-1,1", [1, -1, 1]),
        ("+,-,+", [1, -1, 1]),
        ("[1, -1, -1]", [1, -1, -1]),
    ],
)
def test_parse_signs(spec, expected):
    assert parse_signs(spec, 3) == expected


def test_parse_signs_random():
    assert parse_signs("random(4)", 6) == parse_signs("random(4)", 6)
    assert parse_signs("random", 6, seed=4) == parse_signs("random(4)", 6)


@pytest.mark.parametrize("spec", ["1,1", "some", "1,x,1", "1,2,1", "1,0,1", "[1, -3, 1]"])
def test_parse_signs_errors(spec):
    with pytest.raises(GraphError):
        parse_signs(spec, 3)


def test_generate_tree_uses_seed():
    assert generate("tree", 8, seed=2) == generate("tree", 8, seed=2)
    with pytest.raises(GraphError):
        generate("wheel", 5)
