"""Command line surface: JSON reports, DOT output, exit codes, determinism."""

import json
import os

from demtensor.cli import main

EX1 = ["--type", "A2", "--v", "1,2", "--w", "1,2,1", "--lambda", "1,1", "--mu", "1,0"]
EX2 = ["--type", "A2", "--v", "1", "--w", "1,2", "--lambda", "2,1", "--mu", "1,2"]
EX3 = ["--type", "A2", "--v", "1,2", "--w", "1,2", "--lambda", "1,1", "--mu", "1,0"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_decompose_positive_instance(capsys):
    code, out = run(capsys, "decompose", *EX1, "--oracle")
    assert code == 0
    report = json.loads(out)
    assert report["condition_holds"] is True
    assert len(report["entries"]) == 3
    assert all(entry["demazure"] for entry in report["entries"])
    got = sorted((tuple(e["witness"]), tuple(e["lambda_plus_wt"])) for e in report["entries"])
    assert got == sorted([((1, 2), (2, 1)), ((1, 2), (0, 2)), ((1,), (1, 0))])


def test_decompose_counterexample_instance(capsys):
    code, out = run(capsys, "decompose", *EX3)
    assert code == 0
    report = json.loads(out)
    assert report["condition_holds"] is False
    bad = [entry for entry in report["entries"] if not entry["demazure"]]
    assert len(bad) == 1
    assert bad[0]["size"] == 3
    assert bad[0]["lambda_plus_wt"] == [0, 2]
    witness = bad[0]["witness"]
    assert witness["violated_string_color"] in (1, 2)
    assert 0 < len(witness["inside_component"]) < len(witness["string"])


def test_decompose_is_deterministic(capsys):
    _, first = run(capsys, "decompose", *EX2)
    _, second = run(capsys, "decompose", *EX2)
    assert first == second


def test_malformed_weight_exits_one(capsys):
    code = main(["decompose", "--type", "A2", "--v", "1", "--w", "1", "--lambda", "1,0", "--mu=-1,0"])
    assert code == 1
    assert "dominant" in capsys.readouterr().err


def test_bad_type_exits_one(capsys):
    code = main(["decompose", "--type", "Q9", "--v", "", "--w", "", "--lambda", "1", "--mu", "1"])
    assert code == 1


def test_check_command(capsys):
    code, out = run(capsys, "check", *EX2)
    assert code == 0
    assert json.loads(out) == {"forward": True, "swapped": False}
    code, out = run(capsys, "check", *EX3)
    # the counterexample fails forward but holds after swapping the factors
    assert json.loads(out) == {"forward": False, "swapped": True}


def test_expand_command(capsys):
    code, out = run(capsys, "expand", *EX1)
    assert code == 0
    data = json.loads(out)
    assert data["condition_forward"] is True
    assert data["all_nonnegative"] is True
    terms = sorted((tuple(t["shape"]), tuple(t["witness"]), t["coefficient"]) for t in data["terms"])
    assert terms == sorted(
        [((2, 1), (1, 2), 1), ((0, 2), (1, 2), 1), ((1, 0), (1,), 1)]
    )


def test_graph_command(capsys):
    code, out = run(capsys, "graph", "--type", "A2", "--lambda", "1,0")
    assert code == 0
    assert out.count("->") == 2
    # three vertices, two colored edges
    assert sum(1 for line in out.splitlines() if "->" not in line and "label=" in line) == 3
    assert "[label=1]" in out and "[label=2]" in out


def test_graph_highlights_demazure_part(capsys):
    code, out = run(capsys, "graph", "--type", "A2", "--lambda", "1,0", "--w", "1")
    assert code == 0
    assert out.count("fillcolor") == 2


def test_dot_dir_written(tmp_path, capsys):
    dot_dir = str(tmp_path / "dots")
    code, _ = run(capsys, "decompose", *EX3, "--dot-dir", dot_dir, "--out", str(tmp_path / "r.json"))
    assert code == 0
    files = sorted(os.listdir(dot_dir))
    assert files == ["component_0.dot", "component_1.dot"]
    bad = (tmp_path / "dots" / "component_1.dot").read_text()
    highlighted = "fillcolor" in bad or "fillcolor" in (tmp_path / "dots" / "component_0.dot").read_text()
    assert highlighted


def test_out_file(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code, stdout = run(capsys, "decompose", *EX1, "--out", str(out_file))
    assert code == 0
    assert stdout == ""
    assert json.loads(out_file.read_text())["condition_holds"] is True


def test_verify_tiny_grid(capsys):
    code, out = run(capsys, "verify", "--grid", "A1:1")
    assert code == 0
    lines = [line for line in out.strip().splitlines()]
    assert lines and all(line.startswith("PASS") for line in lines)
