import json

import pytest

from tvgraph.cli import main
from tvgraph.generators import random_uniform
from tvgraph.pointio import save_config


@pytest.fixture
def points_file(tmp_path):
    path = tmp_path / "pts.csv"
    save_config(random_uniform(6, 2, seed=1), path)
    return str(path)


def _strip_manifest(text):
    doc = json.loads(text)
    doc.pop("manifest", None)
    return doc


def test_analyze_ok(points_file, capsys, tmp_path):
    out = tmp_path / "out"
    code = main(["analyze", "--input", points_file, "-r", "2", "--output", str(out), "--dot"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["stats"]["vertices"] >= 1
    assert payload["manifest"]["command"] == "analyze"
    assert payload["manifest"]["input_sha256"]
    assert (out / "stats.json").exists()
    assert (out / "graph.json").exists()
    assert (out / "edges.csv").exists()
    assert (out / "graph.dot").exists()


def test_analyze_reproducible_data(points_file, capsys, tmp_path):
    runs = []
    exports = []
    for name in ("a", "b"):
        out = tmp_path / name
        assert main(["analyze", "--input", points_file, "-r", "2", "--output", str(out)]) == 0
        runs.append(_strip_manifest(capsys.readouterr().out))
        exports.append((out / "graph.json").read_bytes() + (out / "edges.csv").read_bytes())
    assert runs[0] == runs[1]
    assert exports[0] == exports[1]


def test_analyze_generator_spec(capsys):
    assert main(["analyze", "--gen", "regular-polygon:6", "-r", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["stats"]["components"] == 1


def test_analyze_graceful_on_tiny_input(tmp_path, capsys):
    path = tmp_path / "one.csv"
    save_config(random_uniform(1, 2, seed=0), path)
    assert main(["analyze", "--input", str(path), "-r", "2"]) == 0
    assert "vertices" in capsys.readouterr().out


def test_analyze_malformed_input_exit2(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("not a header\n1,2\n")
    assert main(["analyze", "--input", str(path), "-r", "2"]) == 2
    assert main(["analyze", "--gen", "nonsense:1", "-r", "2"]) == 2
    assert main(["analyze", "-r", "2"]) == 2


def test_analyze_cap_exit3(points_file):
    assert main(["analyze", "--input", points_file, "-r", "2", "--max-partitions", "3"]) == 3


def test_cap_env_var(points_file, monkeypatch):
    monkeypatch.setenv("TVG_MAX_PARTITIONS", "3")
    assert main(["analyze", "--input", points_file, "-r", "2"]) == 3


def test_tables(capsys):
    assert main(["tables"]) == 0
    out = capsys.readouterr().out
    assert "42525" in out
    assert "16800" in out


def test_tables_verify_and_json(tmp_path, capsys):
    target = tmp_path / "tables.json"
    assert main(["tables", "--verify", "--json", str(target)]) == 0
    doc = json.loads(target.read_text())
    assert doc["vertices"]["5"]["10"] == 42525
    assert doc["edges"]["5"]["5"] == 0
    assert doc["edges"]["4"]["8"] == 16800
    assert "verification passed" in capsys.readouterr().out


def test_nerve_census_heptagon(capsys):
    assert main(["nerve-census", "--gen", "regular-polygon:7"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["census"] == [105, 154, 28, 7, 7]
    assert payload["row_sum"] == 301


def test_nerve_census_general_r_gated(points_file):
    assert main(["nerve-census", "--input", points_file, "-r", "4"]) == 2


def test_path_identity(capsys):
    code = main(
        ["path", "--gen", "regular-polygon:6", "-r", "2", "-P", "0,1,1,0,1,1", "-Q", "0,1,1,0,1,1"]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1


def test_path_radon(capsys):
    code = main(
        ["path", "--gen", "regular-polygon:6", "-r", "2", "-P", "0,1,0,1,0,1", "-Q", "0,1,1,0,1,1"]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) >= 2
    assert all("tverberg" in line for line in lines)


def test_path_rejects_non_tverberg():
    code = main(
        ["path", "--gen", "regular-polygon:6", "-r", "2", "-P", "0,0,0,1,1,1", "-Q", "0,1,0,1,0,1"]
    )
    assert code == 2


def test_mc_reproducible(points_file, capsys, tmp_path):
    outputs = []
    logs = []
    for name in ("m1", "m2"):
        out = tmp_path / name
        code = main(
            ["mc", "--input", points_file, "-r", "2", "--trials", "40", "--seed", "5",
             "--output", str(out)]
        )
        assert code == 0
        outputs.append(_strip_manifest(capsys.readouterr().out))
        logs.append((out / "mc_trials.csv").read_bytes())
    assert outputs[0] == outputs[1]
    assert logs[0] == logs[1]
    assert outputs[0]["seed"] == 5
    assert outputs[0]["generator"] == "numpy-pcg64"
    assert "lower_bound" in outputs[0]


def test_gen_roundtrip(tmp_path, capsys):
    target = tmp_path / "gen.csv"
    assert main(["gen", "--gen", "random:n=5,d=2,seed=8", "--output", str(target)]) == 0
    assert main(["gen", "--gen", "random:n=5,d=2,seed=8"]) == 0
    stdout = capsys.readouterr().out
    assert stdout == target.read_text()
    assert stdout.startswith("# dim=2 scalar=rational")
