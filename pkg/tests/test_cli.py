import json
import subprocess
import sys
from pathlib import Path

import pytest

from abstract_tangles.cli import main
from abstract_tangles.fixtures import DOCS, names

INSTANCES = Path(__file__).resolve().parents[1] / "instances"


def write(tmp_path, doc, name="inst.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def fixture_path(name):
    return str(INSTANCES / f"{name}.json")


@pytest.mark.parametrize("name", names())
def test_shipped_instances_match_fixtures(name):
    assert json.loads(Path(fixture_path(name)).read_text()) == DOCS[name]


def test_search_maximal_k3(capsys):
    code, out, _ = run(capsys, "search", fixture_path("k3"), "--maximal")
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "maximal" and len(doc["tangles"]) == 3


def test_search_prefix(capsys):
    code, out, _ = run(capsys, "search", fixture_path("k3"), "--prefix", "1")
    doc = json.loads(out)
    assert code == 0 and len(doc["layers"]) == 1 and len(doc["layers"][0]) == 2
    assert run(capsys, "search", fixture_path("k3"), "--prefix", "9")[0] == 3


def test_search_duplicate_separation(tmp_path, capsys):
    doc = json.loads(json.dumps(DOCS["k3"]))
    doc["separations"].append({"left": ["1", "2"]})
    code, _, err = run(capsys, "search", write(tmp_path, doc))
    assert code == 2 and "error" in err


@pytest.mark.parametrize("mutate", [
    lambda d: d.update(separations=[{"left": ["9"]}]),
    lambda d: d.update(separations=[{"left": []}]),
    lambda d: d.update(forbidden={"kind": "magic"}),
    lambda d: d.pop("ground_set"),
])
def test_malformed_instances(tmp_path, capsys, mutate):
    doc = json.loads(json.dumps(DOCS["k3"]))
    mutate(doc)
    assert run(capsys, "search", write(tmp_path, doc))[0] == 2


def test_missing_and_invalid_files(tmp_path, capsys):
    assert run(capsys, "search", str(tmp_path / "nope.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "search", str(bad))[0] == 2


def test_allow_trivial(tmp_path, capsys):
    doc = json.loads(json.dumps(DOCS["k3"]))
    doc["separations"].append({"left": []})
    path = write(tmp_path, doc)
    assert run(capsys, "search", path)[0] == 2
    assert run(capsys, "--allow-trivial", "search", path)[0] == 0


def test_seed_duality(capsys):
    code, out, _ = run(capsys, "search", fixture_path("dual2"), "--seed-duality", "--maximal")
    doc = json.loads(out)
    assert code == 0 and doc["duality"] == "forced"
    assert doc["seed"] == [{"left": ["1"]}]
    assert doc["tangles"] == [[{"left": ["1"]}]]
    code, out, _ = run(capsys, "search", fixture_path("dual1"), "--seed-duality")
    assert code == 0 and json.loads(out)["duality"] == "stree"
    assert run(capsys, "search", fixture_path("k3"), "--seed-duality")[0] == 3


def test_duality_documents(capsys):
    code, out, _ = run(capsys, "duality", fixture_path("dual1"))
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "stree" and len(doc["nodes"]) == 2 and len(doc["edges"]) == 1
    code, out, _ = run(capsys, "duality", fixture_path("dual1"), "--emit", "dot")
    assert code == 0 and out.count("[shape=box") == 2 and out.count("->") == 1
    code, out, _ = run(capsys, "duality", fixture_path("dual2"))
    doc = json.loads(out)
    assert doc["kind"] == "forced" and len(doc["L"]) == 1


def test_duality_rejects_cover(capsys):
    assert run(capsys, "duality", fixture_path("k3"))[0] == 3


def test_duality_rejects_non_star(tmp_path, capsys):
    doc = json.loads(json.dumps(DOCS["k3"]))
    doc["forbidden"] = {"kind": "explicit", "members": [[{"left": ["1", "2"]}, {"left": ["0", "2"]}]]}
    assert run(capsys, "duality", write(tmp_path, doc))[0] == 3


def test_tot_documents(tmp_path, capsys):
    code, out, _ = run(capsys, "tot", fixture_path("k3"))
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "tot" and doc["splits"] == 0 and len(doc["nested"]) <= 3
    code, out, _ = run(capsys, "tot", fixture_path("dual2"))
    doc = json.loads(out)
    assert code == 0 and len(doc["tangles"]) == 1 and doc["nested"] == []
    code, out, _ = run(capsys, "tot", fixture_path("c4"), "--emit", "dot")
    assert code == 0 and out.startswith("graph tot {")


@pytest.mark.parametrize("name, mode", [
    ("k3", "search"), ("p3", "search"), ("c4", "search"), ("chain", "search"),
    ("dual1", "duality"), ("dual2", "duality"), ("chain", "duality"),
    ("k3", "tot"), ("c4", "tot"), ("p3", "tot"),
])
def test_verify_ok(capsys, name, mode):
    assert run(capsys, "verify", fixture_path(name), "--mode", mode)[0] == 0


@pytest.mark.parametrize("name, command", [
    ("k3", "search"), ("c4", "search"), ("dual1", "duality"), ("dual2", "duality"),
    ("chain", "duality"), ("k3", "tot"), ("c4", "tot"),
])
def test_round_trip(tmp_path, capsys, name, command):
    code, out, _ = run(capsys, command, fixture_path(name))
    assert code == 0
    cert = tmp_path / "cert.json"
    cert.write_text(out)
    mode = command
    assert run(capsys, "verify", fixture_path(name), "--mode", mode, "--certificate", str(cert))[0] == 0


def test_corrupted_tree(tmp_path, capsys):
    _, out, _ = run(capsys, "duality", fixture_path("dual1"))
    doc = json.loads(out)
    doc["nodes"][0]["star"] = [{"left": ["0"]}, {"left": ["1"]}]
    cert = write(tmp_path, doc, "cert.json")
    code, _, err = run(capsys, "verify", fixture_path("dual1"), "--mode", "duality", "--certificate", cert)
    assert code == 4 and "S-tree fails validation" in err


def test_corrupted_layers_and_tot(tmp_path, capsys):
    _, out, _ = run(capsys, "search", fixture_path("k3"))
    doc = json.loads(out)
    doc["layers"][-1].pop()
    cert = write(tmp_path, doc, "layers.json")
    assert run(capsys, "verify", fixture_path("k3"), "--mode", "search", "--certificate", cert)[0] == 4

    _, out, _ = run(capsys, "tot", fixture_path("k3"))
    doc = json.loads(out)
    pair = doc["pairs"][0]
    tangles = {t["id"]: t for t in doc["tangles"]}
    a = tangles[pair["tangles"][0]]["base"]
    b = tangles[pair["tangles"][1]]["base"]
    # point the pair at a separation both tangles orient the same way
    same = next(x for x in a if x in b)
    pair["distinguisher"] = {"left": same["left"], "right": []}
    cert = write(tmp_path, doc, "tot.json")
    assert run(capsys, "verify", fixture_path("k3"), "--mode", "tot", "--certificate", cert)[0] == 4


def test_wrong_certificate_kind(tmp_path, capsys):
    _, out, _ = run(capsys, "tot", fixture_path("k3"))
    cert = write(tmp_path, json.loads(out), "tot.json")
    assert run(capsys, "verify", fixture_path("k3"), "--mode", "search", "--certificate", cert)[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "abstract_tangles", "search", fixture_path("k3"), "--maximal"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and len(json.loads(proc.stdout)["tangles"]) == 3


@pytest.mark.parametrize("name", names())
def test_deterministic_output(capsys, name):
    commands = [["search"], ["search", "--maximal"], ["tot"], ["tot", "--emit", "dot"]]
    if DOCS[name]["forbidden"]["kind"] == "explicit":
        commands += [["duality"], ["duality", "--emit", "dot"]]
    for cmd in commands:
        first = run(capsys, cmd[0], fixture_path(name), *cmd[1:])
        second = run(capsys, cmd[0], fixture_path(name), *cmd[1:])
        assert first == second
