import json
import subprocess
import sys

import pytest

from netdeg.cli import main
from netdeg.formats import dumps_text, loads
from netdeg.graphs import Bigraph, net_degree
from netdeg.ops import loads_script, replay


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--kind", "bigraph", "--seq", "2,-2,3,1")
    assert code == 0 and out.strip() == "realizable"
    code, out, _ = run(capsys, "check", "--kind", "graph", "--seq", "1,1,1")
    assert code == 1 and out.strip() == "not realizable: odd sum"
    code, out, _ = run(capsys, "check", "--kind", "digraph", "--seq", "2,2,-4")
    assert code == 1 and out.startswith("not realizable: I={1,2}")
    code, out, _ = run(capsys, "--json", "check", "--kind", "digraph", "--seq", "2,2,-4")
    obj = json.loads(out)
    assert obj["realizable"] is False and obj["witness"]["I"] == [1, 2]


def test_count(capsys):
    assert run(capsys, "count", "--kind", "digraph", "--n", "3", "--what", "all")[1] == "19\n"
    assert run(capsys, "count", "--kind", "digraph", "--n", "6", "--what", "unique")[1] == "3690\n"
    assert run(capsys, "count", "--kind", "bigraph", "--n", "3")[1] == "63\n"
    code, out, _ = run(capsys, "count", "--kind", "digraph", "--n", "60", "--what", "unique")
    assert code == 0 and "e" not in out and len(out.strip()) > 60
    code, _, err = run(capsys, "--json", "count", "--kind", "bigraph", "--n", "2", "--what", "unique")
    assert code == 2 and json.loads(err)["error"] == "DomainRestricted"
    code, _, err = run(capsys, "count", "--kind", "graph", "--n", "9")
    assert code == 2 and "n <= 8" in err
    code, _, err = run(capsys, "count", "--kind", "graph", "--n", "4", "--what", "unique")
    assert code == 2


def test_realize_and_classify(capsys, tmp_path):
    path = tmp_path / "b.txt"
    code, _, _ = run(capsys, "realize", "--kind", "bigraph", "--seq", "2,-2,3,1", "--out", str(path))
    assert code == 0
    assert net_degree(loads(path.read_text())).d == (2, -2, 3, 1)
    code, out, _ = run(capsys, "--json", "realize", "--kind", "digraph", "--seq", "-1,0,1")
    assert code == 0 and json.loads(out)["kind"] == "digraph"
    code, _, err = run(capsys, "realize", "--kind", "graph", "--seq", "3,0,0")
    assert code == 1 and err
    code, out, _ = run(capsys, "classify", "--kind", "graph", "--seq", "3,1,1,1")
    assert code == 0 and "unique: yes" in out and "threshold" in out
    code, out, _ = run(capsys, "--json", "classify", "--kind", "digraph", "--seq", "-2,-1,1,2")
    obj = json.loads(out)
    assert obj["unique"] is False and obj["tight"] is False and obj["forbidden"]
    code, out, _ = run(capsys, "--json", "classify", str(path))
    assert json.loads(out)["tight_witness"]["index"] == 3
    code, out, _ = run(capsys, "classify", "--kind", "graph", "--seq", "3,3,1")
    assert code == 1


def test_transform_and_replay(capsys, tmp_path):
    a = Bigraph(4, {(1, 2): (1, 1), (2, 3): (1, 1), (3, 4): (1, 1), (1, 4): (1, 1)})
    b = Bigraph(4, {(1, 3): (1, 1), (2, 3): (1, 1), (2, 4): (1, 1), (1, 4): (1, 1)})
    pa, pb, ps = tmp_path / "a.txt", tmp_path / "b.txt", tmp_path / "s.txt"
    pa.write_text(dumps_text(a))
    pb.write_text(dumps_text(b))
    code, _, _ = run(capsys, "transform", str(pa), str(pb), "--out", str(ps))
    assert code == 0
    kind, script = loads_script(ps.read_text())
    assert replay(a, script) == b
    code, out, _ = run(capsys, "transform", str(pa), str(pb), "--replay", str(ps))
    assert code == 0 and out.startswith("replay ok")
    code, out, _ = run(capsys, "transform", str(pb), str(pa), "--replay", str(ps))
    assert code == 1
    code, out, _ = run(capsys, "--json", "transform", str(pa), str(pb))
    js = tmp_path / "s.json"
    js.write_text(out)
    code, out, _ = run(capsys, "--json", "transform", str(pa), str(pb), "--replay", str(js))
    assert code == 0 and json.loads(out)["ok"]


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--kind", "bigraph", "--n", "2")
    assert code == 0 and out.splitlines()[-1] == "count 5"
    code, out, _ = run(capsys, "--json", "oracle", "--kind", "digraph", "--n", "3", "--report", "connectivity")
    assert code == 0 and json.loads(out)["all_connected"]
    code, out, _ = run(capsys, "oracle", "--kind", "graph", "--n", "4", "--report", "tight")
    assert out.splitlines()[-1] == "count 52"
    code, _, err = run(capsys, "--json", "oracle", "--kind", "bigraph", "--n", "9")
    assert code == 2 and json.loads(err)["error"] == "BoundExceeded"


def test_deterministic(capsys):
    outs = {run(capsys, "--json", "realize", "--kind", "bigraph", "--seq", "1,-1,2,0")[1] for _ in range(3)}
    assert len(outs) == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--kind", "tree", "--n", "3"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "netdeg", "count", "--kind", "digraph", "--n", "4", "--what", "unique"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "66"
