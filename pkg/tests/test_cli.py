import json

import pytest

from perfdiv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_certify_groetzsch(capsys):
    code, out, _ = run(capsys, "certify", "--pattern", "groetzsch", "--claim", "mnpd")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] is True and data["claim"] == "MNPD"


def test_divide_none_is_success(capsys):
    code, out, _ = run(capsys, "divide", "--pattern", "c5", "--kind", "two")
    assert code == 0 and json.loads(out)["division"] == "none"
    code, out, _ = run(capsys, "divide", "--pattern", "c5", "--kind", "two", "--quiet")
    assert out.strip() == "none"


def test_divide_variants(capsys, tmp_path):
    code, out, _ = run(capsys, "divide", "--graph6", "Dhc", "--through", "4")
    assert 4 in json.loads(out)["division"]["A"]
    w = tmp_path / "w.txt"
    w.write_text("2 1 1 1 1\n")
    code, out, _ = run(capsys, "divide", "--pattern", "c5", "--weights", str(w))
    d = json.loads(out)["division"]
    assert d["kind"] == "h_perfect" and d["h"] == [2, 1, 1, 1, 1]
    code, _, err = run(capsys, "divide", "--pattern", "groetzsch", "--through", "0")
    assert code == 2 and "no perfect division" in err


def test_info_and_perfect(capsys):
    code, out, _ = run(capsys, "info", "--pattern", "groetzsch")
    data = json.loads(out)
    assert (data["n"], data["omega"], data["chi"], data["degree"]["min"]) == (11, 2, 4, 3)
    code, out, _ = run(capsys, "perfect", "--pattern", "cn", "--size", "7", "--quiet")
    assert out.strip() == "false"
    code, out, _ = run(capsys, "perfect", "--pattern", "p5", "--human")
    assert json.loads(out)["perfect"] is True and "\n  " in out


def test_file_inputs(capsys, tmp_path):
    g6 = tmp_path / "g.g6"
    g6.write_text(">>graph6<<Dhc\n")
    el = tmp_path / "g.txt"
    el.write_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    outs = [run(capsys, "info", "--file", str(p))[1] for p in (g6, el)]
    assert outs[0] == outs[1]
    code, _, err = run(capsys, "info", "--file", str(tmp_path / "missing"))
    assert code == 2


def test_certify_claims(capsys):
    for claim, want in [("pd", True), ("h2pd", True), ("2div", False), ("mn2d", True), ("mnpd", False)]:
        code, out, _ = run(capsys, "certify", "--pattern", "c5", "--claim", claim, "--quiet")
        assert code == 0 and out.strip() == str(want).lower()
    code, out, _ = run(capsys, "certify", "--pattern", "c5", "--claim", "pwd", "--weight-bound", "2")
    assert json.loads(out)["claim"] == "PWD_bounded(2)"


def test_structure(capsys):
    code, out, _ = run(capsys, "structure", "--pattern", "p4", "--find", "peeling")
    assert json.loads(out)["decomposition"]["parts"] == [[1, 2], [0, 3]]
    code, out, _ = run(capsys, "structure", "--graph6", "DQo", "--find", "cutsets", "--mode", "minimum")
    assert code == 0
    code, out, _ = run(capsys, "structure", "--pattern", "c5", "--find", "basins")
    assert json.loads(out)["result"] == []
    code, out, _ = run(capsys, "structure", "--pattern", "p4", "--find", "homogeneous")
    assert json.loads(out)["result"] == []


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--pattern", "c5", "--op", "mycielski", "--quiet")
    assert out.strip() == "JhdLA_gc?N_"
    code, out, _ = run(capsys, "construct", "--pattern", "k2", "--op", "substitute",
                       "--vertex", "0", "--with-pattern", "c5")
    assert json.loads(out)["m"] == 10
    w = tmp_path / "w"
    w.write_text("3")
    code, out, _ = run(capsys, "construct", "--pattern", "k1", "--op", "weight-expand", "--weights", str(w))
    assert json.loads(out) == {"graph6": "Bw", "m": 3, "n": 3, "weights": [1, 1, 1]}


def test_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["certify", "--pattern", "c5", "--bogus"])
    assert e.value.code == 2
    code, _, err = run(capsys, "certify", "--pattern", "kn", "--size", "20", "--claim", "pd")
    assert code == 2 and "exhaustive" in err and "16" in err
    code, _, err = run(capsys, "perfect", "--graph6", "Dhcc")
    assert code == 2 and "at byte 3" in err


def test_verify_and_hunt(capsys, tmp_path):
    cfg = tmp_path / "s.cfg"
    cfg.write_text(json.dumps({"corpus": {"max_n": 5, "patterns": ["groetzsch"]}, "hunt_max_n": 5}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg))
    assert code == 0 and json.loads(out)["reports"]
    code, out, _ = run(capsys, "hunt", "--problem", "vertex_in_A", "--max-n", "5",
                       "--artifacts", str(tmp_path / "hits"), "--quiet")
    assert code == 0 and out.strip() == "pass"


def test_identical_argv_identical_output(capsys):
    argv = ["certify", "--pattern", "c7", "--claim", "pwd"]
    a = json.loads(run(capsys, *argv)[1])
    b = json.loads(run(capsys, *argv)[1])
    a["stats"].pop("wall_time_ms"), b["stats"].pop("wall_time_ms")
    assert a == b
