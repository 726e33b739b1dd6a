import json

from gqtvc.cli import main


def test_construct(capsys):
    assert main(["construct", "--construct", "w2"]) == 0
    out = capsys.readouterr().out
    assert "points: 15" in out and "axiom holds" in out


def test_construct_writes_incidence(tmp_path):
    out = tmp_path / "w2.txt"
    assert main(["construct", "--construct", "w2", "--out", str(out)]) == 0
    assert out.read_text().startswith("p 15 l 15")


def test_check_srg_json(tmp_path, capsys):
    report = tmp_path / "r.json"
    code = main(["check-srg", "--construct", "t2star", "--dual",
                 "--json-out", str(report)])
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["parameters"] == [96, 20, 4, 4]
    assert doc["feasible"] is True
    assert doc["construction"] == "t2star" and doc["dual"] is True


def test_check_isoregular_exit_codes():
    assert main(["check-isoregular", "--construct", "q5_2", "--k", "3"]) == 0
    assert main(["check-isoregular", "--construct", "w2", "--k", "3"]) == 1


def test_check_tvc(capsys):
    assert main(["check-tvc", "--construct", "w2", "--t", "5"]) == 0
    assert "satisfied" in capsys.readouterr().out


def test_check_tvc_budget_inconclusive():
    code = main(["check-tvc", "--construct", "q5_2", "--t", "7",
                 "--budget-seconds", "0.01"])
    assert code == 2


def test_count_type(capsys, tmp_path):
    report = tmp_path / "c.json"
    code = main(["count-type", "--construct", "w3", "--type", "3a",
                 "--x", "0", "--y", "1", "--json-out", str(report)])
    assert code == 0
    doc = json.loads(report.read_text())
    # w3 has (s, t) = (3, 3): type 3a counts t C(3,3) = 3 on edges and
    # (t+1) C(2,3) = 0 on non-edges
    assert doc["count"] == (3 if doc["pair_adjacent"] else 0)


def test_k44_census_constant(capsys):
    assert main(["k44-census", "--construct", "w2"]) == 0


def test_export_and_read_back(tmp_path):
    g6 = tmp_path / "g.g6"
    assert main(["export-graph6", "--construct", "w2", "--out", str(g6)]) == 0
    assert main(["check-srg", "--input", str(g6)]) == 0


def test_verify_formula_cli():
    assert main(["verify-formula", "--construct", "w3",
                 "--family", "type2a"]) == 0
    assert main(["verify-formula", "--construct", "q5_2",
                 "--family", "completeS", "--dx", "T-2", "--dy", "0",
                 "--size", "3"]) == 0


def test_usage_errors():
    assert main(["no-such-command"]) == 3
    assert main(["check-srg"]) == 3  # no input source
    assert main(["count-type", "--construct", "w2", "--type", "zz",
                 "--x", "0", "--y", "1"]) == 3
    assert main(["verify-formula", "--construct", "w2",
                 "--family", "completeS", "--dx", "1", "--dy", "1",
                 "--size", "3"]) == 3  # missing z flag context is fine; t != s^2
