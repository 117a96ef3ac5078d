import json

import pytest

from jlab import cli
from jlab.verify import Check


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_alpha_petersen(capsys):
    code, out, _ = run(capsys, "alpha", "--n", "5", "--r", "2", "--s", "0")
    assert code == 0
    assert out.startswith("# jlab 0.1.0 config {")
    assert out.splitlines()[1].startswith("alpha=4 witness=")


def test_alpha_budget_exhaustion_exit_2(capsys):
    code, out, _ = run(capsys, "alpha", "--n", "12", "--r", "3", "--p", "0.3",
                       "--budget-nodes", "50")
    assert code == 2 and "budget exhausted" in out


def test_p0(capsys):
    code, out, _ = run(capsys, "bounds", "p0", "--n", "20", "--r", "3")
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["result"]["p0"] - 0.0822) < 1e-4
    assert doc["meta"]["jlab"] == "0.1.0"


def test_p0_csv(capsys):
    code, out, _ = run(capsys, "bounds", "p0", "--n", "20", "--r", "3", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "# jlab 0.1.0" and lines[3] == "n,r,p0"
    assert lines[4].startswith("20,3,0.0822")


@pytest.mark.parametrize("argv", [
    ["alpha", "--bogus"],
    ["nonsense"],
    ["bounds", "p0", "--n", "5", "--r", "3"],
    ["alpha", "--n", "5", "--r", "2", "--s", "2"],
    ["bounds", "p0", "--r", "3"],
])
def test_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_constants_file(tmp_path, capsys):
    k = tmp_path / "k.json"
    k.write_text('{"log_base": "2"}')
    _, out, _ = run(capsys, "bounds", "p0", "--n", "20", "--r", "3", "--constants", str(k))
    assert json.loads(out)["result"]["log_base"] == "2"
    k.write_text('{"c": 0.05, "eps_prime": 0.9}')
    code, _, err = run(capsys, "bounds", "turan", "--n", "300", "--r", "4", "--constants", str(k))
    assert code == 1 and "eps_prime" in err


def test_export_roundtrip(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code, out, _ = run(capsys, "graph", "export", "--n", "7", "--r", "3", "--p", "0.5",
                       "--seed", "9", "--out", str(path))
    assert code == 0
    exported_hash = out.split("hash ")[1].rstrip(")\n")
    _, out, _ = run(capsys, "graph", "build", "--in", str(path))
    assert json.loads(out)["result"]["hash"] == exported_hash
    _, out, _ = run(capsys, "graph", "build", "--n", "7", "--r", "3", "--p", "0.5", "--seed", "9")
    assert json.loads(out)["result"]["hash"] == exported_hash


def test_family_commands(tmp_path, capsys):
    fam = tmp_path / "fam.txt"
    fam.write_text("n=12 r=4\n1 2 3 4\n1 2 5 6\n1 2 7 8\n3 4 5 6\n")
    _, out, _ = run(capsys, "family", "analyze", "--in", str(fam))
    assert json.loads(out)["result"] == {"size": 4, "center": [1, 2], "d": 3, "x": 1,
                                         "iX": 4, "IX": [3, 4, 5, 6]}
    _, out, _ = run(capsys, "family", "ess", "--in", str(fam))
    assert out.splitlines()[0] == "n=12 r=4" and len(out.splitlines()) == 5
    _, out, _ = run(capsys, "family", "bj", "--in", str(fam))
    res = json.loads(out)["result"]
    assert res["B_sizes"] == [6, 6, 6, 6] and all(res["invariants"].values())
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 3\n")
    assert run(capsys, "family", "analyze", "--in", str(bad))[0] == 1


def test_mc_sweep_deterministic(tmp_path, capsys):
    argv = ["mc", "sweep", "--n", "5", "--r", "2", "--s", "0", "--trials", "30",
            "--p-grid", "0.5,0.9", "--format", "csv"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert '"master_seed": 2024' in first.splitlines()[1]


def test_mc_run_json(capsys):
    code, out, _ = run(capsys, "mc", "run", "--n", "7", "--r", "3", "--p", "0.9",
                       "--trials", "10", "--detail")
    doc = json.loads(out)
    assert code == 0 and len(doc["result"][0]["per_trial"]) == 10
    assert doc["meta"]["seed"] == 2024


def test_bounds_tables(capsys):
    code, out, _ = run(capsys, "bounds", "union", "--n", "30", "--r", "4", "--format", "csv")
    assert code == 0 and out.splitlines()[3] == "i,log_term,log_term_relaxed"
    code, out, _ = run(capsys, "bounds", "tech", "--n", "10", "--r", "4", "--i", "3")
    assert json.loads(out)["result"][0]["params"]["i"] == 3
    code, out, _ = run(capsys, "bounds", "chernoff", "--mu", "10", "--delta", "1")
    assert abs(json.loads(out)["result"]["bound"] - 0.03567) < 1e-5
    code, out, _ = run(capsys, "bounds", "ff", "--n", "10", "--r", "4")
    assert json.loads(out)["result"]["alpha"] == 28


def test_verify_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(cli, "run_all", lambda include_invariants: [Check("a", True, "")])
    assert run(capsys, "verify", "all")[0] == 0
    monkeypatch.setattr(cli, "run_all", lambda include_invariants: [
        Check("a", True, ""), Check("b", False, "")])
    assert run(capsys, "verify", "all")[0] == 1


def test_out_file(tmp_path, capsys):
    out = tmp_path / "p0.json"
    run(capsys, "bounds", "p0", "--n", "20", "--r", "3", "--out", str(out))
    assert json.loads(out.read_text())["result"]["p0"] > 0
