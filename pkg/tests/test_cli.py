import json
import subprocess
import sys

import pytest

from omegaprimality.cli import RunConfig, main, parse_block
from omegaprimality import FiniteAbelianGroup


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_omega_mcnugget(capsys):
    code, out, _ = run(capsys, "--format", "json", "omega", "--gens", "6,9,20", "--n", "35")
    data = json.loads(out)
    assert code == 0 and data["omega"] == 14 and len(data["rows"]) == 10
    assert data["schema_version"] == 1
    assert [r["bullet"] for r in data["rows"] if r["maximal"]] == ["(14,0,0)"]


def test_omega_three_seven(capsys):
    code, out, _ = run(capsys, "--format", "csv", "bullets", "--gens", "3,7", "--n", "9")
    assert code == 0
    assert out.splitlines() == ["bullet,length,maximal", "\"(0,3)\",3,1", "\"(3,0)\",3,1"]


def test_range_rows(capsys):
    code, out, _ = run(capsys, "--format", "csv", "omega", "--gens", "3,7", "--range", "1:14")
    assert code == 0 and out.splitlines()[1].startswith("3,3,")
    assert len(out.splitlines()) == 1 + 8


@pytest.mark.parametrize("argv, code", [
    (["omega", "--gens", "6,9,20", "--n", "5"], 4),
    (["omega", "--gens", "6,x", "--n", "5"], 2),
    (["omega", "--gens", "6,9,21", "--n", "5"], 2),
    (["--budget", "10", "omega", "--gens", "6,9,20", "--n", "35"], 3),
    (["quasi", "--gens", "3,7", "--horizon", "20"], 5),
    (["block", "--group", "3", "--element", "g:2"], 2),
    (["acm", "--a", "2", "--b", "4", "--x", "6"], 2),
    (["leamer", "--gens", "13,17,22,40", "--s", "4"], 2),
])
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert err.startswith("error:") and out == ""


def test_parse_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["omega", "--gens"])
    assert info.value.code == 2


def test_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("OMEGA_SEARCH_BUDGET", "10")
    assert run(capsys, "omega", "--gens", "6,9,20", "--n", "35")[0] == 3


def test_quasi(capsys, tmp_path):
    plot = tmp_path / "fig1.csv"
    code, out, _ = run(capsys, "--format", "json", "quasi", "--gens", "3,7", "--horizon", "200",
                       "--plot-data", str(plot))
    data = json.loads(out)
    assert code == 0 and [r["intercept"] for r in data["rows"]] == [0, 5, 3]
    assert plot.read_text().splitlines()[0] == "n,omega,model,residue"
    code, out, _ = run(capsys, "--format", "json", "quasi", "--gens", "6,9,20", "--horizon", "600")
    assert 6 % json.loads(out)["minimal_period"] == 0


def test_block_acm_interval(capsys):
    assert '"omega": 3' in run(capsys, "--format", "json", "block", "--group", "3",
                               "--element", "g:3,-g:3")[1]
    assert '"omega": 4' in run(capsys, "--format", "json", "acm", "--a", "1", "--b", "4",
                               "--x", "1225")[1]
    out = run(capsys, "--format", "csv", "interval", "--n", "3", "--case", "odd")[1]
    assert out.splitlines()[1:] == ["5,3,3,1", "6,4,4,1", "7,4,4,1"]


def test_block_grammar():
    G = FiniteAbelianGroup([2, 2])
    x = parse_block(G, "1/0:3,0/1,1/1")
    assert x.length == 5 and x.multiplicity((1, 0)) == 3


def test_scan_orderings(capsys):
    code, out, _ = run(capsys, "--format", "json", "scan-orderings", "--bound", "16")
    data = json.loads(out)
    assert code == 0 and data["forbidden_occurrences"] == 0
    assert sum(r["count"] for r in data["rows"]) == data["triples"]


def test_leamer_csv_matches_snapshot(capsys):
    from pathlib import Path
    code, out, _ = run(capsys, "--format", "csv", "leamer", "--gens", "13,17,22,40", "--s", "4",
                       "--box", "100,12", "--allow-small-box")
    assert code == 0
    assert out == (Path(__file__).parent / "data" / "leamer_13_17_22_40_s4_box100x12.csv").read_text()


def test_deterministic_output(capsys):
    argv = ["--format", "json", "--seed", "4", "repro", "--samples", "5"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(search_budget=0)
    with pytest.raises(ValueError):
        RunConfig(output_format="xml")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "omegaprimality.cli", "omega", "--gens", "3,7",
                           "--n", "9"], capture_output=True, text=True)
    assert proc.returncode == 0 and "omega: 3" in proc.stdout
