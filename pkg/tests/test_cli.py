import csv
import io
import json
import subprocess
import sys

import pytest

from rootfn import __version__
from rootfn.cli import EXIT_DOMAIN, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_check_root():
    code, out = call("check", "111,000")
    assert code == EXIT_OK
    assert "root: true" in out.splitlines()


def test_check_non_root_json():
    code, out = call("check", "000,101", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert doc["result"]["root"] is False
    assert doc["result"]["isolated"] is True and doc["result"]["maximal"] is False


def test_bounds():
    code, out = call("bounds", "--n", "6", "--format", "json")
    result = json.loads(out)["result"]
    assert code == EXIT_OK and (result["lower"], result["upper"]) == (10, 32)


def test_census_csv_n5():
    code, out = call("census", "--n", "5", "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("# rootfn ")
    rows = list(csv.reader(lines[1:]))
    assert rows[0] == ["n", "k", "count"]
    body = {(int(k), int(c)) for _, k, c in rows[1:-1]}
    assert body == {(8, 1140), (9, 320), (10, 176), (12, 32), (16, 2)}
    assert rows[-1] == ["5", "total", "1670"]


def test_census_emit(tmp_path):
    target = tmp_path / "roots.txt"
    code, out = call("census", "--n", "4", "--emit", str(target), "--format", "json")
    assert code == EXIT_OK
    lines = target.read_text().split()
    assert len(lines) == 42 == json.loads(out)["result"]["total"]
    assert all(line.startswith("n=4:") for line in lines)


def test_census_refuses_large_n(capsys):
    code, _ = call("census", "--n", "7")
    assert code == EXIT_RESOURCE
    assert "--force" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["census"],
    ["check", "012"],
    ["bounds", "--n", "0"],
    ["census", "--n", "3", "--bogus"],
    ["synth", "--random", "3"],
    ["catalog", "--n", "9"],
])
def test_usage_errors(argv, capsys):
    code, _ = call(*argv)
    assert code == EXIT_USAGE
    assert capsys.readouterr().err


def test_repeat_runs_are_byte_identical():
    argv = ["synth", "--random", "25", "--n", "4", "--seed", "7", "--format", "json"]
    assert call(*argv) == call(*argv)
    assert call("census", "--n", "4") == call("census", "--n", "4")


def test_report_embeds_version_and_config():
    _, out = call("canon", "01,10", "--format", "json", "--seed", "3")
    doc = json.loads(out)
    assert doc["version"] == __version__
    assert doc["config"]["seed"] == 3 and doc["config"]["subcommand"] == "canon"
    assert doc["config"]["options"]["function"] == "01,10"
    _, text = call("canon", "01,10")
    assert text.startswith(f"# rootfn {__version__} config=")


def test_canon_and_orbit_agree():
    _, a = call("canon", "01,10", "--format", "json")
    _, b = call("canon", "00,11", "--format", "json")
    assert json.loads(a)["result"]["canonical"] == json.loads(b)["result"]["canonical"]
    _, out = call("orbit", "000,111", "--format", "json")
    assert json.loads(out)["result"]["size"] == 4


def test_simulate_from_files(tmp_path):
    circuit = tmp_path / "c.txt"
    circuit.write_text("0000\n0111\n1011\n1101\n1110\n")
    faults = tmp_path / "f.txt"
    faults.write_text("orin:4=0\nbranch:0,1=1\nbranch:0,2=1\nbranch:2,3=1\nbranch:2,4=1\nbranch:3,2=1\n")
    code, out = call("simulate", "--circuit", str(circuit), "--faults", str(faults), "--format", "json")
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["response"] == "0000,0001,0010,0011,0111,1011,1101,1111"
    assert result["fault_free"] == "0000,0111,1011,1101,1110"


def test_simulate_bad_fault_file(tmp_path):
    circuit = tmp_path / "c.txt"
    circuit.write_text("000\n111\n")
    faults = tmp_path / "f.txt"
    faults.write_text("branch:7,1=1\n")
    assert call("simulate", "--circuit", str(circuit), "--faults", str(faults))[0] == EXIT_DOMAIN
    faults.write_text("nonsense\n")
    assert call("simulate", "--circuit", str(circuit), "--faults", str(faults))[0] == EXIT_USAGE


def test_synth_target():
    code, out = call("synth", "--target", "0000,0001,0010,0011,0111,1011,1111,1101", "--format", "json")
    result = json.loads(out)["result"]
    assert code == EXIT_OK
    assert result["root"] == "0000,0111,1011,1101,1110"
    assert result["representatives"] == ["0000", "1011", "1101"]
    assert result["completion"] == ["0111", "1110"]
    assert result["simulated"] == result["target"]


def test_synth_random_round_trips():
    code, out = call("synth", "--random", "50", "--n", "4", "--seed", "1", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["result"]["round_trips"] == 50


def test_audit_and_universal():
    code, out = call("audit", "--n", "3", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["result"]["passed"]
    code, out = call("universal", "--n", "3")
    assert code == EXIT_OK and "covers all 256 functions: true" in out


def test_lift_sop_catalog():
    _, out = call("lift", "000,111", "--var", "2")
    assert out.splitlines()[-1] == "0000,0111,1010,1101"
    _, out = call("sop", "0000,0001,0010,0011,0111,1011,1111,1101")
    assert set(out.splitlines()[1:]) == {"00--", "--11", "11-1"}
    code, out = call("catalog", "--n", "7", "--format", "json")
    assert code == EXIT_OK and all(e["root"] for e in json.loads(out)["result"]["entries"])


def test_output_file(tmp_path):
    dest = tmp_path / "report.json"
    code, out = call("bounds", "--n", "4", "--format", "json", "--output", str(dest))
    assert code == EXIT_OK and out == ""
    assert json.loads(dest.read_text())["result"]["lower"] == 4


def test_console_module_runs():
    proc = subprocess.run([sys.executable, "-m", "rootfn.cli", "check", "111,000"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "root: true" in proc.stdout
