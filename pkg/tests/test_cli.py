import json
import subprocess
import sys
from pathlib import Path

import pytest

from drgwb.cli import EXIT_INPUT, EXIT_OK, main

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_params_text(capsys):
    code, out, _ = run(capsys, "params", "-D", "4", "-q", "2", "--alpha", "2", "--beta", "60")
    assert code == EXIT_OK
    assert "eta: [-3, 57, -1, 27]" in out


def test_params_grassmann_array(capsys):
    code, out, _ = run(capsys, "params", "-D", "2", "-q", "2", "--alpha", "2", "--beta", "6", "--format", "json")
    data = json.loads(out)
    code2, out2, _ = run(capsys, "graph", "--gen", "grassmann_q:4,2,2", "--format", "json")
    assert code == code2 == EXIT_OK
    assert data["intersection_array"]["text"] == json.loads(out2)["intersection_array"]["text"] == "{18,8;1,9}"


def test_params_rejects_q0(capsys):
    code, _, err = run(capsys, "params", "-D", "4", "-q", "0", "--alpha", "2", "--beta", "60")
    assert code == EXIT_INPUT and "q" in err


def test_feasibility(capsys):
    code, out, _ = run(capsys, "feasibility", "--family", "1", "-q", "3", "-D", "6")
    assert code == EXIT_OK and "eliminated" in out and "17 does not divide" in out
    code, out, _ = run(capsys, "feasibility", "--family", "2", "-q", "3", "-D", "5", "--format", "json")
    data = json.loads(out)
    assert data["verdict"] == "eliminated" and data["certificate"]["check"] == "f2_mod4"
    code, _, err = run(capsys, "feasibility", "--family", "2", "-q", "2", "-D", "12")
    assert code == EXIT_INPUT and "use the sweep" in err
    code, _, err = run(capsys, "feasibility", "-q", "2", "-D", "4")
    assert code == EXIT_INPUT


def test_feasibility_generic_screen(capsys):
    code, out, _ = run(capsys, "feasibility", "-q", "2", "-D", "2", "--alpha", "2", "--beta", "6")
    assert code == EXIT_OK and "feasible-so-far" in out


def test_sweep(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "--q-max", "2", "--d-max", "6", "--format", "json")
    data = json.loads(out)
    assert data["cells"] == 1 and data["kD_integral"] == 0 and data["fD_integral"] == 0
    code, out, _ = run(capsys, "sweep", "--q-max", "50", "--d-max", "60", "--checkpoint-dir", str(tmp_path))
    assert code == EXIT_OK and "counterexamples (both integral): 0" in out
    assert (tmp_path / "sweep-50-60.tsv").exists()


def test_graph_file_and_not_drg(capsys):
    code, out, _ = run(capsys, "graph", "--file", str(CORPUS / "petersen.el"))
    assert code == EXIT_OK and "{3,2;1,1}" in out
    code, out, _ = run(capsys, "graph", "--file", str(CORPUS / "tree6.el"))
    assert code == EXIT_OK and "not distance-regular" in out
    code, _, _ = run(capsys, "graph", "--file", str(CORPUS / "missing.el"))
    assert code == EXIT_INPUT
    code, _, _ = run(capsys, "graph")
    assert code == EXIT_INPUT


def test_modules(capsys):
    code, out, _ = run(capsys, "modules", "--gen", "hypercube:4", "-x", "0", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and sum(sum(m["dims"]) for m in data["modules"]) == 16
    code, _, err = run(capsys, "modules", "--gen", "hypercube:4", "-x", "99")
    assert code == EXIT_INPUT and "out of range" in err


def test_uniform_and_witness_recheck(capsys, tmp_path):
    code, out, _ = run(capsys, "uniform", "--gen", "folded-hypercube:5", "-x", "0")
    assert code == EXIT_OK and "uniform: yes" in out
    report = tmp_path / "u.json"
    code, _, _ = run(capsys, "uniform", "--gen", "folded-hypercube:5", "--format", "json", "-o", str(report))
    assert code == EXIT_OK and report.exists()
    code, out, _ = run(capsys, "uniform", "--gen", "folded-hypercube:5", "--check-witness", str(report),
                       "--format", "json")
    assert json.loads(out)["witness_recheck"] is True
    code, out, _ = run(capsys, "uniform", "--file", str(CORPUS / "tree6.el"))
    assert "uniform: no" in out


def test_csv_output(capsys):
    code, out, _ = run(capsys, "modules", "--gen", "cycle:5", "--format", "csv")
    assert code == EXIT_OK and out.splitlines()[0].count(",") >= 2


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nD = 4\nq = 2\nalpha = 2\nbeta = 60\n")
    code, out, _ = run(capsys, "params", "--config", str(cfg))
    assert code == EXIT_OK and "eta: [-3, 57, -1, 27]" in out
    bad = tmp_path / "bad.cfg"
    bad.write_text("nonsense\n")
    code, _, _ = run(capsys, "params", "--config", str(bad))
    assert code == EXIT_INPUT


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "drgwb.cli", "graph", "--gen", "petersen"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "{3,2;1,1}" in res.stdout
