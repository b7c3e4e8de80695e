import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from pompeiu.cli import main

ROOT = Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"
VERDICT_SCHEMA = json.loads((ROOT / "docs" / "verdict.schema.json").read_text())
REPORT_SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())


def run(*argv):
    lines = []
    code = main(list(argv), out=lines.append)
    return code, "\n".join(lines)


def test_check_z2():
    code, out = run("check", "--group", str(FIX / "z2.grp"), "--subset", "0,1")
    assert code == 0
    assert out.splitlines()[0] == "NOT Pompeiu (rank 1/2); witness: -1·e0 + 1·e1"


def test_check_json():
    code, out = run("check", "--group", str(FIX / "s3.grp"), "--subset", "0, 1, 3", "--json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, VERDICT_SCHEMA)
    assert data["is_pompeiu"] and data["oracle"] is None


def test_builtin_group_name():
    code, out = run("check", "--group", "Z2xZ4", "--subset", "0,4")
    assert code == 0 and out.startswith("NOT Pompeiu (rank 4/8)")


def test_witness_command():
    code, out = run("witness", "--group", str(FIX / "z2.grp"), "--subset", "0,1")
    assert code == 0 and out == "-1·e0 + 1·e1"
    code, out = run("witness", "--group", str(FIX / "z2.grp"), "--subset", "1")
    assert code == 1 and "no witness" in out
    code, out = run("witness", "--group", "Q8", "--subset", "0,1", "--json")
    # chi_N * CG for the center N is the group algebra of Q8/N, of dimension 4
    assert code == 0 and len(json.loads(out)["witness_basis"]) == 4


def test_classify_trivial():
    code, out = run("classify", "--group", str(FIX / "z1.grp"))
    assert code == 0
    assert "- F(G)-Pompeiu group: yes" in out


@pytest.mark.parametrize("fmt", ["md", "csv", "json"])
def test_classify_formats(fmt):
    code, out = run("classify", "--group", str(FIX / "s3.grp"), "--format", fmt)
    assert code == 0
    if fmt == "json":
        jsonschema.validate(json.loads(out), REPORT_SCHEMA)
    if fmt == "csv":
        assert out.splitlines()[0] == "subset,size,is_pompeiu,ideal_rank,witness_dim"
        assert len(out.splitlines()) == 64


def test_classify_jobs_identical():
    a = run("classify", "--group", str(FIX / "q8.grp"), "--format", "json", "--jobs", "1")
    b = run("classify", "--group", str(FIX / "q8.grp"), "--format", "json", "--jobs", "4")
    assert a == b


def test_classify_needs_cap():
    code, _ = run("classify", "--group", "S4")
    assert code == 3
    code, out = run("classify", "--group", "S4", "--max-size", "1", "--format", "json")
    rows = json.loads(out)["rows"]
    # order 24 uses orbit representatives: all singletons are one orbit
    assert code == 0 and [(r["subset"], r["orbit_size"]) for r in rows] == [([0], 24)]


def test_structure_commands():
    code, out = run("normal-subgroups", "--group", str(FIX / "s3.grp"))
    assert code == 0
    assert [line.split(":")[0] for line in out.splitlines()] == ["order 1", "order 3", "order 6"]
    code, out = run("center", "--group", "Q8")
    assert out.splitlines()[0] == "center dimension: 5"
    assert len(out.splitlines()) == 6


def test_lattice_commands():
    assert run("lattice", "check", "--subset", "5") == (0, "Pompeiu in Z")
    code, out = run("lattice", "check", "--subset", "0,1")
    assert out.startswith("NOT Pompeiu in Z")
    code, out = run("lattice", "witness", "--subset", "0,1,2")
    assert out.splitlines() == ["exact periodic witness, period 3: 1, -1, 0", "residual: 0"]
    code, out = run("lattice", "witness", "--subset", "0,1,3", "--json")
    data = json.loads(out)
    assert not data["exact"] and float(data["residual"]) < 1e-9
    code, out = run("lattice", "energy", "--subset", "0,1", "--window", "20")
    assert out.splitlines()[:3] == ["E(0) = 1", "E(2) = 5", "E(4) = 9"]


@pytest.mark.parametrize("argv, code", [
    (["check", "--group", "no/such/file.grp", "--subset", "0"], 2),
    (["check", "--group", "Z2", "--subset", "a,b"], 2),
    (["check", "--group", "Z2", "--subset", ""], 3),
    (["check", "--group", "Z2", "--subset", "0,0"], 3),
    (["check", "--group", "Z2", "--subset", "0,5"], 3),
    (["lattice", "witness", "--subset", "3"], 3),
    (["lattice", "check", "--subset", ""], 3),
])
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code
    assert capsys.readouterr().err.startswith("error:")


def test_malformed_file_exit_code(tmp_path):
    bad = tmp_path / "bad.grp"
    bad.write_text("pompeiu-group/1\nlabel: X\norder: 2\ntable:\n0 1\n1 1\n")
    assert run("check", "--group", str(bad), "--subset", "0")[0] == 2


def test_order_bound_env(monkeypatch):
    monkeypatch.setenv("POMPEIU_MAX_ORDER", "5")
    assert run("check", "--group", "S3", "--subset", "0")[0] == 3


def test_consistency_exit_code(monkeypatch):
    from pompeiu import engine
    from pompeiu.errors import ConsistencyError

    def broken(K, **kw):
        raise ConsistencyError("forced")

    monkeypatch.setattr(engine, "is_pompeiu_set", broken)
    assert run("check", "--group", "Z2", "--subset", "0")[0] == 4


def test_selftest():
    code, out = run("selftest")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("[ok]") for line in lines) and len(lines) == 6 * 21 + 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pompeiu", "check", "--group", str(FIX / "z2.grp"),
                           "--subset", "0,1"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("NOT Pompeiu (rank 1/2); witness: -1·e0 + 1·e1")
