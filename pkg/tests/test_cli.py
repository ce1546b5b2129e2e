import json
import subprocess
import sys

import pytest

from bergecycle.canonical import is_isomorphic
from bergecycle.cli import main
from bergecycle.constructions import gen_construction4, gen_g1
from bergecycle.io import read_file, serialize


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def g1_file(tmp_path, capsys):
    path = tmp_path / "g1.bg"
    code, out, _ = run(capsys, "gen", "g1", "--delta", "3", "-o", str(path))
    assert code == 0 and "G1" in out and "ok" in out
    return path


def test_gen_writes_parseable_file(g1_file):
    assert is_isomorphic(read_file(g1_file), gen_g1(3))


def test_gen_reports_certification_mismatch(capsys):
    code, out, err = run(capsys, "gen", "g3", "--n1", "1", "--n2", "1", "--n3", "1", "--delta", "3")
    assert code == 0
    assert out.startswith("bigraph 3 5")
    assert "MISMATCH 2connected" in err


def test_gen_json_and_missing_params(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "h4", "--n", "8", "--json")
    assert code == 0 and json.loads(out.splitlines()[0])["kind"] == "hypergraph"
    code, _, err = run(capsys, "gen", "g2", "--a", "2")
    assert code == 2 and "--b" in err


def test_gen_random_is_seeded(capsys):
    a = run(capsys, "gen", "random", "--n", "5", "--m", "7", "--seed", "4")[1]
    b = run(capsys, "gen", "random", "--n", "5", "--m", "7", "--seed", "4")[1]
    c = run(capsys, "gen", "random", "--n", "5", "--m", "7", "--seed", "5")[1]
    assert a == b and a != c


def test_check_longest_cycle(capsys, g1_file):
    code, out, _ = run(capsys, "check", "--in", str(g1_file), "--prop", "longest-cycle")
    assert code == 0
    assert out.startswith("longest-cycle: ℓ=2 (length 4)")
    assert "witness" in out


@pytest.mark.parametrize("prop, extra, value", [
    ("2connected", [], False),
    ("lll", [], False),
    ("spanning-x-cycle", [], False),
    ("spanning-x-cycle", ["--subset", "0,1"], True),
    ("super-pancyclic", [], False),
    ("tight-pair", [], 2),
    ("crossing", ["--i", "1", "--j", "2"], False),
    ("hamiltonian-berge", [], False),  # only the two hub edges hold a pair
])
def test_check_properties_json(capsys, g1_file, prop, extra, value):
    code, out, _ = run(capsys, "check", "--in", str(g1_file), "--prop", prop, "--json", *extra)
    assert code == 0
    assert json.loads(out)["value"] == value


def test_check_hypergraph_properties(capsys, tmp_path):
    path = tmp_path / "h4.hg"
    path.write_text(serialize(gen_construction4(8)))
    code, out, _ = run(capsys, "check", "--in", str(path), "--prop", "hamiltonian-berge", "--json")
    assert code == 0 and json.loads(out)["value"] is False
    code, out, _ = run(capsys, "check", "--in", str(path), "--prop", "codegree", "--set", "5,6", "--json")
    assert json.loads(out)["value"] == 0
    code, out, _ = run(capsys, "check", "--in", str(path), "--prop", "berge-with-edges",
                       "--edges", "0,3,15", "--json")
    assert code == 0 and isinstance(json.loads(out)["value"], bool)


@pytest.mark.parametrize("prop", ["longest-cycle", "tight-pair", "spanning-x-cycle"])
def test_emitted_witness_revalidates(capsys, tmp_path, g1_file, prop):
    wfile = tmp_path / "w.json"
    extra = ["--subset", "0,2"] if prop == "spanning-x-cycle" else []
    code, _, _ = run(capsys, "check", "--in", str(g1_file), "--prop", prop, "--json",
                     "-o", str(wfile), *extra)
    assert code == 0
    code, out, _ = run(capsys, "check", "--in", str(g1_file), "--witness", str(wfile), "--json")
    assert code == 0 and json.loads(out)["value"] is True


def test_berge_witness_revalidates(capsys, tmp_path):
    path = tmp_path / "tri.hg"
    path.write_text("hypergraph 3\ne: 0 1\ne: 1 2\ne: 0 2\n")
    wfile = tmp_path / "w.json"
    run(capsys, "check", "--in", str(path), "--prop", "hamiltonian-berge", "--json", "-o", str(wfile))
    assert "base" in json.loads(wfile.read_text())["witness"]
    code, out, _ = run(capsys, "check", "--in", str(path), "--witness", str(wfile), "--json")
    assert code == 0 and json.loads(out)["kind"] == "berge-cycle"


def test_bad_witness_is_rejected(capsys, tmp_path, g1_file):
    wfile = tmp_path / "bad.json"
    wfile.write_text(json.dumps({"xs": [0, 1, 2], "ys": [0, 1, 2]}))
    code, _, err = run(capsys, "check", "--in", str(g1_file), "--witness", str(wfile))
    assert code == 2 and err


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.bg"
    bad.write_text("bigraph 2 2\n0: 0 7\n1: 0\n")
    code, _, err = run(capsys, "check", "--in", str(bad), "--prop", "2connected")
    assert code == 2 and "line 2" in err and "out of range" in err


def test_missing_file_exit_code(capsys, tmp_path):
    code, _, err = run(capsys, "check", "--in", str(tmp_path / "nope"), "--prop", "lll")
    assert code == 2 and "cannot access" in err


def test_unknown_flag_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--bogus"])
    assert exc.value.code == 2


def test_verify_jackson2(capsys):
    code, out, _ = run(capsys, "verify", "jackson2", "--n", "3", "--m", "5", "--delta", "3",
                       "--workers", "1")
    assert code == 0
    assert "iso-G1(3)" in out and "iso-G2(2,1)" in out


def test_verify_json_and_dump(capsys, tmp_path):
    report = tmp_path / "r.json"
    dump = tmp_path / "exc"
    code, _, _ = run(capsys, "verify", "jackson2", "--n", "3", "--m", "5", "--delta", "3",
                     "--workers", "1", "-o", str(report), "--dump-exceptions", str(dump))
    assert code == 0
    data = json.loads(report.read_text())
    assert data["passed"] + len(data["exceptions"]) == data["hypothesis"]
    assert len(list(dump.iterdir())) == 2


def test_verify_bad_box_and_guard(capsys):
    code, _, err = run(capsys, "verify", "jackson", "--n", "5", "--m", "4", "--delta", "3")
    assert code == 2 and "outside" in err
    code, _, err = run(capsys, "verify", "jackson", "--n", "9", "--m", "16", "--delta", "9")
    assert code == 2 and "guard" in err


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--pred", "¬spanning-x-cycle", "--n", "3", "--m", "5",
                       "--delta", "3", "--workers", "1")
    assert code == 0 and out.startswith("# ")
    count = int(out.split()[1])
    assert count == out.count("bigraph 3 5")
    code, out, _ = run(capsys, "scan", "--pred", "false", "--n", "2..3", "--m", "3..4",
                       "--delta", "2", "--json")
    assert json.loads(out) == []
    code, _, err = run(capsys, "scan", "--pred", "wobbly", "--n", "3", "--m", "3", "--delta", "3")
    assert code == 2 and "unknown predicate" in err


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "bergecycle", "gen", "g2", "--a", "2", "--b", "1",
                           "--delta", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("bigraph 3 5")
