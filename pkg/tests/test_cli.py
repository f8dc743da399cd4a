import json
import subprocess
import sys
from pathlib import Path

import pytest

from gammasg.cli import main
from gammasg.core import format_gsg, left_zero, mod2, parse_gsg, singleton
from gammasg.fuzzy import parse_ifs_raw


@pytest.fixture
def files(tmp_path: Path):
    paths = {
        "i2": tmp_path / "i2.gsg",
        "lz": tmp_path / "lz.gsg",
        "one": tmp_path / "one.gsg",
        "bad": tmp_path / "bad.gsg",
        "nonassoc": tmp_path / "nonassoc.gsg",
        "notideal": tmp_path / "notideal.ifs",
        "b": tmp_path / "b.ifs",
        "p": tmp_path / "p.ifs",
    }
    paths["i2"].write_text(format_gsg(mod2()))
    paths["lz"].write_text(format_gsg(left_zero()))
    paths["one"].write_text(format_gsg(singleton()))
    paths["bad"].write_text("GSG 1\nS 2\nG 1\nT 0\n0 1\n1 x\n")
    paths["nonassoc"].write_text("GSG 1\nS 2\nG 1\nT 0\n0 1\n0 0\n")
    paths["notideal"].write_text("IFS 1\ncarrier S\n0 1 0\n1 0 0\n")
    paths["b"].write_text("IFS 1\ncarrier S\n0 1 0\n1 1/2 1/4\n")
    paths["p"].write_text("IFS 1\ncarrier S\n0 1 0\n1 0 1\n")
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys, files):
    assert run(capsys, "validate", files["i2"])[:2] == (0, "VALID S=2 G=1\n")
    code, out, _ = run(capsys, "validate", files["nonassoc"])
    assert code == 1 and out.startswith("INVALID")
    code, _, err = run(capsys, "validate", files["bad"])
    assert code == 2 and "line 6" in err
    code, _, err = run(capsys, "validate", files["i2"] + ".missing")
    assert code == 2


def test_operators(capsys, files):
    code, out, _ = run(capsys, "operators", files["i2"], "--side", "left", "--print-classes")
    assert code == 0
    assert out.splitlines()[:7] == ["OPERATOR left classes=2", "CLASS [0,0]#0 members=(0,0)",
                                    "CLASS [1,0]#1 members=(1,0)", "CAYLEY", "0 0", "0 1", "UNITY left [1,0]#1"]
    code, out, _ = run(capsys, "operators", files["lz"], "--side", "left")
    assert "UNITY left none" in out


def test_check(capsys, files):
    code, out, _ = run(capsys, "check", files["lz"], "--subset", files["notideal"], "--predicate", "ifi")
    assert code == 0
    assert out.startswith("ifi: false witness=(1,0,0)")
    code, out, _ = run(capsys, "check", files["i2"], "--subset", files["p"], "--predicate", "prime")
    assert (code, out) == (0, "prime: true\n")
    code, out, _ = run(capsys, "check", files["i2"], "--subset", files["b"])
    assert code == 0 and out.count(": true") == 5


def test_transfer_and_extend_round_trip(capsys, files, tmp_path):
    out_path = tmp_path / "t.ifs"
    code, _, _ = run(capsys, "transfer", files["i2"], "--subset", files["b"], "--map", "star-prime", "-o", out_path)
    assert code == 0
    tag, mu, nu = parse_ifs_raw(out_path.read_text())
    assert tag == "R" and [str(v) for v in mu] == ["1", "1/2"]
    code, out, _ = run(capsys, "transfer", files["i2"], "--subset", out_path, "--map", "star")
    assert code == 0 and out == Path(files["b"]).read_text()
    code, out, _ = run(capsys, "extend", files["i2"], "--subset", files["b"], "--by", "0")
    assert code == 0 and out == "IFS 1\ncarrier S\n0 1 0\n1 1 0\n"
    code, _, err = run(capsys, "transfer", files["i2"], "--subset", files["b"], "--map", "star")
    assert code == 2 and "expects a subset of R" in err
    code, _, _ = run(capsys, "extend", files["i2"], "--subset", files["b"], "--by", "5")
    assert code == 2


def test_verify(capsys, files):
    code, out, _ = run(capsys, "verify", files["i2"], "--checks", "all", "--lattice", "0,1/2,1")
    assert code == 0
    assert out.splitlines()[-1].startswith("SUITE PASS")
    assert "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--enumerate", "1,1", "--checks", "thm-2.9", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["checks"][0]["id"] == "thm-2.9-roundtrip"
    code, _, _ = run(capsys, "verify")
    assert code == 2
    code, _, _ = run(capsys, "verify", files["i2"], "--checks", "nope")
    assert code == 2


def test_verify_seed_is_byte_identical(capsys, files):
    argv = ["verify", "--enumerate", "2,2", "--checks", "prop-2.5,lemma-2.27", "--seed", "7",
            "--cap", "50", "--samples", "40"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second and "seed=7" in first


def test_search_and_replay(capsys, files, tmp_path):
    code, out, _ = run(capsys, "search", "prop-2.5", "--bounds", "2,1")
    assert code == 0 and out.startswith("SEARCH prop-2.5-level-star EXHAUSTED")
    code, out, _ = run(capsys, "search", "thm-2.9-roundtrip", "--bounds", "2,1")
    assert code in (0, 1)
    if code == 1:
        report = tmp_path / "search.txt"
        report.write_text(out)
        code, out, _ = run(capsys, "replay", report, "--ignore-hypothesis")
        assert code == 1 and "REPRODUCED" in out


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "3", "1", "--count")[1] == "COUNT 113 truncated=false\n"
    code, out, _ = run(capsys, "enumerate", "2", "1", "--limit", "2")
    assert code == 0
    blocks = [b for b in out.split("# instance ") if b.strip()]
    assert len(blocks) == 2
    assert parse_gsg(blocks[0].split("\n", 1)[1])


def test_unknown_subcommand_and_flag_exit_2():
    for argv in (["bogus"], ["validate"], ["enumerate", "2", "1", "--bogus"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "gammasg", "validate", files["one"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "VALID S=1 G=1\n"
