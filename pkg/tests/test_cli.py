import io
import json
import subprocess
import sys

import pytest

from boundary_axioms.cli import main
from boundary_axioms.setcore import serialize
from boundary_axioms.gallery import make_d3


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_identity_delta(capsys, fixtures):
    code, out, _ = run(capsys, "check", str(fixtures / "identity3.json"), "--system", "delta")
    assert code == 0
    assert "verdict: delta system holds" in out


def test_check_d3_beta(capsys, fixtures):
    code, out, _ = run(capsys, "check", str(fixtures / "d3.json"), "--system", "beta")
    assert code == 1
    assert "B3" in out and "A={0}, B={1}: element 2" in out


def test_check_both_systems(capsys, fixtures):
    code, out, _ = run(capsys, "check", str(fixtures / "identity3.json"))
    assert code == 1
    assert "system: delta" in out and "system: beta" in out


def test_check_json(capsys, fixtures):
    code, out, _ = run(capsys, "check", str(fixtures / "d3.json"), "--system", "beta", "--json")
    assert code == 1
    (report,) = json.loads(out)
    b3 = next(r for r in report["axioms"] if r["axiom"] == "B3")
    assert (b3["witness_a"], b3["witness_b"], b3["element"]) == (1, 2, 2)
    assert set(b3) == {"axiom", "holds", "count", "witness_a", "witness_b", "element"}


def test_check_all_witnesses(capsys, fixtures):
    _, out, _ = run(capsys, "check", str(fixtures / "d3.json"), "--system", "beta", "--all-witnesses")
    _, short, _ = run(capsys, "check", str(fixtures / "d3.json"), "--system", "beta")
    assert out.count("element") > short.count("element")


def test_check_one_based(capsys, fixtures):
    _, out, _ = run(capsys, "check", str(fixtures / "d3.json"), "--system", "beta", "--one-based")
    assert "A={1}, B={2}: element 3" in out


@pytest.mark.parametrize("name, fragment", [("malformed.json", "line 2"), ("incomplete.json", "incomplete table")])
def test_check_bad_input(capsys, fixtures, name, fragment):
    code, _, err = run(capsys, "check", str(fixtures / name))
    assert code == 2
    assert fragment in err


def test_check_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read" in err


def test_convert(capsys, fixtures):
    code, out, _ = run(capsys, "convert", str(fixtures / "identity3.json"), "--phi")
    assert code == 0
    assert out.strip() == (fixtures / "empty_op3.json").read_text().strip()
    code, out, _ = run(capsys, "convert", str(fixtures / "empty_op3.json"), "--psi")
    assert out.strip() == (fixtures / "identity3.json").read_text().strip()


def test_convert_round_trip_via_stdin(capsys, fixtures, monkeypatch):
    src = (fixtures / "indiscrete3.json").read_text()
    _, mid, _ = run(capsys, "convert", str(fixtures / "indiscrete3.json"), "--phi")
    monkeypatch.setattr(sys, "stdin", io.StringIO(mid))
    _, back, _ = run(capsys, "convert", "-", "--psi")
    assert back == src


def test_convert_closed_sets(capsys, fixtures):
    code, out, _ = run(capsys, "convert", str(fixtures / "indiscrete3.json"), "--closed-sets")
    assert code == 0 and out.strip() == '{"n":3,"closed":[0,7]}'
    code, _, err = run(capsys, "convert", str(fixtures / "d3.json"), "--closed-sets")
    assert code == 1 and "D3 fails" in err


def test_convert_requires_one_mode(capsys, fixtures):
    code, _, _ = run(capsys, "convert", str(fixtures / "d3.json"))
    assert code == 2


@pytest.mark.parametrize(
    "n, what, line",
    [(2, "closures", "4 (oracle: 4)"), (3, "boundaries", "29 (oracle: 29)"),
     (0, "closures", "1 (oracle: 1)"), (3, "topologies", "29 (oracle: 29)")],
)
def test_enumerate_counts(capsys, n, what, line):
    code, out, _ = run(capsys, "enumerate", "--n", str(n), "--what", what, "--count-only")
    assert code == 0
    assert out == line + "\n"


def test_enumerate_listing(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--what", "boundaries")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert lines[0] == '{"n":2,"map":{"0":0,"1":0,"2":0,"3":0}}'
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--json")
    obj = json.loads(out)
    assert obj["count"] == obj["oracle"] == 4 and len(obj["items"]) == 4


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "5")
    assert code == 2 and "n <= 4" in err


def test_gallery_command(capsys):
    code, out, _ = run(capsys, "gallery")
    assert code == 3
    assert "d4(n=3): DISCREPANCY" in out
    assert serialize(make_d3()) in out
    assert "assumed erratum" in out


def test_independence_command(capsys):
    code, out, _ = run(capsys, "independence", "--axiom", "B4")
    assert code == 0
    assert out.splitlines()[0] == "B4: witness at n=3"


def test_independence_nonexistence_exit_code(capsys):
    code, out, _ = run(capsys, "independence", "--axiom", "B4", "--max-n", "2")
    assert code == 1
    assert "candidates examined 4 of 4" in out


def test_independence_custom_spec(capsys):
    code, out, _ = run(capsys, "independence", "--n", "2", "--require", "B1,B2,B3,B4,B5")
    assert code == 0
    assert out.splitlines()[-1] == "4 witness(es); candidates examined 4 of 4 (exhausted)"
    code, _, err = run(capsys, "independence", "--n", "2", "--require", "B1", "--forbid", "B1")
    assert code == 2
    code, _, err = run(capsys, "independence", "--n", "2", "--require", "B9")
    assert code == 2 and "unknown axiom" in err


def test_verify_paper_exit_code_and_errata(capsys):
    code, out, _ = run(capsys, "verify-paper", "--max-n", "2")
    assert code == 3
    assert "n=2: closures=4 boundaries=4" in out
    assert "d4(n=3): claimed to violate only {B4}, brute force finds {B2,B4}" in out
    assert "B2 witness: A={0}: element 0" in out
    assert "B4: witness at n=3" in out


def test_verify_paper_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--max-n", "1", "--json")
    obj = json.loads(out)
    assert code == 3 and obj["all_confirmed"] is False
    assert [g["status"] for g in obj["gallery"] if g["name"] == "d4"] == ["DISCREPANCY"]


def test_module_entry_point(fixtures):
    proc = subprocess.run(
        [sys.executable, "-m", "boundary_axioms", "check", str(fixtures / "d4.json"), "--system", "beta"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert "B2" in proc.stdout and "B4" in proc.stdout
