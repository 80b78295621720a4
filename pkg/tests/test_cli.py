import json
import subprocess
import sys
from math import comb
from pathlib import Path

import pytest

from abideals import export
from abideals.affine import parse_word, same_element
from abideals.cli import main
from abideals.fibers import fiber_reports
from abideals.ideals import poset
from abideals.rootsys import build, parse_coords

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", ["F4", "G2", "A5", "A1"])
def test_tables_match_golden_files(capsys, name):
    code, out, _ = run(capsys, "tables", "--type", name)
    assert code == 0
    assert out == (GOLDEN / f"tables_{name}.txt").read_text()


def test_type_a_grid_matches_binomials(capsys):
    code, out, _ = run(capsys, "tables", "--type", "A5")
    lines = out.split("== Fibre sizes over (i,j) for A5 ==\n")[1].splitlines()
    header = [c.strip() for c in lines[0].split("|")]
    cols = [int(c) for c in header[1:]]
    for line in lines[2:7]:
        cells = [c.strip() for c in line.split("|")]
        i = int(cells[0])
        for j, v in zip(cols, cells[1:]):
            assert v == ("." if j <= i else str(comb(6 + i - j - 1, i - 1)))
    assert lines[7].endswith("agrees: yes")


def test_hasse_dot_golden(capsys):
    code, out, _ = run(capsys, "hasse", "--type", "G2")
    assert code == 0
    assert out == (GOLDEN / "hasse_G2.dot").read_text()


def test_dot_structure(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "F4", "--format", "dot")
    assert code == 0
    assert out.startswith('digraph "Ab(F4)" {') and out.rstrip().endswith("}")
    assert out.count("[label=") == 16
    assert out.count(" -> ") == len(poset(build("F4")).edges)


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "B3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "N = 8 = 2^3"
    assert len(lines) == 9


@pytest.mark.parametrize("name", ["A3", "C3", "F4", "G2"])
def test_enumerate_json_round_trip(capsys, name):
    rs = build(name)
    code, out, _ = run(capsys, "enumerate", "--type", name, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"type", "ideals", "edges"}
    assert data["type"] == name and len(data["ideals"]) == 2 ** rs.rank
    p = poset(rs)
    for rec, I in zip(data["ideals"], p.ideals):
        assert set(rec) == {"roots", "word", "rootlet", "generators"}
        roots = {parse_coords(r, rs.rank) for r in rec["roots"]}
        assert roots == I.root_set
        assert same_element(rs, parse_word(rec["word"]), I.word)
    assert {tuple(e) for e in data["edges"]} == {(e.lower, e.upper) for e in p.edges}


def test_fiber_json(capsys):
    code, out, _ = run(capsys, "fiber", "--type", "F4", "--mu", "0010", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"mu", "size", "min", "max", "members", "w_mu", "gamma_nodes", "M_mu", "checks"}
    assert data["size"] == 2 and len(data["members"]) == 2
    assert data["max"]["rootlet"] == "0010" and len(data["max"]["roots"]) == 9
    assert all(data["checks"].values())


def test_fiber_text_with_label(capsys):
    code, out, _ = run(capsys, "fiber", "--type", "C4", "--mu", "2e3", "--label")
    assert code == 0
    assert "size: 4" in out
    assert "(2e3)" in out


def test_fiber_coords_and_label_give_same_fibre(capsys):
    rs = build("D5")
    mu = rs.simple_roots[2]
    _, by_coords, _ = run(capsys, "fiber", "--type", "D5", "--mu", "00100", "--coords")
    _, by_label, _ = run(capsys, "fiber", "--type", "D5", "--mu", "e3-e4")
    assert by_coords == by_label
    assert f"size: {fiber_reports(poset(rs))[mu].size}" in by_coords


@pytest.mark.parametrize("argv", [
    ["fiber", "--type", "F4"],
    ["fiber", "--type", "F4", "--mu", "1000"],
    ["fiber", "--type", "F4", "--mu", "9999"],
    ["fiber", "--type", "F4", "--mu", "e1-e2", "--label"],
    ["enumerate"],
    ["enumerate", "--type", "Q7"],
    ["ferrers", "--type", "B3"],
    ["ferrers", "--type", "A5", "--rows", "2,3"],
    ["ferrers", "--type", "A9", "--generators", "(1,5) (1,7)"],
    ["tables", "--type", "A2", "--format", "json"],
    ["nonsense"],
    ["fiber", "--type", "A2", "--mu", "11", "--coords", "--label"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejections
        code = exc.code
    _, err = capsys.readouterr()
    assert code == 2
    assert err


def test_check_passes_and_is_deterministic(capsys):
    code, out1, _ = run(capsys, "check", "--type", "F4")
    assert code == 0
    _, out2, _ = run(capsys, "check", "--type", "F4")
    assert out1 == out2
    assert "== F4: PASS" in out1
    assert "verified computationally (no general proof known)" in out1
    assert "s)" not in out1.splitlines()[0]
    _, timed, _ = run(capsys, "check", "--type", "F4", "--timing")
    assert timed.splitlines()[0].endswith("s)")


def test_check_failure_exit_1(capsys, monkeypatch):
    import abideals.cli as cli
    from abideals.checks import CheckResult, TypeReport

    def broken(name):
        bad = CheckResult("peterson_count", False, "planted")
        return TypeReport(str(name), [bad], [], 0.0)

    monkeypatch.setattr(cli, "run_checks", broken)
    code, out, _ = run(capsys, "check", "--type", "A2")
    assert code == 1
    assert "FAIL peterson_count" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--type", "G2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["type"] == "G2" and data[0]["passed"]
    assert any(c["name"] == "g2_list" for c in data[0]["checks"])


def test_ferrers_command(capsys):
    code, out, _ = run(capsys, "ferrers", "--type", "A9", "--rows", "5,7,8,9")
    assert code == 0
    assert "w=s0(s2s1)(s8s9)s0(s3s2s1)(s5s6s7s8s9)s0" in out
    code, out2, _ = run(capsys, "ferrers", "--type", "A9", "--generators", "(1,5) (2,7) (3,8) (4,9)")
    assert out2 == out
    code, out, _ = run(capsys, "ferrers", "--type", "A3", "--rows", "3,4", "--cell-labels")
    assert "s3" in out and "s1" in out
    code, out, _ = run(capsys, "ferrers", "--type", "A4", "--mu", "(2,4)", "--format", "json")
    data = json.loads(out)
    assert len(data) == comb(5 + 2 - 4 - 1, 1) == 2
    code, out, _ = run(capsys, "ferrers", "--type", "A3")
    assert out.count("row starts") == 7


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "g2.dot"
    code, out, _ = run(capsys, "hasse", "--type", "G2", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "hasse_G2.dot").read_text()


def test_exports_are_deterministic():
    p = poset(build("E6"))
    assert export.dumps(export.poset_to_dict(p)) == export.dumps(export.poset_to_dict(p))
    assert export.to_dot(p) == export.to_dot(p)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "abideals", "enumerate", "--type", "A1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("N = 2 = 2^1")
