import json
import subprocess
import sys

import pytest

from critdaha import cli, suites
from critdaha.report import CaseRecord


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "critdaha", *args], capture_output=True, text=True)


def test_a1_relations_json():
    p = run_cli("verify", "--family", "A", "--rank", "1", "--twist", "untwisted",
                "--suites", "relations", "--format", "json")
    assert p.returncode == 0
    (line,) = p.stdout.strip().splitlines()
    doc = json.loads(line)
    assert set(doc) >= {"suite", "spec", "seed", "cases", "timing_ms"}
    assert doc["spec"] == {"family": "A", "rank": 1, "twist": "untwisted"}
    assert all(c["status"] in ("pass", "vacuous") for c in doc["cases"])
    assert all(set(c) >= {"id", "relation", "params", "status"} for c in doc["cases"])


def test_g2_trivial_omega_is_vacuous():
    p = run_cli("verify", "--family", "G", "--rank", "2", "--twist", "twisted", "--suites", "omega")
    assert p.returncode == 0
    assert "[vacuous]" in p.stdout and "omega-descent" in p.stdout


def test_b2_triangularity():
    p = run_cli("verify", "--family", "B", "--rank", "2", "--suites", "triangularity",
                "--max-length", "4", "--format", "json")
    assert p.returncode == 0
    doc = json.loads(p.stdout)
    flags = [c["params"] for c in doc["cases"] if c["relation"] == "triangular"]
    assert len(flags) == 56
    assert all(f["support_in_ideal"] and f["leading_nonzero"] and f["leading_unit"] for f in flags)


def test_reports_are_deterministic():
    args = ("verify", "--family", "A", "--rank", "2", "--suites", "relations,omega,pbw",
            "--seed", "5", "--specialize", "--format", "json", "--no-timing")
    a, b = run_cli(*args), run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_text_and_json_describe_the_same_cases(capsys):
    base = ["verify", "--family", "C", "--rank", "2", "--twist", "twisted",
            "--suites", "omega,parabolic", "--no-timing"]
    assert cli.main(base + ["--format", "json"]) == 0
    docs = [json.loads(x) for x in capsys.readouterr().out.strip().splitlines()]
    json_ids = [(c["id"], c["status"]) for d in docs for c in d["cases"]]
    assert cli.main(base + ["--format", "text"]) == 0
    text = capsys.readouterr().out
    text_ids = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("[") and "]" in line:
            status, rest = line[1:].split("]", 1)
            text_ids.append((rest.split()[0], status.strip()))
    assert text_ids == json_ids


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "A", "--rank", "0"],
    ["verify", "--family", "G", "--rank", "3"],
    ["verify", "--family", "A", "--rank", "1", "--suites", "nonsense"],
    ["verify", "--family", "A", "--rank", "1", "--box", "0"],
    ["verify", "--family", "A", "--rank", "1", "--level", "-1"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_failure_exit_status(monkeypatch, capsys):
    def broken(rs, cfg, ring=None):
        report = suites._new_report("omega", rs, cfg, suites.make_ring(rs, cfg))
        report.add(CaseRecord("omega", {}, "fail", "injected"))
        return report

    monkeypatch.setitem(suites.RUNNERS, "omega", broken)
    assert cli.main(["verify", "--family", "A", "--rank", "1", "--suites", "omega"]) == 1
    assert "injected" in capsys.readouterr().out
