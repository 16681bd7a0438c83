import csv
import io
import json
import subprocess
import sys

import pytest

from specham.cli import main, parse_range
from specham.codec import parse_graph6
from specham.extremal import build_en, build_ep


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_range():
    assert parse_range("10..12") == [10, 11, 12]
    assert parse_range("5,7,9..10") == [5, 7, 9, 10]


def test_build_then_report(tmp_path, capsys):
    path = tmp_path / "ep20.g6"
    code, _, _ = run(capsys, "build", "--spec", "ep:20", "--out", str(path))
    assert code == 0
    assert parse_graph6(path.read_text()) == build_ep(20)
    code, out, _ = run(capsys, "report", "--in", str(path))
    assert code == 0
    row, = json.loads(out)
    assert row["mu"] > 13 and row["n"] == 20


def test_edgelist_output_and_input(tmp_path, capsys):
    path = tmp_path / "en.txt"
    assert run(capsys, "build", "--spec", "en:8", "--format", "edgelist", "--out",
               str(path))[0] == 0
    code, out, _ = run(capsys, "hamilton", "--in", str(path), "--kind", "path")
    assert code == 0 and json.loads(out)[0]["status"] == "absent"


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--kind", "all", "--n", "10..40", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["n"]) for r in rows] == list(range(10, 41))
    assert all(r["pass_adjacency"] == r["pass_q_index"] == r["pass_complement"] == "True"
               for r in rows)
    assert list(rows[0])[:10] == ["n", "mu_ep", "mu_ep_prime", "n_minus_7", "q_ep",
                                  "q_ep_prime", "two_n_minus_14", "mu_co_ep_prime",
                                  "mu_co_ep", "k6_join_bound"]


def test_markdown_table(capsys):
    code, out, _ = run(capsys, "table", "--n", "10..11", "--format", "md")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("| n |") and len(lines) == 4


def test_exhaustive_scan(capsys):
    code, out, _ = run(capsys, "scan", "--n", "6", "--id", "fini-trace")
    assert code == 0
    assert json.loads(out)[0]["counterexample_count"] == 0


def test_random_scan_determinism(capsys):
    args = ("scan", "--n", "8..11", "--id", "L_eG(4)", "--random", "20", "--seed", "3",
            "--mode", "closure_perturbed")
    first = run(capsys, *args)
    assert first[0] == 0
    assert run(capsys, *args) == first


def test_verify_counterexample_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--spec", "en:14", "--id", "L_eG_EPn")
    assert code == 4
    assert json.loads(out)[0]["status"] == "counterexample"


def test_verify_spec_range(capsys):
    code, out, _ = run(capsys, "verify", "--spec", "ep:10..12", "--id", "L_EPn",
                       "--id", "L_dudv")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 6


def test_closure_outputs(tmp_path, capsys):
    src = tmp_path / "g.txt"
    src.write_text("n=4\n0 1\n0 2\n0 3\n1 2\n2 3\n")
    dest, trace = tmp_path / "cl.g6", tmp_path / "trace.json"
    code, _, _ = run(capsys, "closure", "--in", str(src), "--out", str(dest), "--trace",
                     str(trace))
    assert code == 0
    assert parse_graph6(dest.read_text()).edge_count == 6
    assert json.loads(trace.read_text())[0]["final_edges"] == 6


def test_closure_of_claw_is_a_precondition_failure(tmp_path, capsys):
    src = tmp_path / "claw.txt"
    src.write_text("0 1\n0 2\n0 3\n")
    assert run(capsys, "closure", "--in", str(src))[0] == 3


def test_brackets_exit_codes(capsys):
    code, out, _ = run(capsys, "brackets", "--kind", "q_index", "--upto", "40")
    assert code == 0 and len(json.loads(out)) == 14
    assert run(capsys, "brackets", "--kind", "adjacency", "--n", "12..16")[0] == 0
    assert run(capsys, "brackets", "--kind", "adjacency", "--n", "17..18")[0] == 4


def test_polys(capsys):
    assert run(capsys, "polys", "--n", "10..12", "--reading", "corrected")[0] == 0
    code, out, _ = run(capsys, "polys", "--n", "20")
    assert code == 4
    typos = {r["family"] for r in json.loads(out) if r["typo"]}
    assert typos == {"QEPPrime", "CoAdjEP"}


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--n", "10")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 7
    assert all(r["hamilton_cycle"] == "absent" and r["claw_free"] for r in rows)


@pytest.mark.parametrize("argv, expected", [
    (["build", "--spec", "foo:3"], 2),
    (["build", "--spec", "en:3"], 3),
    (["report", "--in", "/nonexistent/graph.g6"], 2),
    (["verify", "--spec", "ep:10", "--id", "nope"], 2),
    (["scan", "--n", "9", "--id", "FiNi_trace"], 3),
    (["table", "--n", "5..12"], 3),
    (["hamilton", "--spec", "ep:16", "--budget", "3"], 5),
])
def test_exit_codes(capsys, argv, expected):
    assert run(capsys, *argv)[0] == expected


def test_bad_graph6_input(tmp_path, capsys):
    src = tmp_path / "bad.g6"
    src.write_text("C\n")
    assert run(capsys, "report", "--in", str(src))[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--kind", "bogus"])
    assert exc.value.code == 2


def test_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("SPECHAM_BUDGET", "3")
    assert run(capsys, "hamilton", "--spec", "ep:16")[0] == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "specham", "build", "--spec", "en:6"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert parse_graph6(proc.stdout) == build_en(6)
