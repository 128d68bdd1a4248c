import io
import json

import pytest

from threecol.cli import main, parse_certificate
from threecol.graph import parse_dimacs
from threecol.oracle import verify_coloring

K4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"
C5 = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n"


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    (tmp_path / "k4.col").write_text(K4)
    (tmp_path / "c5.col").write_text(C5)
    return tmp_path


def test_solve_k4(files):
    assert run(["solve", "--input", str(files / "k4.col")]) == (0, "NOT_COLORABLE\n")


def test_solve_certificate_and_verify(files):
    code, text = run(["solve", "--input", str(files / "c5.col"), "--certificate"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "COLORABLE"
    assert all(line.startswith("v ") for line in lines[1:]) and len(lines) == 6
    assert verify_coloring(parse_dimacs(C5), parse_certificate(text))
    (files / "c5.cert").write_text(text)
    assert run(["verify", "--input", str(files / "c5.col"), "--coloring", str(files / "c5.cert")]) \
        == (0, "PROPER\n")
    (files / "bad.cert").write_text("v 1 1\nv 2 1\nv 3 2\nv 4 1\nv 5 2\n")
    assert run(["verify", "--input", str(files / "c5.col"), "--coloring", str(files / "bad.cert")]) \
        == (0, "IMPROPER\n")


def test_solve_json(files):
    code, text = run(["solve", "--input", str(files / "c5.col"), "--stats", "json",
                      "--certificate", "--oracle-cutoff", "1"])
    data = json.loads(text)
    assert code == 0 and data["decision"] == "COLORABLE"
    assert set(data["stats"]) >= {"engine_nodes", "csp_nodes", "case2_enums", "elapsed"}
    assert data["guarantee_held"] is True
    assert len(data["certificate"]) == 5


def test_solve_text_stats(files):
    code, text = run(["solve", "--input", str(files / "k4.col"), "--stats", "text"])
    assert "c engine_nodes 1" in text


def test_gen_deterministic(files):
    a, b = files / "a.col", files / "b.col"
    for path in (a, b):
        assert run(["gen", "--model", "min-degree", "--n", "30", "--delta", "8",
                    "--seed", "7", "--out", str(path)])[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert parse_dimacs(a.read_bytes()).min_degree() >= 8


def test_gen_stdout():
    code, text = run(["gen", "--model", "planted", "--n", "12", "--delta", "3"])
    assert code == 0 and text.startswith("p edge 12 ")


def test_csp_command(tmp_path):
    p = tmp_path / "x.csp"
    p.write_text("csp32 2\nd 1 1 2\nd 2 1 2\nf 1 1 2 1\nf 1 2 2 2\n")
    code, text = run(["csp", "--input", str(p)])
    assert code == 0 and text == "SAT\nx 1 1\nx 2 2\n"
    p.write_text("csp32 2\nd 1 1\nd 2 1\nf 1 1 2 1\n")
    assert run(["csp", "--input", str(p)]) == (0, "UNSAT\n")


def test_bench_command(tmp_path):
    out = tmp_path / "b.csv"
    code, text = run(["bench", "--sizes", "20", "--seeds", "2", "--out", str(out)])
    assert code == 0 and text == ""
    assert len(out.read_text().splitlines()) == 3


def test_exit_codes(files, tmp_path, capsys):
    assert run(["solve", "--input", str(tmp_path / "missing.col")])[0] == 1
    (tmp_path / "bad.col").write_text("p edge 2 1\ne 1 1\n")
    assert run(["solve", "--input", str(tmp_path / "bad.col")])[0] == 1
    assert "line 2" in capsys.readouterr().err
    assert run(["frobnicate"])[0] == 1
    assert run(["solve", "--input", str(files / "c5.col"), "--alpha", "0.7"])[0] == 1
    path = tmp_path / "p.col"
    path.write_text("p edge 12 11\n" + "".join(f"e {i} {i + 1}\n" for i in range(1, 12)))
    assert run(["solve", "--input", str(path), "--oracle-cutoff", "1", "--node-limit", "1"])[0] == 2
