import csv
import io
import json

import pytest

from letf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_prove_example19(capsys):
    code, out, _ = run(capsys, "prove", "", "@p | #p")
    assert code == 0
    assert out.startswith("provable\n")
    assert "X 2, 4" in out


def test_prove_not_provable_prints_countermodel(capsys):
    code, out, _ = run(capsys, "prove", "p, ~p | q", "q")
    assert code == 1
    assert "v(p) = 1" in out and "v(~p) = 1" in out and "v(q) = 0" in out


def test_prove_prune(capsys):
    code, out, _ = run(capsys, "prove", "q, bot(p)", "r", "--prune")
    assert code == 0
    assert "used premises: p & ~p & @p" in out


def test_prove_json(capsys):
    code, out, _ = run(capsys, "prove", "p, ~p | q", "q", "--format", "json")
    data = json.loads(out)
    assert code == 1
    assert data["verdict"] == "not_provable"
    assert data["countermodel"]["assignment"] == {"p": 1, "q": 0, "~p": 1}


def test_prove_dot(capsys):
    code, out, _ = run(capsys, "prove", "", "@p | #p", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_countermodel(capsys):
    code, out, _ = run(capsys, "countermodel", "p | ~p", "@p", "--unicode")
    assert code == 1
    assert "conclusion ∘p ↦ 0" in out
    code, out, _ = run(capsys, "countermodel", "@p", "p | ~p")
    assert code == 0 and "no countermodel" in out


def test_sat(capsys):
    code, out, _ = run(capsys, "sat", "@p, @q, p & q, ~(p & q)")
    assert code == 1 and out.startswith("unsatisfiable")
    code, out, _ = run(capsys, "sat", "p, ~p")
    assert code == 0 and "v(p) = 1" in out and "v(~p) = 1" in out
    code, out, _ = run(capsys, "sat", "p", "--format", "json")
    assert json.loads(out)["witness"] == {"p": 1}


def test_matrix_example3(capsys):
    code, out, _ = run(capsys, "matrix", "p, ~p, p|~p, @p, ~@p")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert lines[-1].split() == [f"v{i}" for i in range(1, 13)]


def test_matrix_csv_and_json(capsys):
    code, out, _ = run(capsys, "matrix", "p, @p", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "formula" and len(rows[0]) == 7
    code, out, _ = run(capsys, "matrix", "p", "--format", "json")
    assert json.loads(out)["cells"] == [[0, 1]]


def test_matrix_cap(capsys):
    code, out, err = run(capsys, "matrix", "a, b, c, d, e", "--cap", "3")
    assert code == 3 and out == "" and "cap" in err


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "prove", "p &", "q")
    assert code == 2
    assert out == ""
    assert "position" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_corpus_run_bundled(capsys):
    code, out, _ = run(capsys, "corpus", "run")
    assert code == 0
    assert "FAIL" not in out
    assert out.strip().endswith("entries pass")


def test_corpus_run_reports_failures(capsys, tmp_path):
    f = tmp_path / "c.corpus"
    f.write_text("p |- p => provable\np |- q => provable\n", encoding="utf-8")
    code, out, _ = run(capsys, "corpus", "run", str(f))
    assert code == 1
    assert "FAIL  line   2" in out
    code, out, _ = run(capsys, "corpus", "run", str(f), "--format", "json")
    assert json.loads(out)["failures"] == 1


def test_corpus_run_bad_file(capsys, tmp_path):
    f = tmp_path / "c.corpus"
    f.write_text("p |- => provable\n", encoding="utf-8")
    code, out, err = run(capsys, "corpus", "run", str(f))
    assert code == 2 and out == ""
    code, out, err = run(capsys, "corpus", "run", str(tmp_path / "missing"))
    assert code == 2 and out == ""


def test_bench(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"seed": 3, "atom_count": 2, "max_depth": 3}), encoding="utf-8")
    code, out, _ = run(capsys, "bench", str(spec), "-n", "15")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["seed", "sequent_text", "verdict", "tableau_ms", "tableau_nodes", "matrix_ms", "matrix_columns"]
    assert len(rows) == 16
    code, out2, _ = run(capsys, "bench", str(spec), "-n", "15", "--seed", "3")
    assert [r[1] for r in csv.reader(io.StringIO(out2))] == [r[1] for r in rows]


def test_bench_bad_spec(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text('{"atom_count": 0}', encoding="utf-8")
    code, out, err = run(capsys, "bench", str(spec))
    assert code == 2 and out == ""
