import csv
import io
import json

import pytest

from letf.bench import (
    CSV_COLUMNS,
    GenSpec,
    InvalidSpec,
    SequentShape,
    VerdictMismatch,
    bench_sequent,
    generate_sequents,
    load_specs,
    run_bench,
    to_csv,
)
from letf.corpus import Sequent, bundled_corpus
from letf.formula import Bullet, Circ, Neg, atoms, depth, parse, subformulas


def test_generation_is_deterministic():
    spec = GenSpec(seed=1)
    assert generate_sequents(spec, 3) == generate_sequents(GenSpec(seed=1), 3)
    assert generate_sequents(spec, 3) != generate_sequents(GenSpec(seed=2), 3)


def test_single_atom_depth_zero():
    seqs = generate_sequents(GenSpec(seed=5, atom_count=1, max_depth=0), 20)
    for s in seqs:
        for f in (*s.premises, s.conclusion):
            assert f == parse("p")


def test_respects_depth_and_atoms():
    spec = GenSpec(seed=3, atom_count=2, max_depth=3, sequent_shape=SequentShape(premise_count=3))
    for s in generate_sequents(spec, 200):
        assert len(s.premises) <= 3
        for f in (*s.premises, s.conclusion):
            assert depth(f) <= 3
            assert atoms(f) <= {"p", "q"}


def test_zero_weights_exclude_connectives():
    spec = GenSpec(seed=4, connective_weights={"neg": 1, "and": 1, "or": 1, "circ": 0, "bullet": 0})
    for s in generate_sequents(spec, 200):
        for f in (*s.premises, s.conclusion):
            assert not any(isinstance(g, (Circ, Bullet)) for g in subformulas(f))


@pytest.mark.parametrize(
    "kwargs",
    [
        {"atom_count": 0},
        {"max_depth": -1},
        {"connective_weights": {"neg": 0, "and": 0, "or": 0, "circ": 0, "bullet": 0}},
        {"connective_weights": {"neg": -1}},
        {"connective_weights": {"xor": 1}},
        {"sequent_shape": SequentShape(conclusion="other")},
    ],
)
def test_invalid_specs(kwargs):
    with pytest.raises(InvalidSpec):
        generate_sequents(GenSpec(**kwargs), 1)


def test_n_must_be_positive():
    with pytest.raises(InvalidSpec):
        generate_sequents(GenSpec(), 0)


def test_load_specs():
    specs = load_specs(json.dumps([
        {"seed": 7, "atom_count": 2, "connective_weights": {"circ": 0, "bullet": 0},
         "sequent_shape": {"premise_count": 1}},
        {"seed": 8},
    ]))
    assert specs[0].connective_weights == {"neg": 1.0, "and": 1.0, "or": 1.0, "circ": 0, "bullet": 0}
    assert specs[0].sequent_shape.premise_count == 1
    assert specs[1].seed == 8
    with pytest.raises(InvalidSpec):
        load_specs('{"bogus": 1}')


def test_run_bench_agrees():
    spec = GenSpec(seed=11, atom_count=2, max_depth=3, sequent_shape=SequentShape(premise_count=2))
    records = run_bench([spec], 100)
    assert len(records) == 100
    for r in records:
        assert r.skipped is None
        assert r.tableau_verdict == r.matrix_verdict
        assert r.tableau_nodes >= 1 and r.matrix_columns >= 0


def test_fde_explosion_shape_is_never_provable():
    spec = GenSpec(
        seed=12,
        atom_count=3,
        max_depth=3,
        connective_weights={"neg": 1, "and": 1, "or": 1, "circ": 0, "bullet": 0},
        sequent_shape=SequentShape(contradictory=True, conclusion="fresh"),
    )
    records = run_bench([spec], 100)
    assert all(r.verdict == "not_provable" for r in records)
    for r in records:
        a, na = r.sequent.premises
        assert na == Neg(a)


def test_corpus_as_bench_matches_expected():
    for e in bundled_corpus():
        if e.kind != "sequent":
            continue
        r = bench_sequent(0, e.sequent)
        assert r.verdict == e.expected


def test_cap_exceeded_is_skipped():
    seq = Sequent(tuple(parse(f"a{i}") for i in range(6)), parse("z"))
    r = bench_sequent(0, seq, cap=4)
    assert r.skipped and r.verdict == "skipped"
    assert r.matrix_columns is None


def test_mismatch_is_fatal(monkeypatch):
    import letf.bench as bench

    monkeypatch.setattr(bench, "prove", lambda premises, conclusion: _FakeProof())
    with pytest.raises(VerdictMismatch):
        bench.bench_sequent(0, Sequent((), parse("p")))


class _FakeProof:
    tableau = ()

    def __bool__(self):
        return True


def test_csv_is_well_formed():
    records = run_bench([GenSpec(seed=13, max_depth=2)], 20)
    rows = list(csv.reader(io.StringIO(to_csv(records))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 21
    for row in rows[1:]:
        assert len(row) == len(CSV_COLUMNS)
        assert row[2] in ("provable", "not_provable")
        float(row[3]), int(row[4]), float(row[5]), int(row[6])
