import pytest

from letf.corpus import CorpusError, bundled_corpus, parse_corpus, parse_entry, parse_sequent, run_corpus
from letf.formula import Bullet, Circ, Or, parse, parse_list


def test_parse_entry():
    e = parse_entry("p, ~p | q |- q => not_provable   # disjunctive syllogism")
    assert e.kind == "sequent"
    assert e.formulas == tuple(parse_list("p, ~p | q"))
    assert e.conclusion == parse("q")
    assert e.expected == "not_provable"
    assert e.note == "disjunctive syllogism"


def test_hash_without_space_is_bullet():
    e = parse_entry("#p |- ~@p")
    assert e.formulas == (Bullet(parse("p")),)
    assert e.expected is None


def test_empty_premises():
    e = parse_entry("|- @p | #p => provable")
    assert e.formulas == ()
    assert e.conclusion == Or(Circ(parse("p")), Bullet(parse("p")))


def test_unicode_turnstile():
    s = parse_sequent("∘p ⊢ p ∨ ¬p")
    assert s.render() == "@p |- p | ~p"
    assert s.render("unicode") == "∘p ⊢ p ∨ ¬p"


def test_sat_entries():
    e = parse_entry("sat @p, @q, p & q, ~(p & q) => unsatisfiable")
    assert e.kind == "sat" and len(e.formulas) == 4


@pytest.mark.parametrize(
    "line",
    [
        "p |- q => maybe",
        "p |- q => unsatisfiable",
        "sat p => provable",
        "p |- q |- r",
        "p q |- r",
        "p",
    ],
)
def test_bad_entries(line):
    with pytest.raises(CorpusError):
        parse_entry(line, 3)


def test_comments_and_blanks_skipped():
    entries = parse_corpus("# header\n\n   \np |- p => provable # ok\n#\n")
    assert len(entries) == 1 and entries[0].line == 4


def test_bundled_corpus_passes():
    results = run_corpus(bundled_corpus())
    assert len(results) >= 30
    assert all(r.passed for r in results)
    assert all(r.entry.expected is not None for r in results)
