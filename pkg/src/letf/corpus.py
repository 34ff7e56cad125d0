"""Sequents and the one-line-per-entry corpus format.

::

    p, ~p | q |- q            => not_provable   # disjunctive syllogism
    |- @p | #p                => provable
    sat @p, @q, p & q, ~(p & q) => unsatisfiable

A ``#`` followed by whitespace (or ending the line) starts a comment;
``#p`` with no space is the non-classicality operator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .formula import Formula, ParseError, parse, parse_list, render

VERDICTS = {"provable", "not_provable", "satisfiable", "unsatisfiable"}
_COMMENT = re.compile(r"#(?=\s|$)")
_TURNSTILE = re.compile(r"\|-|⊢")


@dataclass(frozen=True)
class Sequent:
    premises: tuple[Formula, ...]
    conclusion: Formula

    def render(self, style: str = "ascii") -> str:
        turnstile = "⊢" if style == "unicode" else "|-"
        lhs = ", ".join(render(f, style) for f in self.premises)
        return f"{lhs} {turnstile} {render(self.conclusion, style)}".strip()

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class CorpusEntry:
    kind: str  # "sequent" or "sat"
    formulas: tuple[Formula, ...]  # premises, or the set to test for satisfiability
    conclusion: Optional[Formula]
    expected: Optional[str]
    note: str = ""
    line: int = 0

    @property
    def sequent(self) -> Sequent:
        assert self.conclusion is not None
        return Sequent(self.formulas, self.conclusion)

    def render(self, style: str = "ascii") -> str:
        if self.kind == "sat":
            return "sat " + ", ".join(render(f, style) for f in self.formulas)
        return self.sequent.render(style)


class CorpusError(ValueError):
    pass


def parse_sequent(text: str) -> Sequent:
    parts = _TURNSTILE.split(text)
    if len(parts) != 2:
        raise ParseError("expected exactly one '|-'", 0, text)
    lhs, rhs = parts
    return Sequent(tuple(parse_list(lhs)), parse(rhs))


def parse_entry(line: str, lineno: int = 0) -> Optional[CorpusEntry]:
    m = _COMMENT.search(line)
    note = ""
    if m:
        note = line[m.end():].strip()
        line = line[: m.start()]
    line = line.strip()
    if not line:
        return None
    expected = None
    if "=>" in line:
        line, expected = (s.strip() for s in line.rsplit("=>", 1))
        if expected not in VERDICTS:
            raise CorpusError(f"line {lineno}: unknown verdict {expected!r}")
    try:
        if line.startswith("sat ") or line == "sat":
            if expected in ("provable", "not_provable"):
                raise CorpusError(f"line {lineno}: sat entries expect satisfiable/unsatisfiable")
            return CorpusEntry("sat", tuple(parse_list(line[3:])), None, expected, note, lineno)
        if expected in ("satisfiable", "unsatisfiable"):
            raise CorpusError(f"line {lineno}: sequents expect provable/not_provable")
        seq = parse_sequent(line)
    except ParseError as e:
        raise CorpusError(f"line {lineno}: {e}") from e
    return CorpusEntry("sequent", seq.premises, seq.conclusion, expected, note, lineno)


def parse_corpus(text: str) -> list[CorpusEntry]:
    out = []
    for n, line in enumerate(text.splitlines(), 1):
        e = parse_entry(line, n)
        if e is not None:
            out.append(e)
    return out


def bundled_corpus_text() -> str:
    return resources.files("letf").joinpath("data/worked_examples.corpus").read_text(encoding="utf-8")


def bundled_corpus() -> list[CorpusEntry]:
    return parse_corpus(bundled_corpus_text())


@dataclass(frozen=True)
class EntryResult:
    entry: CorpusEntry
    verdict: str
    result: object  # ProofResult, or Satisfiable/Unsatisfiable

    @property
    def passed(self) -> bool:
        return self.entry.expected is None or self.entry.expected == self.verdict


def run_entry(entry: CorpusEntry) -> EntryResult:
    from .tableau import check_sat, prove

    if entry.kind == "sat":
        res = check_sat(entry.formulas)
        return EntryResult(entry, "satisfiable" if res else "unsatisfiable", res)
    res = prove(entry.formulas, entry.conclusion)
    return EntryResult(entry, "provable" if res else "not_provable", res)


def run_corpus(entries: list[CorpusEntry]) -> list[EntryResult]:
    return [run_entry(e) for e in entries]
