"""Formula AST, surface syntax, complexity and generalized subformulas.

Surface syntax (ASCII with Unicode aliases)::

    ~A  ¬A      negation
    @A  ∘A      classicality
    #A  •A      non-classicality
    A & B       A ∧ B
    A | B       A ∨ B
    A -> B      A → B     sugar for ~A | B (right associative)
    sim A       ∼A        sugar for @A & ~A
    approx A    ≈A        sugar for #A | ~A
    bot(p)      ⊥(p)      sugar for p & ~p & @p

Prefix operators bind tightest, then ``&``, then ``|``, then ``->``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union


class Formula:
    """Base class of the formula AST. Concrete nodes are frozen dataclasses."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class Neg(Formula):
    sub: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Circ(Formula):
    sub: Formula


@dataclass(frozen=True, slots=True)
class Bullet(Formula):
    sub: Formula


Unary = Union[Neg, Circ, Bullet]
Binary = Union[And, Or]


class Sign(enum.IntEnum):
    ZERO = 0
    ONE = 1

    def flip(self) -> Sign:
        return Sign(1 - self)

    def __str__(self) -> str:
        return str(int(self))


@dataclass(frozen=True, slots=True)
class SignedFormula:
    sign: Sign
    formula: Formula

    @property
    def conjugate(self) -> SignedFormula:
        return SignedFormula(self.sign.flip(), self.formula)

    def render(self, style: str = "ascii") -> str:
        return f"{self.sign}({render(self.formula, style)})"

    def __str__(self) -> str:
        return self.render()


def one(f: Formula) -> SignedFormula:
    return SignedFormula(Sign.ONE, f)


def zero(f: Formula) -> SignedFormula:
    return SignedFormula(Sign.ZERO, f)


# -- sugar -----------------------------------------------------------------

def implies(a: Formula, b: Formula) -> Formula:
    return Or(Neg(a), b)


def sim(a: Formula) -> Formula:
    """Supplementing quasi-negation."""
    return And(Circ(a), Neg(a))


def approx(a: Formula) -> Formula:
    """Complementing quasi-negation."""
    return Or(Bullet(a), Neg(a))


def bottom(name: str) -> Formula:
    p = Atom(name)
    return And(And(p, Neg(p)), Circ(p))


# -- parsing ---------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.message = message
        self.pos = pos
        self.text = text


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<imp>->|→)
  | (?P<and>&|∧)
  | (?P<or>\|(?!-)|∨)
  | (?P<neg>~|¬)
  | (?P<circ>@|∘)
  | (?P<bullet>\#|•)
  | (?P<sim>∼)
  | (?P<approx>≈)
  | (?P<bot>⊥)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<comma>,)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

KEYWORDS = {"sim", "approx", "bot"}
_PREFIX = {"neg": Neg, "circ": Circ, "bullet": Bullet, "sim": sim, "approx": approx}


@dataclass(frozen=True, slots=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        assert kind is not None
        if kind != "ws":
            word = m.group()
            if kind == "ident" and word in KEYWORDS:
                kind = word
            toks.append(_Tok(kind, word, pos))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> _Tok:
        if self.tok.kind != kind:
            self.fail(f"expected {what}")
        return self.advance()

    def fail(self, message: str):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"{message}, found {found}", t.pos, self.text)

    def formula(self) -> Formula:
        left = self.disj()
        if self.tok.kind == "imp":
            self.advance()
            return implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.tok.kind == "or":
            self.advance()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.tok.kind == "and":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        t = self.tok
        if t.kind in _PREFIX:
            self.advance()
            return _PREFIX[t.kind](self.unary())
        if t.kind == "ident":
            self.advance()
            return Atom(t.text)
        if t.kind == "bot":
            self.advance()
            self.expect("lpar", "'(' after bot")
            name = self.expect("ident", "an atom name").text
            self.expect("rpar", "')'")
            return bottom(name)
        if t.kind == "lpar":
            self.advance()
            f = self.formula()
            self.expect("rpar", "')'")
            return f
        self.fail("expected a formula")


def parse(text: str) -> Formula:
    """Parse one formula, desugaring ``->``, ``sim``, ``approx`` and ``bot``."""
    p = _Parser(text)
    if p.tok.kind == "eof":
        raise ParseError("empty formula", 0, text)
    f = p.formula()
    if p.tok.kind != "eof":
        p.fail("unexpected trailing input")
    return f


def parse_list(text: str) -> list[Formula]:
    """Parse a comma separated list of formulas; blank text gives ``[]``."""
    p = _Parser(text)
    if p.tok.kind == "eof":
        return []
    out = [p.formula()]
    while p.tok.kind == "comma":
        p.advance()
        out.append(p.formula())
    if p.tok.kind != "eof":
        p.fail("expected ',' or end of input")
    return out


# -- rendering -------------------------------------------------------------

_SYMBOLS = {
    "ascii": {Neg: "~", Circ: "@", Bullet: "#", And: " & ", Or: " | "},
    "unicode": {Neg: "¬", Circ: "∘", Bullet: "•", And: " ∧ ", Or: " ∨ "},
}
_PREC = {And: 2, Or: 1}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 3)


def render(f: Formula, style: str = "ascii") -> str:
    """Render with the fewest parentheses that still parse back to ``f``."""
    try:
        sym = _SYMBOLS[style]
    except KeyError:
        raise ValueError(f"unknown style {style!r}") from None
    return _render(f, sym)


def _render(f: Formula, sym: dict) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, (Neg, Circ, Bullet)):
        inner = _render(f.sub, sym)
        if _prec(f.sub) < 3:
            inner = f"({inner})"
        return sym[type(f)] + inner
    prec = _prec(f)
    left = _render(f.left, sym)
    right = _render(f.right, sym)
    # binary operators are left associative
    if _prec(f.left) < prec:
        left = f"({left})"
    if _prec(f.right) <= prec:
        right = f"({right})"
    return left + sym[type(f)] + right


# -- measures --------------------------------------------------------------

@lru_cache(maxsize=None)
def complexity(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Neg):
        return complexity(f.sub) + 1
    if isinstance(f, Circ):
        return complexity(f.sub) + 2
    if isinstance(f, Bullet):
        return complexity(f.sub) + 3
    return complexity(f.left) + complexity(f.right) + 1


def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, Atom):
        return ()
    if isinstance(f, (And, Or)):
        return (f.left, f.right)
    return (f.sub,)


def subformulas(f: Formula) -> Iterator[Formula]:
    """All subformulas in the usual sense, ``f`` included, preorder."""
    yield f
    for c in children(f):
        yield from subformulas(c)


def atoms(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Atom)}


def depth(f: Formula) -> int:
    cs = children(f)
    return 1 + max(depth(c) for c in cs) if cs else 0


def _generators(f: Formula) -> tuple[Formula, ...]:
    # one-step generalized subformulas; transitivity closes the rest
    gens = list(children(f))
    if isinstance(f, Neg) and isinstance(f.sub, (And, Or)):
        gens += [Neg(f.sub.left), Neg(f.sub.right)]
    elif isinstance(f, Circ):
        gens.append(Neg(f.sub))
    elif isinstance(f, Bullet):
        gens.append(Circ(f.sub))
    return tuple(gens)


@lru_cache(maxsize=4096)
def generalized_subformulas(f: Formula) -> frozenset[Formula]:
    """Proper generalized subformulas of ``f`` (``f`` itself excluded)."""
    out: set[Formula] = set()
    for g in _generators(f):
        out.add(g)
        out |= generalized_subformulas(g)
    return frozenset(out)


def is_literal(f: Formula) -> bool:
    return isinstance(f, Atom) or (isinstance(f, Neg) and isinstance(f.sub, Atom))
