"""Countermodels read off open branches of terminated tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .formula import Atom, Bullet, Circ, Formula, Neg, Sign, render
from .semantics import (
    CircOf,
    NegBulletOf,
    NegCircOf,
    NegLit,
    NotAValuation,
    PosLit,
    SemanticAtom,
    Valuation,
    atom_key,
    evaluate,
    render_atom,
    semantic_atoms,
)
from .tableau import Branch, NotProvable, Tableau


class NotExtractable(ValueError):
    pass


@dataclass(frozen=True)
class SemiValuation:
    """Bits read off an open branch: literals, @A (hence #A), ~@A and ~#A.

    Outside ``domain`` every entry defaults to 0 (so #A defaults to 1).
    """

    literal_bits: Mapping[Formula, int]
    circ_bits: Mapping[Formula, int]
    negcirc_bits: Mapping[Formula, int]
    negbullet_bits: Mapping[Formula, int]
    domain: tuple[SemanticAtom, ...]

    def __call__(self, f: Formula) -> int:
        """Value of ``f`` when ``f`` is a literal, @A, #A, ~@A or ~#A."""
        if isinstance(f, Circ):
            return self.circ_bits.get(f.sub, 0)
        if isinstance(f, Bullet):
            return 1 - self.circ_bits.get(f.sub, 0)
        if isinstance(f, Neg) and isinstance(f.sub, Circ):
            return self.negcirc_bits.get(f.sub.sub, 0)
        if isinstance(f, Neg) and isinstance(f.sub, Bullet):
            return self.negbullet_bits.get(f.sub.sub, 0)
        if isinstance(f, Atom) or (isinstance(f, Neg) and isinstance(f.sub, Atom)):
            return self.literal_bits.get(f, 0)
        raise ValueError(f"{render(f)} is not read directly off a branch")

    def bit(self, a: SemanticAtom) -> int:
        return self(a.formula)


def extract_semi_valuation(
    t: Tableau, branch: Branch, sequent: Iterable[Formula] = ()
) -> SemiValuation:
    if branch.closed:
        raise NotExtractable("branch is closed")
    if not t.is_terminated():
        raise NotExtractable("tableau is not terminated")
    true = {sf.formula for sf in t.signed(branch) if sf.sign is Sign.ONE}
    formulas = [t.node(i).sf.formula for i in branch.nodes]
    domain = tuple(semantic_atoms([*formulas, *sequent]))
    lits, circ, negcirc, negbullet = {}, {}, {}, {}
    for a in domain:
        bit = int(a.formula in true)
        if isinstance(a, (PosLit, NegLit)):
            lits[a.formula] = bit
        elif isinstance(a, CircOf):
            circ[a.sub] = bit
        elif isinstance(a, NegCircOf):
            negcirc[a.sub] = bit
        else:
            negbullet[a.sub] = bit
    return SemiValuation(lits, circ, negcirc, negbullet, domain)


def induced_valuation(s: SemiValuation) -> Valuation:
    v = Valuation({a: s.bit(a) for a in s.domain}, s.domain, fallback=s.bit)
    bad = v.violations()
    if bad:
        raise NotAValuation(f"induced assignment breaks classicality of {render(bad[0])}")
    return v


def verify_countermodel(v: Valuation, premises: Sequence[Formula], conclusion: Formula) -> bool:
    if not v.covers([*premises, conclusion]):
        raise ValueError("valuation does not cover the sequent's semantic atoms")
    return v.is_legal() and all(evaluate(v, b) == 1 for b in premises) and evaluate(v, conclusion) == 0


def countermodel(result: NotProvable, premises: Sequence[Formula], conclusion: Formula,
                 branch: Optional[Branch] = None) -> Valuation:
    """Induced valuation of ``branch`` (default: first open branch in creation order)."""
    b = branch if branch is not None else result.open_branches[0]
    return induced_valuation(extract_semi_valuation(result.tableau, b, [*premises, conclusion]))


def render_countermodel(v: Valuation, premises: Sequence[Formula], conclusion: Formula,
                        style: str = "ascii") -> str:
    arrow = "↦" if style == "unicode" else "|->"
    lines = [f"v({render_atom(a, style)}) = {b}" for a, b in v.items()]
    lines += [f"premise {render(f, style)} {arrow} {evaluate(v, f)}" for f in premises]
    lines.append(f"conclusion {render(conclusion, style)} {arrow} {evaluate(v, conclusion)}")
    return "\n".join(lines)


def countermodel_data(v: Valuation, premises: Sequence[Formula], conclusion: Formula) -> dict:
    return {
        "assignment": {render_atom(a): b for a, b in sorted(v.items(), key=lambda ab: atom_key(ab[0]))},
        "premises": [{"formula": render(f), "value": evaluate(v, f)} for f in premises],
        "conclusion": {"formula": render(conclusion), "value": evaluate(v, conclusion)},
    }
