"""Signed analytic tableaux.

Branches are grown one at a time, depth first. On each open branch the
earliest unexpanded node is expanded, non-branching rules first; a branch
stops the moment it closes. A signed formula already on a branch is never
inserted again, and a branching rule whose one side is already on the branch
is applied without splitting (the other side could only add formulas).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .formula import (
    And,
    Atom,
    Bullet,
    Circ,
    Formula,
    Neg,
    Or,
    Sign,
    SignedFormula,
    complexity,
    generalized_subformulas,
    one,
    zero,
)


class Rule(enum.IntEnum):
    R1 = 1
    R2 = 2
    R3 = 3
    R4 = 4
    R5 = 5
    R6 = 6
    R7 = 7
    R8 = 8
    R9 = 9
    R10 = 10
    R11 = 11
    R12 = 12
    R13 = 13

    @property
    def branching(self) -> bool:
        return self in _BRANCHING

    def __str__(self) -> str:
        return f"Rule {self.value}"


_BRANCHING = frozenset({Rule.R2, Rule.R3, Rule.R5, Rule.R8, Rule.R11})


class RuleMismatch(ValueError):
    pass


def applicable_rule(sf: SignedFormula) -> Optional[Rule]:
    f, s = sf.formula, sf.sign
    if isinstance(f, And):
        return Rule.R1 if s else Rule.R2
    if isinstance(f, Or):
        return Rule.R5 if s else Rule.R6
    if isinstance(f, Circ):
        return Rule.R11 if s else None
    if isinstance(f, Bullet):
        return Rule.R12 if s else Rule.R13
    if isinstance(f, Neg):
        g = f.sub
        if isinstance(g, And):
            return Rule.R3 if s else Rule.R4
        if isinstance(g, Or):
            return Rule.R7 if s else Rule.R8
        if isinstance(g, Neg):
            return Rule.R9 if s else Rule.R10
    # literals, 0(@A), ~@A and ~#A
    return None


def apply_rule(rule: Rule, sf: SignedFormula) -> list[list[SignedFormula]]:
    """Extension sets produced by ``rule``: one for linear rules, two for branching."""
    if applicable_rule(sf) is not rule:
        raise RuleMismatch(f"{rule} does not apply to {sf}")
    f = sf.formula
    if rule is Rule.R1:
        return [[one(f.left), one(f.right)]]
    if rule is Rule.R2:
        return [[zero(f.left)], [zero(f.right)]]
    if rule is Rule.R5:
        return [[one(f.left)], [one(f.right)]]
    if rule is Rule.R6:
        return [[zero(f.left), zero(f.right)]]
    if rule is Rule.R11:
        a = f.sub
        return [[one(a), zero(Neg(a))], [zero(a), one(Neg(a))]]
    if rule is Rule.R12:
        return [[zero(Circ(f.sub))]]
    if rule is Rule.R13:
        return [[one(Circ(f.sub))]]
    g = f.sub
    if rule is Rule.R9:
        return [[one(g.sub)]]
    if rule is Rule.R10:
        return [[zero(g.sub)]]
    na, nb = Neg(g.left), Neg(g.right)
    if rule is Rule.R3:
        return [[one(na)], [one(nb)]]
    if rule is Rule.R4:
        return [[zero(na), zero(nb)]]
    if rule is Rule.R7:
        return [[one(na), one(nb)]]
    return [[zero(na)], [zero(nb)]]  # R8


# -- tree structures -----------------------------------------------------------

@dataclass
class Node:
    id: int
    sf: SignedFormula
    parent: Optional[int]
    rule: Optional[Rule] = None
    source: Optional[int] = None
    children: list[int] = field(default_factory=list)

    @property
    def is_root(self) -> bool:
        return self.rule is None


@dataclass(frozen=True)
class Step:
    """One rule application on one branch."""

    node: int
    rule: Rule
    # node ids added per extension set (empty tuple for duplicates)
    added: tuple[tuple[int, ...], ...]


@dataclass
class Branch:
    id: int
    nodes: list[int]  # root to leaf
    used: set[int]
    closure: Optional[tuple[int, int]] = None  # (node with 1(F), node with 0(F))

    @property
    def closed(self) -> bool:
        return self.closure is not None

    @property
    def leaf(self) -> int:
        return self.nodes[-1]


@dataclass
class Tableau:
    initial: tuple[SignedFormula, ...]
    nodes: list[Node]
    branches: list[Branch]
    steps: list[Step]

    def node(self, i: int) -> Node:
        return self.nodes[i - 1]

    def signed(self, branch: Branch) -> list[SignedFormula]:
        return [self.node(i).sf for i in branch.nodes]

    @property
    def closed(self) -> bool:
        return all(b.closed for b in self.branches)

    @property
    def open_branches(self) -> list[Branch]:
        return [b for b in self.branches if not b.closed]

    def closing_formula(self, branch: Branch) -> Optional[Formula]:
        if branch.closure is None:
            return None
        return self.node(branch.closure[0]).sf.formula

    def is_terminated(self) -> bool:
        for b in self.open_branches:
            for i in b.nodes:
                if i not in b.used and applicable_rule(self.node(i).sf) is not None:
                    return False
        return True

    def __len__(self) -> int:
        return len(self.nodes)


def is_closed(sfs: Iterable[SignedFormula]) -> bool:
    """True when some formula occurs with both signs."""
    seen = set(sfs)
    return any(sf.conjugate in seen for sf in seen)


# -- expansion -------------------------------------------------------------------

class _Growth:
    def __init__(self, rng: Optional[random.Random]):
        self.nodes: list[Node] = []
        self.steps: list[Step] = []
        self.done: list[Branch] = []
        self.rng = rng

    def new_node(self, sf: SignedFormula, parent: Optional[int], rule=None, source=None) -> Node:
        n = Node(len(self.nodes) + 1, sf, parent, rule, source)
        self.nodes.append(n)
        if parent is not None:
            self.nodes[parent - 1].children.append(n.id)
        return n


@dataclass
class _Live:
    """Mutable state of a branch under construction."""

    nodes: list[int]
    index: dict[SignedFormula, int]
    used: set[int]
    closure: Optional[tuple[int, int]] = None

    def copy(self) -> _Live:
        return _Live(list(self.nodes), dict(self.index), set(self.used), self.closure)

    def push(self, g: _Growth, sf: SignedFormula, rule=None, source=None) -> Optional[int]:
        if sf in self.index:
            return None
        parent = self.nodes[-1] if self.nodes else None
        n = g.new_node(sf, parent, rule, source)
        self.nodes.append(n.id)
        self.index[sf] = n.id
        other = self.index.get(sf.conjugate)
        if other is not None and self.closure is None:
            pair = (n.id, other) if sf.sign is Sign.ONE else (other, n.id)
            self.closure = pair
        return n.id

    def pending(self, g: _Growth) -> list[tuple[int, Rule]]:
        out = []
        for i in self.nodes:
            if i not in self.used:
                r = applicable_rule(g.nodes[i - 1].sf)
                if r is not None:
                    out.append((i, r))
        return out


def _choose(pending: list[tuple[int, Rule]], rng: Optional[random.Random]) -> tuple[int, Rule]:
    if rng is not None:
        return rng.choice(pending)
    for i, r in pending:
        if not r.branching:
            return i, r
    return pending[0]


def expand(initial: Iterable[SignedFormula], rng: Optional[random.Random] = None) -> Tableau:
    """Build a terminated tableau for a finite set of signed formulas.

    ``rng`` switches the node choice to a uniformly random pending node; it
    exists so tests can check that verdicts do not depend on the strategy.
    """
    g = _Growth(rng)
    initial = tuple(dict.fromkeys(initial))
    live = _Live([], {}, set())
    for sf in initial:
        live.push(g, sf)
    # depth first, left branch first
    stack = [live]
    while stack:
        b = stack.pop()
        while b.closure is None:
            pending = b.pending(g)
            if not pending:
                break
            i, rule = _choose(pending, g.rng)
            b.used.add(i)
            exts = apply_rule(rule, g.nodes[i - 1].sf)
            present = [e for e in exts if all(sf in b.index for sf in e)]
            if len(exts) == 1 or present:
                # linear, or one side adds nothing: no split needed
                ext = present[0] if present else exts[0]
                g.steps.append(Step(i, rule, (_extend(g, b, ext, rule, i),)))
                continue
            right = b.copy()
            left_added = _extend(g, b, exts[0], rule, i)
            right_added = _extend(g, right, exts[1], rule, i)
            g.steps.append(Step(i, rule, (left_added, right_added)))
            stack.append(right)
        g.done.append(Branch(len(g.done), b.nodes, b.used, b.closure))
    return Tableau(initial, g.nodes, g.done, g.steps)


def _extend(g: _Growth, b: _Live, ext: Sequence[SignedFormula], rule: Rule, source: int) -> tuple[int, ...]:
    added = []
    for sf in ext:
        if b.closure is not None:
            break
        x = b.push(g, sf, rule, source)
        if x is not None:
            added.append(x)
    return tuple(added)


# -- proofs ----------------------------------------------------------------------

@dataclass
class Provable:
    tableau: Tableau
    used_premises: list[Formula]

    def __bool__(self) -> bool:
        return True


@dataclass
class NotProvable:
    tableau: Tableau
    open_branches: list[Branch]

    def __bool__(self) -> bool:
        return False


ProofResult = Union[Provable, NotProvable]


def sequent_root(premises: Iterable[Formula], conclusion: Formula) -> list[SignedFormula]:
    return [one(b) for b in premises] + [zero(conclusion)]


def prove(premises: Sequence[Formula], conclusion: Formula, rng: Optional[random.Random] = None) -> ProofResult:
    t = expand(sequent_root(premises, conclusion), rng)
    if t.closed:
        return Provable(t, _traced_premises(t, premises))
    return NotProvable(t, t.open_branches)


@dataclass
class Satisfiable:
    witness: object  # semantics.Valuation, induced from the first open branch
    tableau: Tableau

    def __bool__(self) -> bool:
        return True


@dataclass
class Unsatisfiable:
    tableau: Tableau

    def __bool__(self) -> bool:
        return False


def check_sat(fs: Iterable[Formula]) -> Union[Satisfiable, Unsatisfiable]:
    from .countermodel import extract_semi_valuation, induced_valuation

    fs = list(fs)
    t = expand([one(f) for f in fs])
    if t.closed:
        return Unsatisfiable(t)
    s = extract_semi_valuation(t, t.open_branches[0], fs)
    return Satisfiable(induced_valuation(s), t)


# -- pruning ---------------------------------------------------------------------

def _root_ancestors(t: Tableau, i: int) -> set[int]:
    out = set()
    todo = [i]
    while todo:
        n = t.node(todo.pop())
        if n.id in out:
            continue
        out.add(n.id)
        if n.source is not None:
            todo.append(n.source)
    return {x for x in out if t.node(x).is_root}


def _traced_premises(t: Tableau, premises: Sequence[Formula]) -> list[Formula]:
    """Premises whose root nodes feed a closure pair on some branch."""
    roots: set[int] = set()
    for b in t.branches:
        if b.closure is not None:
            for i in b.closure:
                roots |= _root_ancestors(t, i)
    used = {t.node(i).sf for i in roots}
    return [b for b in premises if one(b) in used]


def prune(result: Provable, premises: Sequence[Formula], conclusion: Formula) -> list[Formula]:
    """Shrink ``premises`` to a subset that still proves ``conclusion``.

    Starts from the premises traced back from the closure pairs, checks that
    they suffice, then drops any premise whose removal keeps the proof closed.
    """
    if not isinstance(result, Provable):
        raise ValueError("only a closed tableau can be pruned")
    kept = list(result.used_premises)
    if not prove(kept, conclusion):
        kept = list(premises)
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1:]
        if prove(trial, conclusion):
            kept = trial
        else:
            i += 1
    return kept


# -- analyticity -----------------------------------------------------------------

def check_analyticity(t: Tableau) -> bool:
    """Every derived node carries an initial formula or a generalized subformula of one."""
    allowed: set[Formula] = set()
    for sf in t.initial:
        allowed.add(sf.formula)
        allowed |= generalized_subformulas(sf.formula)
    return all(n.sf.formula in allowed for n in t.nodes if not n.is_root)


def complexity_decreases(t: Tableau) -> bool:
    """Each derived node is strictly simpler than the node it was derived from."""
    return all(
        complexity(n.sf.formula) < complexity(t.node(n.source).sf.formula)
        for n in t.nodes
        if n.source is not None
    )
