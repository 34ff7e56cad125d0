"""Two-valued non-deterministic valuations and the brute-force entailment oracle.

A valuation is pinned down by bits on a finite set of *semantic atoms*:
positions whose value is not computed from anything else (``p``, ``~p``,
``@A``, ``~@A``, ``~#A``). Every other formula is evaluated compositionally.
The only coupling between atoms is the classicality constraint: when ``@A``
is 1, ``A`` and ``~A`` take different values.

Enumeration is vectorised with numpy: each semantic atom becomes a column of
bits over a block of assignment indices, and the same evaluator that works
on plain ints works on those columns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence, Union

import numpy as np

from .formula import And, Atom, Bullet, Circ, Formula, Neg, Or, render

DEFAULT_CAP = 24
_BLOCK_BITS = 16


class CapExceeded(RuntimeError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"{size} semantic atoms exceeds the enumeration cap of {cap}")
        self.size = size
        self.cap = cap


class MissingAtom(KeyError):
    pass


class NotAValuation(ValueError):
    """Raised when an assignment breaks the classicality constraint."""


# -- semantic atoms ----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class PosLit:
    name: str
    rank = 0

    @property
    def formula(self) -> Formula:
        return Atom(self.name)


@dataclass(frozen=True, slots=True)
class NegLit:
    name: str
    rank = 1

    @property
    def formula(self) -> Formula:
        return Neg(Atom(self.name))


@dataclass(frozen=True, slots=True)
class CircOf:
    sub: Formula
    rank = 2

    @property
    def formula(self) -> Formula:
        return Circ(self.sub)


@dataclass(frozen=True, slots=True)
class NegCircOf:
    sub: Formula
    rank = 3

    @property
    def formula(self) -> Formula:
        return Neg(Circ(self.sub))


@dataclass(frozen=True, slots=True)
class NegBulletOf:
    sub: Formula
    rank = 4

    @property
    def formula(self) -> Formula:
        return Neg(Bullet(self.sub))


SemanticAtom = Union[PosLit, NegLit, CircOf, NegCircOf, NegBulletOf]


def atom_key(a: SemanticAtom) -> tuple[int, str]:
    return (a.rank, render(a.formula))


def render_atom(a: SemanticAtom, style: str = "ascii") -> str:
    return render(a.formula, style)


def _consulted(f: Formula) -> Iterator[SemanticAtom]:
    """Semantic atoms read by ``evaluate(f)``, without classicality closure."""
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            yield PosLit(g.name)
        elif isinstance(g, (And, Or)):
            stack += [g.left, g.right]
        elif isinstance(g, Circ):
            yield CircOf(g.sub)
        elif isinstance(g, Bullet):
            yield CircOf(g.sub)
        else:
            h = g.sub
            if isinstance(h, Atom):
                yield NegLit(h.name)
            elif isinstance(h, (And, Or)):
                stack += [Neg(h.left), Neg(h.right)]
            elif isinstance(h, Neg):
                stack.append(h.sub)
            elif isinstance(h, Circ):
                yield NegCircOf(h.sub)
            else:
                yield NegBulletOf(h.sub)


def semantic_atoms(fs: Iterable[Formula]) -> list[SemanticAtom]:
    """Least closed set of semantic atoms needed to evaluate every formula in ``fs``.

    Closed means: whenever ``@A`` is in the set, so is everything needed to
    evaluate ``A`` and ``~A``. Sorted canonically.
    """
    seen: set[SemanticAtom] = set()
    todo = list(fs)
    while todo:
        for a in _consulted(todo.pop()):
            if a not in seen:
                seen.add(a)
                if isinstance(a, CircOf):
                    todo += [a.sub, Neg(a.sub)]
    return sorted(seen, key=atom_key)


# -- evaluation --------------------------------------------------------------

def _eval(f: Formula, bit: Callable[[SemanticAtom], object]):
    # Works for python ints and numpy uint8 arrays alike.
    if isinstance(f, Atom):
        return bit(PosLit(f.name))
    if isinstance(f, And):
        return _eval(f.left, bit) & _eval(f.right, bit)
    if isinstance(f, Or):
        return _eval(f.left, bit) | _eval(f.right, bit)
    if isinstance(f, Circ):
        return bit(CircOf(f.sub))
    if isinstance(f, Bullet):
        return 1 - bit(CircOf(f.sub))
    g = f.sub
    if isinstance(g, Atom):
        return bit(NegLit(g.name))
    if isinstance(g, And):
        return _eval(Neg(g.left), bit) | _eval(Neg(g.right), bit)
    if isinstance(g, Or):
        return _eval(Neg(g.left), bit) & _eval(Neg(g.right), bit)
    if isinstance(g, Neg):
        return _eval(g.sub, bit)
    if isinstance(g, Circ):
        return bit(NegCircOf(g.sub))
    return bit(NegBulletOf(g.sub))


@dataclass(frozen=True)
class Valuation:
    """A finite assignment of bits to semantic atoms, evaluated compositionally."""

    assignment: Mapping[SemanticAtom, int]
    domain: tuple[SemanticAtom, ...] = field(default=())
    # consulted for atoms outside the assignment; without it they are errors
    fallback: Optional[Callable[[SemanticAtom], int]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.domain:
            object.__setattr__(self, "domain", tuple(sorted(self.assignment, key=atom_key)))
        missing = [a for a in self.domain if a not in self.assignment]
        if missing:
            raise ValueError(f"assignment is not total on its domain: {missing[0]}")

    def bit(self, atom: SemanticAtom) -> int:
        try:
            return self.assignment[atom]
        except KeyError:
            if self.fallback is not None:
                return self.fallback(atom)
            raise MissingAtom(f"v({render_atom(atom)}) is outside the valuation's domain") from None

    def __call__(self, f: Formula) -> int:
        return evaluate(self, f)

    def violations(self) -> list[Formula]:
        """Formulas ``A`` with ``@A`` = 1 but ``A`` and ``~A`` equal."""
        return [
            a.sub
            for a in self.domain
            if isinstance(a, CircOf) and self.bit(a) and self(a.sub) == self(Neg(a.sub))
        ]

    def is_legal(self) -> bool:
        return not self.violations()

    def covers(self, fs: Iterable[Formula]) -> bool:
        return self.fallback is not None or set(semantic_atoms(fs)) <= set(self.assignment)

    def items(self) -> list[tuple[SemanticAtom, int]]:
        return [(a, self.assignment[a]) for a in self.domain]

    def render(self, style: str = "ascii") -> str:
        return ", ".join(f"{render_atom(a, style)}={b}" for a, b in self.items())


def evaluate(v: Valuation, f: Formula) -> int:
    return int(_eval(f, v.bit))


# -- enumeration -------------------------------------------------------------

def _check_cap(atoms: Sequence[SemanticAtom], cap: int):
    if len(atoms) > cap:
        raise CapExceeded(len(atoms), cap)


def _blocks(atoms: Sequence[SemanticAtom]) -> Iterator[tuple[int, dict[SemanticAtom, np.ndarray], np.ndarray]]:
    """Yield (start index, atom columns, legality mask) per block of assignments.

    Assignment ``i`` gives atom ``j`` the bit ``(i >> (k-1-j)) & 1``, so index
    order is lexicographic with the first canonical atom most significant.
    """
    k = len(atoms)
    total = 1 << k
    size = min(total, 1 << _BLOCK_BITS)
    circs = [a for a in atoms if isinstance(a, CircOf)]
    for start in range(0, total, size):
        idx = np.arange(start, start + size, dtype=np.int64)
        cols = {a: ((idx >> (k - 1 - j)) & 1).astype(np.uint8) for j, a in enumerate(atoms)}
        ok = np.ones(size, dtype=bool)
        for c in circs:
            ok &= (cols[c] == 0) | (_eval(c.sub, cols.__getitem__) != _eval(Neg(c.sub), cols.__getitem__))
        yield start, cols, ok


def _column(value, size: int) -> np.ndarray:
    return np.broadcast_to(np.asarray(value, dtype=np.uint8), (size,))


def _valuation_at(atoms: Sequence[SemanticAtom], index: int) -> Valuation:
    k = len(atoms)
    return Valuation({a: (index >> (k - 1 - j)) & 1 for j, a in enumerate(atoms)}, tuple(atoms))


def legal_indices(fs: Iterable[Formula], cap: int = DEFAULT_CAP) -> tuple[list[SemanticAtom], np.ndarray]:
    atoms = semantic_atoms(fs)
    _check_cap(atoms, cap)
    found = [start + np.flatnonzero(ok) for start, _, ok in _blocks(atoms)]
    return atoms, np.concatenate(found)


def count_valuations(fs: Iterable[Formula], cap: int = DEFAULT_CAP) -> int:
    return int(legal_indices(fs, cap)[1].size)


def enumerate_valuations(fs: Iterable[Formula], cap: int = DEFAULT_CAP) -> list[Valuation]:
    """Every legal assignment over ``semantic_atoms(fs)``, in lexicographic order."""
    atoms, idx = legal_indices(fs, cap)
    return [_valuation_at(atoms, int(i)) for i in idx]


def all_assignments(atoms: Sequence[SemanticAtom]) -> Iterator[Valuation]:
    """Unfiltered assignments, lexicographic; legality left to the caller."""
    for bits in itertools.product((0, 1), repeat=len(atoms)):
        yield Valuation(dict(zip(atoms, bits)), tuple(atoms))


@dataclass(frozen=True)
class Valid:
    columns: int

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Invalid:
    witness: Valuation
    columns: int

    def __bool__(self) -> bool:
        return False


def entails(
    premises: Iterable[Formula], conclusion: Formula, cap: int = DEFAULT_CAP
) -> Union[Valid, Invalid]:
    """Decide consequence by checking every legal valuation.

    ``columns`` on the result is the number of legal valuations inspected;
    the witness of an ``Invalid`` result is the lexicographically first one.
    """
    premises = list(premises)
    atoms = semantic_atoms([*premises, conclusion])
    _check_cap(atoms, cap)
    columns = 0
    for start, cols, ok in _blocks(atoms):
        good = ok.copy()
        for b in premises:
            good &= _column(_eval(b, cols.__getitem__), ok.size).astype(bool)
        bad = good & (_column(_eval(conclusion, cols.__getitem__), ok.size) == 0)
        hits = np.flatnonzero(bad)
        if hits.size:
            columns += int(np.count_nonzero(ok[: hits[0] + 1]))
            return Invalid(_valuation_at(atoms, start + int(hits[0])), columns)
        columns += int(np.count_nonzero(ok))
    return Valid(columns)


def satisfiable(fs: Iterable[Formula], cap: int = DEFAULT_CAP) -> Valuation | None:
    """First legal valuation making every formula 1, or None."""
    fs = list(fs)
    atoms = semantic_atoms(fs)
    _check_cap(atoms, cap)
    for start, cols, ok in _blocks(atoms):
        good = ok.copy()
        for f in fs:
            good &= _column(_eval(f, cols.__getitem__), ok.size).astype(bool)
        hits = np.flatnonzero(good)
        if hits.size:
            return _valuation_at(atoms, start + int(hits[0]))
    return None


# -- quasi-matrix --------------------------------------------------------------

@dataclass(frozen=True)
class QuasiMatrix:
    rows: tuple[Formula, ...]
    columns: tuple[Valuation, ...]
    cells: tuple[tuple[int, ...], ...]  # cells[row][column]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.columns))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.cells)

    def render(self, style: str = "ascii") -> str:
        labels = [render(f, style) for f in self.rows]
        heads = [f"v{j + 1}" for j in range(len(self.columns))]
        lw = max(len(s) for s in labels) if labels else 0
        cw = max((len(h) for h in heads), default=1)
        lines = []
        for i, (label, row) in enumerate(zip(labels, self.cells), 1):
            cells = " ".join(str(c).rjust(cw) for c in row)
            lines.append(f"{i:>3}  {label.ljust(lw)}  {cells}")
        lines.append(" " * (lw + 7) + " ".join(h.rjust(cw) for h in heads))
        return "\n".join(lines)

    def to_csv(self, style: str = "ascii") -> str:
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["formula", *(f"v{j + 1}" for j in range(len(self.columns)))])
        for f, row in zip(self.rows, self.cells):
            w.writerow([render(f, style), *row])
        return buf.getvalue()


def quasi_matrix(
    fs: Sequence[Formula], cap: int = DEFAULT_CAP, with_subformulas: bool = False
) -> QuasiMatrix:
    """Tabulate ``fs`` against every legal valuation over their semantic atoms.

    With ``with_subformulas`` the atoms themselves are prepended as rows.
    """
    rows = list(fs)
    if with_subformulas:
        extra = [a.formula for a in semantic_atoms(rows) if a.formula not in rows]
        rows = extra + rows
    cols = enumerate_valuations(rows, cap)
    cells = tuple(tuple(evaluate(v, f) for v in cols) for f in rows)
    return QuasiMatrix(tuple(rows), tuple(cols), cells)
