"""Seeded random sequents and a tableau-vs-enumeration timing harness."""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .corpus import Sequent
from .formula import And, Atom, Bullet, Circ, Formula, Neg, Or
from .semantics import DEFAULT_CAP, CapExceeded, entails
from .tableau import prove

CONNECTIVES = ("neg", "and", "or", "circ", "bullet")
_BUILD = {"neg": Neg, "circ": Circ, "bullet": Bullet, "and": And, "or": Or}
_LETTERS = "pqrstuvw"


def atom_names(n: int) -> list[str]:
    names = list(_LETTERS[:n])
    names += [f"p{i}" for i in range(len(names), n)]
    return names


class InvalidSpec(ValueError):
    pass


class VerdictMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class SequentShape:
    """``premise_count`` is an upper bound; each sequent draws 0..premise_count.

    ``contradictory`` replaces the premises by one random A and ~A;
    ``conclusion="fresh"`` makes the conclusion an atom not used in the premises.
    """

    premise_count: int = 2
    conclusion: str = "random"
    contradictory: bool = False


@dataclass(frozen=True)
class GenSpec:
    seed: int = 0
    atom_count: int = 3
    max_depth: int = 4
    connective_weights: dict = field(default_factory=lambda: dict.fromkeys(CONNECTIVES, 1.0))
    sequent_shape: SequentShape = SequentShape()
    leaf_bias: float = 0.3

    def validate(self):
        if self.atom_count < 1:
            raise InvalidSpec("atom_count must be at least 1")
        if self.max_depth < 0:
            raise InvalidSpec("max_depth must be non-negative")
        unknown = set(self.connective_weights) - set(CONNECTIVES)
        if unknown:
            raise InvalidSpec(f"unknown connectives {sorted(unknown)}")
        ws = list(self.connective_weights.values())
        if any(w < 0 for w in ws) or not any(w > 0 for w in ws):
            raise InvalidSpec("connective weights must be non-negative and not all zero")
        shape = self.sequent_shape
        if shape.premise_count < 0:
            raise InvalidSpec("premise_count must be non-negative")
        if shape.conclusion not in ("random", "fresh"):
            raise InvalidSpec(f"unknown conclusion kind {shape.conclusion!r}")

    @classmethod
    def from_dict(cls, d: dict) -> GenSpec:
        d = dict(d)
        shape = d.pop("sequent_shape", {})
        weights = d.pop("connective_weights", None)
        unknown = set(d) - {"seed", "atom_count", "max_depth", "leaf_bias"}
        if unknown:
            raise InvalidSpec(f"unknown spec keys {sorted(unknown)}")
        # connectives left out keep weight 1
        weights = {**dict.fromkeys(CONNECTIVES, 1.0), **(weights or {})}
        spec = cls(sequent_shape=SequentShape(**shape), connective_weights=weights, **d)
        spec.validate()
        return spec


def load_specs(text: str) -> list[GenSpec]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [GenSpec.from_dict(d) for d in data]


def random_formula(rng: random.Random, names: Sequence[str], depth: int, weights: dict,
                   leaf_bias: float = 0.3) -> Formula:
    if depth == 0 or rng.random() < leaf_bias:
        return Atom(rng.choice(names))
    ops = [c for c in CONNECTIVES if weights.get(c, 0) > 0]
    op = rng.choices(ops, [weights[c] for c in ops])[0]
    if op in ("and", "or"):
        return _BUILD[op](
            random_formula(rng, names, depth - 1, weights, leaf_bias),
            random_formula(rng, names, depth - 1, weights, leaf_bias),
        )
    return _BUILD[op](random_formula(rng, names, depth - 1, weights, leaf_bias))


def generate_sequents(spec: GenSpec, n: int) -> list[Sequent]:
    """``n`` sequents, fully determined by ``spec`` (including its seed)."""
    spec.validate()
    if n < 1:
        raise InvalidSpec("n must be at least 1")
    rng = random.Random(spec.seed)
    shape = spec.sequent_shape
    names = atom_names(spec.atom_count)
    fresh = atom_names(spec.atom_count + 1)[-1]

    def gen() -> Formula:
        return random_formula(rng, names, spec.max_depth, spec.connective_weights, spec.leaf_bias)

    out = []
    for _ in range(n):
        if shape.contradictory:
            a = gen()
            premises = (a, Neg(a))
        else:
            premises = tuple(gen() for _ in range(rng.randint(0, shape.premise_count)))
        conclusion = Atom(fresh) if shape.conclusion == "fresh" else gen()
        out.append(Sequent(premises, conclusion))
    return out


@dataclass(frozen=True)
class BenchRecord:
    seed: int
    sequent: Sequent
    tableau_verdict: Optional[bool]
    tableau_ms: float
    tableau_nodes: int
    matrix_verdict: Optional[bool]
    matrix_ms: Optional[float]
    matrix_columns: Optional[int]
    skipped: Optional[str] = None

    @property
    def verdict(self) -> str:
        if self.skipped:
            return "skipped"
        return "provable" if self.tableau_verdict else "not_provable"


def bench_sequent(seed: int, seq: Sequent, cap: int = DEFAULT_CAP) -> BenchRecord:
    t0 = time.perf_counter()
    res = prove(seq.premises, seq.conclusion)
    t_ms = (time.perf_counter() - t0) * 1e3
    nodes = len(res.tableau)
    try:
        t0 = time.perf_counter()
        oracle = entails(seq.premises, seq.conclusion, cap)
        m_ms = (time.perf_counter() - t0) * 1e3
    except CapExceeded as e:
        return BenchRecord(seed, seq, bool(res), t_ms, nodes, None, None, None, skipped=str(e))
    if bool(res) != bool(oracle):
        raise VerdictMismatch(
            f"{seq}: tableau says {'provable' if res else 'not provable'}, "
            f"enumeration says {'valid' if oracle else 'invalid'}"
        )
    return BenchRecord(seed, seq, bool(res), t_ms, nodes, bool(oracle), m_ms, oracle.columns)


def run_bench(specs: Iterable[GenSpec], n_per_spec: int, cap: int = DEFAULT_CAP) -> list[BenchRecord]:
    """Benchmark every generated sequent; raises VerdictMismatch on disagreement."""
    records = []
    for spec in specs:
        for seq in generate_sequents(spec, n_per_spec):
            records.append(bench_sequent(spec.seed, seq, cap))
    return records


CSV_COLUMNS = ("seed", "sequent_text", "verdict", "tableau_ms", "tableau_nodes", "matrix_ms", "matrix_columns")


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([
            r.seed,
            r.sequent.render(),
            r.verdict,
            f"{r.tableau_ms:.3f}",
            r.tableau_nodes,
            "" if r.matrix_ms is None else f"{r.matrix_ms:.3f}",
            "" if r.matrix_columns is None else r.matrix_columns,
        ])
    return buf.getvalue()
