"""Analytic tableaux and a brute-force valuation oracle for the logic LET_F."""

from .countermodel import (
    SemiValuation,
    countermodel,
    extract_semi_valuation,
    induced_valuation,
    verify_countermodel,
)
from .formula import (
    And,
    Atom,
    Bullet,
    Circ,
    Formula,
    Neg,
    Or,
    ParseError,
    Sign,
    SignedFormula,
    complexity,
    generalized_subformulas,
    parse,
    parse_list,
    render,
)
from .semantics import (
    CapExceeded,
    Invalid,
    Valid,
    Valuation,
    entails,
    enumerate_valuations,
    evaluate,
    quasi_matrix,
    semantic_atoms,
)
from .tableau import (
    NotProvable,
    Provable,
    Rule,
    apply_rule,
    applicable_rule,
    check_analyticity,
    check_sat,
    expand,
    is_closed,
    prove,
    prune,
)

__version__ = "0.1.0"
