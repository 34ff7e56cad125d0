"""Command-line front end.

Exit status: 0 provable / satisfiable / all corpus entries pass,
1 not provable / unsatisfiable / some entry fails, 2 parse or usage error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bench, corpus, export
from .countermodel import countermodel, countermodel_data, render_countermodel
from .formula import ParseError, parse, parse_list, render
from .semantics import DEFAULT_CAP, CapExceeded, quasi_matrix
from .tableau import check_sat, prove, prune

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _style(args) -> str:
    return "unicode" if args.unicode else "ascii"


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_prove(args) -> int:
    premises = parse_list(args.premises)
    conclusion = parse(args.conclusion)
    res = prove(premises, conclusion)
    style = _style(args)
    cm = None if res else countermodel(res, premises, conclusion)
    pruned = prune(res, premises, conclusion) if (res and args.prune) else None
    if args.format == "json":
        data = {"verdict": "provable" if res else "not_provable", "tableau": export.to_data(res.tableau)}
        if cm is not None:
            data["countermodel"] = countermodel_data(cm, premises, conclusion)
        if pruned is not None:
            data["used_premises"] = [render(f) for f in pruned]
        _emit(json.dumps(data, indent=2, ensure_ascii=False))
    elif args.format == "dot":
        _emit(export.to_dot(res.tableau, style))
    else:
        out = ["provable" if res else "not provable", export.to_text(res.tableau, style)]
        if pruned is not None:
            out.append("used premises: " + (", ".join(render(f, style) for f in pruned) or "(none)"))
        if cm is not None:
            out += ["countermodel:", render_countermodel(cm, premises, conclusion, style)]
        _emit("\n".join(out))
    return EXIT_OK if res else EXIT_NO


def cmd_countermodel(args) -> int:
    premises = parse_list(args.premises)
    conclusion = parse(args.conclusion)
    res = prove(premises, conclusion)
    if res:
        if args.format == "json":
            _emit(json.dumps({"verdict": "provable", "countermodel": None}))
        else:
            _emit("provable: no countermodel")
        return EXIT_OK
    v = countermodel(res, premises, conclusion)
    if args.format == "json":
        _emit(json.dumps(countermodel_data(v, premises, conclusion), indent=2, ensure_ascii=False))
    else:
        _emit(render_countermodel(v, premises, conclusion, _style(args)))
    return EXIT_NO


def cmd_sat(args) -> int:
    fs = parse_list(args.formulas)
    res = check_sat(fs)
    style = _style(args)
    if args.format == "json":
        data = {"verdict": "satisfiable" if res else "unsatisfiable", "tableau": export.to_data(res.tableau)}
        if res:
            data["witness"] = {k: b for k, b in ((render(a.formula), b) for a, b in res.witness.items())}
        _emit(json.dumps(data, indent=2, ensure_ascii=False))
    elif args.format == "dot":
        _emit(export.to_dot(res.tableau, style))
    elif res:
        lines = ["satisfiable"]
        lines += [f"v({render(a.formula, style)}) = {b}" for a, b in res.witness.items()]
        _emit("\n".join(lines))
    else:
        _emit("unsatisfiable\n" + export.to_text(res.tableau, style))
    return EXIT_OK if res else EXIT_NO


def cmd_matrix(args) -> int:
    fs = parse_list(args.formulas)
    if not fs:
        raise UsageError("matrix needs at least one formula")
    m = quasi_matrix(fs, cap=args.cap, with_subformulas=args.subformulas)
    style = _style(args)
    if args.format == "csv":
        _emit(m.to_csv(style))
    elif args.format == "json":
        data = {
            "rows": [render(f) for f in m.rows],
            "columns": [dict((render(a.formula), b) for a, b in v.items()) for v in m.columns],
            "cells": [list(r) for r in m.cells],
        }
        _emit(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        _emit(m.render(style))
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        specs = bench.load_specs(Path(args.spec_file).read_text(encoding="utf-8"))
    except (OSError, ValueError, TypeError) as e:
        raise UsageError(f"bad spec file: {e}") from e
    if args.seed is not None:
        specs = [dataclasses.replace(s, seed=args.seed + i) for i, s in enumerate(specs)]
    try:
        records = bench.run_bench(specs, args.n, cap=args.cap)
    except bench.VerdictMismatch as e:
        print(f"verdict disagreement: {e}", file=sys.stderr)
        return EXIT_NO
    _emit(bench.to_csv(records))
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.file:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot read corpus file: {e}") from e
    else:
        text = corpus.bundled_corpus_text()
    try:
        entries = corpus.parse_corpus(text)
    except corpus.CorpusError as e:
        raise UsageError(str(e)) from e
    style = _style(args)
    failures = 0
    results = corpus.run_corpus(entries)
    rows = []
    for r in results:
        failures += not r.passed
        rows.append({
            "line": r.entry.line,
            "entry": r.entry.render(style),
            "expected": r.entry.expected,
            "verdict": r.verdict,
            "passed": r.passed,
        })
    if args.format == "json":
        _emit(json.dumps({"entries": rows, "failures": failures}, indent=2, ensure_ascii=False))
    else:
        for row in rows:
            status = "PASS" if row["passed"] else "FAIL"
            _emit(f"{status}  line {row['line']:>3}  {row['entry']}  => {row['verdict']}")
        _emit(f"{len(rows) - failures}/{len(rows)} entries pass")
    return EXIT_OK if failures == 0 else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot", "csv"], default="text")
    common.add_argument("--unicode", action="store_true", help="print with Unicode connectives")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap in semantic atoms")
    common.add_argument("--seed", type=int, default=None)

    p = argparse.ArgumentParser(prog="letf", description="Tableau prover and valuation oracle for LET_F.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("prove", parents=[common], help="prove a sequent")
    sp.add_argument("premises", help='comma separated premises, "" for none')
    sp.add_argument("conclusion")
    sp.add_argument("--prune", action="store_true", help="also report the premises actually needed")
    sp.set_defaults(func=cmd_prove)

    sp = sub.add_parser("countermodel", parents=[common], help="refuting valuation for a sequent")
    sp.add_argument("premises")
    sp.add_argument("conclusion")
    sp.set_defaults(func=cmd_countermodel)

    sp = sub.add_parser("sat", parents=[common], help="satisfiability of a set of formulas")
    sp.add_argument("formulas")
    sp.set_defaults(func=cmd_sat)

    sp = sub.add_parser("matrix", parents=[common], help="quasi-matrix of formulas")
    sp.add_argument("formulas")
    sp.add_argument("--subformulas", action="store_true", help="add a row per semantic atom")
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("bench", parents=[common], help="tableau vs enumeration benchmark, CSV out")
    sp.add_argument("spec_file", help="JSON generator spec (object or list of objects)")
    sp.add_argument("-n", type=int, default=100, help="sequents per spec")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("corpus", help="corpus files")
    csub = sp.add_subparsers(dest="corpus_command", required=True)
    rp = csub.add_parser("run", parents=[common], help="check every entry's expected verdict")
    rp.add_argument("file", nargs="?", help="corpus file (default: bundled worked examples)")
    rp.set_defaults(func=cmd_corpus)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
