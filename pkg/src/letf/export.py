"""Text, structured-data and DOT exports of tableaux.

Nodes are numbered in creation order. A split is shown by indenting each
side under a ``+`` marker; closed leaves end with the closing pair.
"""

from __future__ import annotations

from .formula import render
from .tableau import Tableau


def _label(t: Tableau, i: int, style: str) -> str:
    return t.node(i).sf.render(style)


def to_text(t: Tableau, style: str = "ascii") -> str:
    if not t.nodes:
        return "(empty tableau)"
    mark = "⊗" if style == "unicode" else "X"
    leaves = {b.leaf: b for b in t.branches if b.nodes}
    width = len(str(len(t.nodes)))
    labels = {n.id: _label(t, n.id, style) for n in t.nodes}
    depth = {}
    for n in t.nodes:
        up = depth.get(n.parent, 0)
        split = n.parent is not None and len(t.node(n.parent).children) > 1
        depth[n.id] = up + split
    col = max(2 * depth[i] + len(s) for i, s in labels.items()) + width + 4
    lines: list[str] = []

    def walk(i: int, indent: str):
        while True:
            n = t.node(i)
            text = f"{indent}{str(n.id).rjust(width)}. {labels[i]}".ljust(col)
            if n.rule is not None:
                text += f"Rule {n.rule.value} in {n.source}"
            lines.append(text.rstrip())
            if len(n.children) == 1:
                i = n.children[0]
                continue
            if not n.children:
                b = leaves.get(i)
                if b is not None and b.closure:
                    lo, hi = sorted(b.closure)
                    lines.append(f"{indent}{mark} {lo}, {hi}")
                else:
                    lines.append(f"{indent}open")
                return
            for c in n.children:
                lines.append(f"{indent}+")
                walk(c, indent + "  ")
            return

    walk(1, "")
    return "\n".join(lines)


def to_data(t: Tableau) -> dict:
    return {
        "closed": t.closed,
        "initial": [sf.render() for sf in t.initial],
        "nodes": [
            {
                "id": n.id,
                "sign": int(n.sf.sign),
                "formula": render(n.sf.formula),
                "parent": n.parent,
                "rule": None if n.rule is None else n.rule.value,
                "source": n.source,
            }
            for n in t.nodes
        ],
        "edges": [[n.parent, n.id] for n in t.nodes if n.parent is not None],
        "branches": [
            {
                "id": b.id,
                "nodes": list(b.nodes),
                "closed": b.closed,
                "closure": None if b.closure is None else list(b.closure),
            }
            for b in t.branches
        ],
    }


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(t: Tableau, style: str = "ascii") -> str:
    out = ["digraph tableau {", "  node [shape=plaintext];"]
    for n in t.nodes:
        label = f"{n.id}. {_label(t, n.id, style)}"
        if n.rule is not None:
            label += f"\\n(Rule {n.rule.value} in {n.source})"
        out.append(f'  n{n.id} [label="{_dot_escape(label)}"];')
        if n.parent is not None:
            out.append(f"  n{n.parent} -> n{n.id};")
    for b in t.branches:
        if not b.nodes:
            continue
        if b.closure:
            text = "⊗ {}, {}".format(*sorted(b.closure)) if style == "unicode" else "X {}, {}".format(*sorted(b.closure))
        else:
            text = "open"
        out.append(f'  end{b.id} [label="{text}"];')
        out.append(f"  n{b.leaf} -> end{b.id} [style=dotted];")
    out.append("}")
    return "\n".join(out)
