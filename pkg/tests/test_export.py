import json

from letf.export import to_data, to_dot, to_text
from letf.formula import parse, parse_list
from letf.tableau import prove


def example19():
    return prove([], parse("@p | #p")).tableau


def test_text_matches_numbered_line_style():
    text = to_text(example19())
    lines = [l.rstrip() for l in text.splitlines()]
    assert lines[0] == "1. 0(@p | #p)"
    assert lines[1].startswith("2. 0(@p)") and lines[1].endswith("Rule 6 in 1")
    assert lines[2].startswith("3. 0(#p)") and lines[2].endswith("Rule 6 in 1")
    assert lines[3].startswith("4. 1(@p)") and lines[3].endswith("Rule 13 in 3")
    assert lines[4] == "X 2, 4"


def test_text_unicode_and_branches():
    t = prove([parse("~@p")], parse("#p")).tableau
    text = to_text(t, "unicode")
    assert "1(∘p)" in text
    assert text.count("+") == 2
    assert text.count("open") == 2
    assert "Rule 11 in 3" in text


def test_structured_data():
    t = prove(parse_list("p, ~p | q"), parse("q")).tableau
    data = json.loads(json.dumps(to_data(t)))
    assert data["closed"] is False
    assert [n["id"] for n in data["nodes"]] == list(range(1, len(t.nodes) + 1))
    assert data["edges"] == [[n.parent, n.id] for n in t.nodes if n.parent]
    closed = [b for b in data["branches"] if b["closed"]]
    assert len(closed) == 1 and sorted(closed[0]["closure"]) == [3, 5]
    assert data["nodes"][3]["rule"] == 5


def test_dot():
    dot = to_dot(example19())
    assert dot.startswith("digraph tableau {") and dot.endswith("}")
    assert "n1 -> n2;" in dot
    assert 'label="X 2, 4"' in dot
