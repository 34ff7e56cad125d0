import pytest
from hypothesis import strategies as st

from letf.formula import And, Atom, Bullet, Circ, Neg, Or

ATOMS = st.sampled_from([Atom("p"), Atom("q"), Atom("r")])


def formulas(max_leaves=8):
    return st.recursive(
        ATOMS,
        lambda sub: st.one_of(
            st.builds(Neg, sub),
            st.builds(Circ, sub),
            st.builds(Bullet, sub),
            st.builds(And, sub, sub),
            st.builds(Or, sub, sub),
        ),
        max_leaves=max_leaves,
    )


def sequents(max_premises=3, max_leaves=6):
    return st.tuples(st.lists(formulas(max_leaves), max_size=max_premises), formulas(max_leaves))


_acceptance_lines = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and rep.when == "call":
        status = "PASS" if rep.passed else "FAIL"
        _acceptance_lines.append(f"{status}  criterion {marker.args[0]}: {marker.args[1]}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
