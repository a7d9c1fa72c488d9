import pytest
from hypothesis import settings, strategies as st

from matrix_ansatz.algebra import Poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

VARS = ("q", "a", "b")


@st.composite
def polys(draw, vars=VARS, max_terms=4, max_exp=3, laurent=False):
    lo = -2 if laurent else 0
    n = draw(st.integers(0, max_terms))
    p = Poly.const(0)
    for _ in range(n):
        c = draw(st.integers(-5, 5))
        exps = {v: draw(st.integers(lo, max_exp)) for v in vars}
        p = p + Poly.monomial(exps, c)
    return p


@pytest.fixture
def q():
    from matrix_ansatz.algebra import var

    return var("q")


ACCEPTANCE_LINES: dict[str, str] = {}


def record_criterion(key: str, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  {key}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES[key] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
