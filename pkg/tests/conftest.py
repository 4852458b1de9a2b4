import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from pairs.algebra import SparsePolynomial
from pairs.monomial import MonomialIdeal

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def exps(n, top=4):
    return st.tuples(*[st.integers(0, top)] * n)


@st.composite
def polys(draw, n=2, p=None, max_terms=4, top=4, zero_constant=False):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = draw(exps(n, top))
        if zero_constant and not any(e):
            continue
        if p is None:
            c = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 3)))
        else:
            c = draw(st.integers(0, p - 1))
        terms[e] = terms.get(e, 0) + c
    return SparsePolynomial(n, terms, p)


@st.composite
def m_primary_ideals(draw, n=None, top=5, extra=3):
    n = n or draw(st.integers(1, 3))
    gens = [tuple(draw(st.integers(1, top)) if j == i else 0 for j in range(n)) for i in range(n)]
    for _ in range(draw(st.integers(0, extra))):
        g = draw(exps(n, top))
        if any(g):
            gens.append(g)
    return MonomialIdeal(n, gens)


@st.composite
def proper_ideals(draw, n=None, top=4):
    n = n or draw(st.integers(1, 3))
    gens = [g for g in draw(st.lists(exps(n, top), min_size=1, max_size=4)) if any(g)]
    if not gens:
        gens = [tuple(int(i == 0) for i in range(n))]
    return MonomialIdeal(n, gens)


def random_m_primary(rng, n, top, extra=3):
    gens = [[rng.randint(1, top) if j == i else 0 for j in range(n)] for i in range(n)]
    gens += [[rng.randint(0, top) for _ in range(n)] for _ in range(rng.randint(0, extra))]
    return MonomialIdeal(n, [g for g in gens if any(g)])


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::test_criterion_" in rep.nodeid and rep.when == "call":
                name = rep.nodeid.split("::")[-1][len("test_criterion_"):]
                lines.append((name, outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
