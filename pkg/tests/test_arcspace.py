from fractions import Fraction
from itertools import product
from math import lcm

import pytest
from hypothesis import given, strategies as st

from pairs.arcspace import (
    contact_codim,
    contact_witness,
    count_jet_points,
    jet_equations,
    lct_via_arcs,
)
from pairs.budget import set_budget
from pairs.errors import BudgetExceeded, DomainError
from pairs.monomial import MonomialIdeal, lct, lct_certificate
from pairs.parse import parse_polynomial

from conftest import m_primary_ideals


def brute_codim(a, order):
    best = None
    for w in product(range(order + 1), repeat=a.n):
        if min(sum(x * y for x, y in zip(w, g)) for g in a.gens) >= order:
            best = sum(w) if best is None else min(best, sum(w))
    return best


@given(m_primary_ideals(top=4), st.integers(1, 6))
def test_contact_codim_matches_enumeration(a, order):
    assert contact_codim(a, order) == brute_codim(a, order)
    codim, w = contact_witness(a, order)
    assert sum(w) == codim
    assert min(sum(x * y for x, y in zip(w, g)) for g in a.gens) >= order


@given(m_primary_ideals(top=5), st.integers(0, 8))
def test_lower_bound(a, m):
    assert contact_codim(a, m + 1) >= lct(a) * (m + 1)


@given(m_primary_ideals(top=5), st.integers(1, 5), st.integers(1, 5))
def test_subadditive(a, k, l):
    assert contact_codim(a, k + l) <= contact_codim(a, k) + contact_codim(a, l)


@given(m_primary_ideals(top=5))
def test_limit_reaches_lct(a):
    _, den = lct_certificate(a)
    M = lcm(den, lct(a).denominator) - 1
    limit = lct_via_arcs(a, M)
    assert limit.value == lct(a)
    value, m_star = limit
    assert contact_codim(a, m_star + 1) == value * (m_star + 1)


def test_maximal_ideal_square_needs_a_longer_window():
    # lct = 1 but codim at m = 0 is 2: the denominator of lct alone is not enough
    a = MonomialIdeal.parse("x^2, x*y, y^2", 2)
    assert lct_via_arcs(a, 0).value == 2
    assert lct_via_arcs(a, 1).value == 1


def test_jet_equations_of_cusp():
    system = jet_equations(parse_polynomial("x^2 + y^3", 2), 2)
    strs = system.to_strings()
    assert strs[0] == "x1_0^2 + x2_0^3"
    assert strs[1] == "2*x1_0*x1_1 + 3*x2_0^2*x2_1"


@pytest.mark.parametrize("text, n", [("x", 1), ("x + y^2", 2), ("x + y*z", 3)])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_smooth_jet_counts(text, n, m):
    p = 3
    if p ** (n * (m + 1)) > 10 ** 6:
        pytest.skip("too large")
    jc = count_jet_points(parse_polynomial(text, n), m, p)
    assert jc.count == p ** ((n - 1) * (m + 1))


def test_cusp_point_count_and_budget():
    f = parse_polynomial("x^2 + y^3", 2)
    assert count_jet_points(f, 2, 5).count == 225
    with pytest.raises(BudgetExceeded):
        count_jet_points(f, 2, 5, budget=100)
    set_budget(10)
    try:
        with pytest.raises(BudgetExceeded):
            count_jet_points(f, 2, 5)
    finally:
        set_budget(None)


def test_bad_inputs():
    with pytest.raises(DomainError):
        contact_codim(MonomialIdeal.unit(2), 1)
    with pytest.raises(DomainError):
        lct_via_arcs(MonomialIdeal.maximal(2), -1)
