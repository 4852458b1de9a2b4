from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pairs.algebra import (
    SparsePolynomial,
    frobenius_twist,
    is_prime,
    poly_pow_truncated,
    reduce_mul,
)
from pairs.errors import DomainError, InputError, ParseError
from pairs.parse import parse_monomial_list, parse_operator, parse_polynomial, parse_univariate

from conftest import polys

P = 5


@given(polys(), polys(), polys())
def test_ring_laws_over_q(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == SparsePolynomial.zero(2)
    assert f * SparsePolynomial.one(2) == f


@given(polys(p=P), polys(p=P), polys(p=P))
def test_ring_laws_over_fp(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f + (-f) == SparsePolynomial.zero(2, P)


@given(polys(), polys())
def test_reduction_mod_p_is_a_ring_map(f, g):
    # only denominators prime to p survive the map; ours are 1..3
    assert (f * g).mod(P) == f.mod(P) * g.mod(P)
    assert (f + g).mod(P) == f.mod(P) + g.mod(P)


@given(st.sampled_from([2, 3, 5, 7]), st.data())
def test_frobenius(p, data):
    f = data.draw(polys(p=p, max_terms=3, top=3))
    g = data.draw(polys(p=p, max_terms=3, top=3))
    assert (f + g) ** p == f ** p + g ** p
    assert f ** p == frobenius_twist(f, p)


@given(polys(p=3, max_terms=3, top=3), st.integers(0, 12), st.integers(1, 9))
def test_truncated_power_matches_full_expansion(f, r, cap):
    assert poly_pow_truncated(f, r, cap) == (f ** r).truncate(cap)


@given(polys(p=7, top=6), polys(p=7, top=6))
def test_reduce_mul_matches_filtered_product(a, b):
    import numpy as np

    kill = np.array([[3, 0], [1, 2], [0, 5]], dtype=np.int64)
    full = a * b
    expect = SparsePolynomial(2, {e: c for e, c in full.items()
                                  if not any(all(x >= y for x, y in zip(e, k)) for k in kill.tolist())}, 7)
    assert reduce_mul(a, b, kill) == expect


@given(polys(n=3, top=3), polys(n=3, top=3))
def test_derivatives(f, g):
    assert f.diff(0).diff(2) == f.diff(2).diff(0)
    assert (f * g).diff(1) == f.diff(1) * g + f * g.diff(1)


def test_canonical_order_and_printing():
    f = parse_polynomial("y^2 + 2*x*y + x^2", 2)
    assert f.to_str() == "x^2 + 2*x*y + y^2"
    assert parse_polynomial("(x+y)^2", 2) == f
    assert parse_polynomial("xy", 2) == parse_polynomial("x*y", 2)
    assert parse_polynomial("x^2/3 - 1", 1).to_str() == "-1 + (1/3)*x^2"
    assert parse_polynomial("3*x + 7", 1, field=5).to_str() == "2 + 3*x"


@given(polys(n=3, top=3))
def test_print_parse_round_trip(f):
    assert parse_polynomial(f.to_str(), 3) == f


def test_many_variables_use_indexed_names():
    f = parse_polynomial("x1*x4 + x2^3", 4)
    assert f.to_str() == "x1*x4 + x2^3"


@pytest.mark.parametrize("text, where", [
    ("x^", 2), ("x + + ", 4), ("x*(y", 4), ("x $ y", 2), ("x^y", 2),
])
def test_parse_errors_report_positions(text, where):
    with pytest.raises(ParseError) as err:
        parse_polynomial(text, 2)
    assert err.value.pos == where
    assert f"position {where}" in str(err.value)


def test_parse_rejections():
    with pytest.raises(InputError):
        parse_polynomial("z", 2)
    with pytest.raises(InputError):
        parse_polynomial("x/y", 2)
    with pytest.raises(InputError):
        parse_monomial_list("x + y", 2)
    with pytest.raises(InputError):
        parse_operator("dx*x", 1)
    with pytest.raises(DomainError):
        parse_polynomial("x", 1, field=4)


def test_univariate_and_operator_parsing():
    b = parse_univariate("(s+5/6)*(s+1)*(s+7/6)")
    assert b(Fraction(-1)) == 0 and b(Fraction(-5, 6)) == 0
    op = parse_operator("(1/27)*dy^3 + (1/6)*y*dx^2*dy", 2)
    assert len(op.terms) == 2
    assert parse_operator(op.to_str(), 2) == op


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
