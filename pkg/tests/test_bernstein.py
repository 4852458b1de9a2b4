from fractions import Fraction

import pytest

from pairs.bernstein import (
    UPoly,
    apply_specialized,
    bs_root_report,
    candidate_grid,
    root_candidates_modp,
    verify_functional_equation,
)
from pairs.errors import DomainError
from pairs.parse import parse_operator, parse_polynomial, parse_univariate
from pairs.xcheck import b_perturbations, paper_triples, primes_between

TRIPLES = paper_triples()


def specialization_holds(b, P, f, m):
    """b(m) f^m == P(m) . f^(m+1), computed on honest polynomials."""
    return f ** m * b(Fraction(m)) == apply_specialized(P, m, f ** (m + 1))


@pytest.mark.parametrize("b, P, f", TRIPLES, ids=["x", "sq2", "sq3", "cusp"])
def test_known_equations_verify(b, P, f):
    check = verify_functional_equation(b, P, f)
    assert check.verified and check.residual.is_zero()
    for m in range(6):
        assert specialization_holds(b, P, f, m)


@pytest.mark.parametrize("b, P, f", TRIPLES, ids=["x", "sq2", "sq3", "cusp"])
def test_perturbations_fail(b, P, f):
    for bb in b_perturbations(b):
        assert not verify_functional_equation(bb, P, f)
        assert not all(specialization_holds(bb, P, f, m) for m in range(6))
    for PP in P.perturbations():
        assert not verify_functional_equation(b, PP, f)
        assert not all(specialization_holds(b, PP, f, m) for m in range(6))


def test_wrong_polynomial_fails():
    b, P, _ = TRIPLES[-1]
    assert not verify_functional_equation(b, P, parse_polynomial("x^2 + y^5", 2))


def test_upoly_arithmetic():
    b = UPoly.from_roots([Fraction(-1), Fraction(-5, 6)])
    assert b == parse_univariate("(s+1)*(s+5/6)")
    assert b.degree == 2 and b(Fraction(-1)) == 0
    assert (b * b - b * b).is_zero()


def test_candidate_grid():
    grid = candidate_grid(3, Fraction(-1), Fraction(0))
    assert grid == [Fraction(-1), Fraction(-2, 3), Fraction(-1, 2), Fraction(-1, 3)]


def test_cusp_root_report():
    rep = bs_root_report(parse_polynomial("x^2 + y^3", 2), primes_between(5, 47), 2, 12)
    assert set(rep.results["candidates"]) == {"-5/6", "-7/6", "-1/1"}
    assert rep.results["largest_candidate"] == "-5/6"
    assert any("multiplicit" in note for note in rep.notes)


@pytest.mark.parametrize("text, roots", [
    ("x", {"-1/1"}),
    ("x^2 + y^2", {"-1/1"}),
])
def test_root_report_simple(text, roots):
    rep = bs_root_report(parse_polynomial(text, 2), primes_between(5, 47), 2, 12)
    assert set(rep.results["candidates"]) == roots


def test_report_with_equation_checks_roots():
    b, P, f = TRIPLES[-1]
    rep = bs_root_report(f, primes_between(5, 47), 2, 12, b=b, P=P)
    assert rep.results["functional_equation_verified"] is True
    assert rep.results["candidates_are_roots"] is True


def test_candidates_track_a_single_prime():
    rc = root_candidates_modp(parse_polynomial("x^2 + y^3", 2), [7], 2, 6)
    assert 7 in rc.per_prime and rc.nus[7][1] == 5


def test_domain_errors():
    with pytest.raises(DomainError):
        verify_functional_equation(UPoly(), parse_operator("dx", 1), parse_polynomial("x", 1))
