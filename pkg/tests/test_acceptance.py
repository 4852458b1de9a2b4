"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s``; the terminal summary
also lists every criterion's outcome.
"""
import random
from fractions import Fraction
from math import floor, lcm, prod

import pytest

from pairs.arcspace import contact_codim, lct_via_arcs
from pairs.bernstein import bs_root_report, verify_functional_equation
from pairs.charp import fpt_estimate, nu_table
from pairs.monomial import (
    MonomialIdeal,
    integral_closure_is_power_of_m,
    jumping_numbers,
    lct,
    lct_certificate,
    multiplier_ideal,
    skoda_check,
)
from pairs.multiplicity import (
    colength,
    in_ordinary_power,
    samuel_multiplicity,
    symbolic_power,
    symbolic_power_containment,
)
from pairs.parse import parse_polynomial
from pairs.xcheck import b_perturbations, paper_triples, primes_between

from conftest import random_m_primary

CUSP = parse_polynomial("x^2 + y^3", 2)
SEED = 1729


def verdict(label, ok, detail=""):
    print(f"\n{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
    assert ok, detail


def diagonal(exps):
    n = len(exps)
    return MonomialIdeal(n, [[exps[i] if j == i else 0 for j in range(n)] for i in range(n)])


def test_criterion_01_diagonal_lct():
    rng = random.Random(SEED)
    bad = []
    for _ in range(20):
        exps = [rng.randint(1, 9) for _ in range(rng.randint(1, 3))]
        if lct(diagonal(exps)) != sum(Fraction(1, a) for a in exps):
            bad.append(exps)
    verdict("01 lct of diagonal ideals", not bad, f"failures {bad}" if bad else "20 ideals")


def test_criterion_02_snc_multiplier_ideals():
    rng = random.Random(SEED + 2)
    bad = []
    for _ in range(20):
        n = rng.randint(1, 3)
        a = [rng.randint(0, 7) for _ in range(n)]
        if not any(a):
            a[rng.randrange(n)] = rng.randint(1, 7)
        for lam in (Fraction(1, 3), Fraction(1, 2), Fraction(5, 6), Fraction(3, 2)):
            got = multiplier_ideal(MonomialIdeal(n, [a]), lam)
            if got != MonomialIdeal(n, [[floor(lam * x) for x in a]]):
                bad.append((a, lam))
    verdict("02 SNC multiplier ideals", not bad, f"failures {bad}" if bad else "80 cases")


def test_criterion_03_cusp_jumping_numbers():
    got = jumping_numbers(MonomialIdeal.parse("x^3, y^5", 2), Fraction(99, 100))
    want = [Fraction(8, 15), Fraction(11, 15), Fraction(13, 15), Fraction(14, 15)]
    verdict("03 jumping numbers of (x^3, y^5)", got == want, ", ".join(map(str, got)))


def test_criterion_04_nu_table():
    want = {7: [5, 40, 285], 5: [3, 19, 99], 13: [10]}
    problems = []
    for p, values in want.items():
        t = nu_table(CUSP, p, len(values))
        got = [t.entries[e] for e in range(1, len(values) + 1)]
        if got != values:
            problems.append(f"p={p}: {got}")
        for e in range(1, len(values) + 1):
            if not p * t.entries[e - 1] <= t.entries[e] <= p * t.entries[e - 1] + p - 1:
                problems.append(f"window p={p} e={e}")
        if not t.ratios_monotone():
            problems.append(f"ratios p={p}")
    verdict("04 nu table of x^2+y^3", not problems, "; ".join(problems) or "7 values")


def test_criterion_05_fpt_cusp():
    bad = []
    for p in primes_between(5, 31):
        est = fpt_estimate(CUSP, p, 3)
        want = Fraction(5, 6) if p % 3 == 1 else Fraction(5, 6) - Fraction(1, 6 * p)
        if est.conjectured != want or not est.lower <= want <= est.upper:
            bad.append((p, est.conjectured))
    verdict("05 F-pure thresholds of the cusp", not bad, f"failures {bad}" if bad else "p = 5..31")


def test_criterion_06_charp_vs_char0():
    c = lct(MonomialIdeal.parse("x^2, y^3", 2))
    primes = primes_between(5, 31)
    cps = [fpt_estimate(CUSP, p, 3).conjectured for p in primes]
    below = all(cp <= c for cp in cps)
    gaps = [c - cp for cp in cps if cp != c]
    converging = all(b < a for a, b in zip(gaps, gaps[1:])) and all(
        cp == c for p, cp in zip(primes, cps) if p % 3 == 1)
    verdict("06 c_p <= lct and c_p -> lct", c == Fraction(5, 6) and below and converging,
            f"gaps {[str(g) for g in gaps]}")


def test_criterion_07_bernstein_verification():
    problems = []
    for b, P, f in paper_triples():
        if not verify_functional_equation(b, P, f):
            problems.append(f"{f} not verified")
        if any(verify_functional_equation(bb, P, f) for bb in b_perturbations(b)):
            problems.append(f"{f}: perturbed b accepted")
        if any(verify_functional_equation(b, PP, f) for PP in P.perturbations()):
            problems.append(f"{f}: perturbed P accepted")
    verdict("07 functional equations", not problems, "; ".join(problems) or "4 triples")


def test_criterion_08_mod_p_root_hunt():
    rep = bs_root_report(CUSP, primes_between(5, 47), 2, 12, (Fraction(-2), Fraction(0)))
    got = set(rep.results["candidates"])
    largest = Fraction(rep.results["largest_candidate"])
    ok = got == {"-5/6", "-7/6", "-1/1"} and largest == -lct(MonomialIdeal.parse("x^2, y^3", 2))
    verdict("08 mod-p root candidates of the cusp", ok, ", ".join(sorted(got)))


def test_criterion_09_arcs_vs_lct():
    rng = random.Random(SEED + 9)
    bad = []
    for _ in range(20):
        a = random_m_primary(rng, rng.randint(1, 3), 5)
        c = lct(a)
        _, den = lct_certificate(a)
        M = lcm(den, c.denominator) - 1
        limit = lct_via_arcs(a, M)
        if limit.value != c:
            bad.append(f"{a.to_str()}: {limit.value} != {c}")
        for m in range(M + 1):
            if contact_codim(a, m + 1) < c * (m + 1):
                bad.append(f"{a.to_str()}: bound fails at m={m}")
    verdict("09 arc-space limit equals lct", not bad, "; ".join(bad) or "20 ideals")


def test_criterion_10_multiplicity_inequalities():
    rng = random.Random(SEED + 10)
    bad = []
    for _ in range(30):
        n = rng.randint(1, 3)
        a = random_m_primary(rng, n, 5 if n < 3 else 4)
        c = lct(a)
        bound = Fraction(n ** n) / c ** n
        fact = prod(range(1, n + 1))
        length, e = colength(a), samuel_multiplicity(a)
        if not length >= bound / fact:
            bad.append(f"(i) fails for {a.to_str()}")
        if not e >= bound:
            bad.append(f"(ii) fails for {a.to_str()}")
        if (e == bound) != (integral_closure_is_power_of_m(a) is not None):
            bad.append(f"equality clause fails for {a.to_str()}")
    for _ in range(10):
        exps = [rng.randint(1, 7) for _ in range(rng.randint(1, 3))]
        if samuel_multiplicity(diagonal(exps)) != prod(exps):
            bad.append(f"e(diagonal {exps})")
    verdict("10 lct/multiplicity inequalities", not bad, "; ".join(bad) or "30 ideals + 10 diagonal")


def test_criterion_11_skoda_periodicity():
    rng = random.Random(SEED + 11)
    bad = []
    for _ in range(10):
        n = rng.randint(1, 3)
        a = random_m_primary(rng, n, 4)
        for lam in (Fraction(n - 1), n - Fraction(1, 2), Fraction(n)):
            if not skoda_check(a, lam):
                bad.append(f"{a.to_str()} at {lam}")
    verdict("11 Skoda periodicity", not bad, "; ".join(bad) or "10 ideals x 3 lambdas")


def test_criterion_12_symbolic_powers():
    a = MonomialIdeal.parse("x*y, x*z, y*z", 3)
    contained = symbolic_power_containment(a, 2)
    witness = (1, 1, 1)
    nontrivial = witness in symbolic_power(a, 2) and not in_ordinary_power(a, witness, 2)
    verdict("12 symbolic power containment", contained and nontrivial,
            f"contained={contained}, xyz witness={nontrivial}")
