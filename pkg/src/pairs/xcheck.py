"""Cross-module validation suites run by ``pairs xcheck``.

Each suite returns ``(name, passed, detail)``.  The samples are seeded, so
two runs of the same version report the same thing.
"""
import random
from fractions import Fraction
from math import floor, lcm

from .arcspace import contact_codim, lct_via_arcs
from .bernstein import bs_root_report, verify_functional_equation
from .charp import fpt_estimate, nu_table
from .monomial import (
    MonomialIdeal,
    integral_closure_is_power_of_m,
    jumping_numbers,
    lct,
    lct_certificate,
    multiplier_ideal,
    skoda_check,
)
from .multiplicity import (
    colength,
    in_ordinary_power,
    in_symbolic_power,
    minimal_primes,
    samuel_multiplicity,
    symbolic_power_containment,
)
from .parse import parse_operator, parse_polynomial, parse_univariate

CUSP = "x^2 + y^3"
CUSP_B = "(s+5/6)*(s+1)*(s+7/6)"
CUSP_OP = "(1/27)*dy^3 + (1/6)*y*dx^2*dy + (1/8)*x*dx^3 + (3/8)*dx^2"


def primes_between(lo, hi):
    return [p for p in range(max(2, lo), hi + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def random_m_primary(rng, n, max_exp, extra=3):
    gens = []
    for i in range(n):
        g = [0] * n
        g[i] = rng.randint(1, max_exp)
        gens.append(g)
    for _ in range(rng.randint(0, extra)):
        gens.append([rng.randint(0, max_exp) for _ in range(n)])
    gens = [g for g in gens if any(g)]
    return MonomialIdeal(n, gens)


def paper_triples():
    """(b, P, f) for f = x, sum of squares (n = 2, 3) and the cusp."""
    out = [(parse_univariate("s+1"), parse_operator("dx", 1), parse_polynomial("x", 1))]
    for n in (2, 3):
        names = ["x", "y", "z"][:n]
        f = parse_polynomial(" + ".join(f"{v}^2" for v in names), n)
        op = parse_operator(" + ".join(f"(1/4)*d{v}^2" for v in names), n)
        b = parse_univariate(f"(s+1)*(s+{n}/2)")
        out.append((b, op, f))
    out.append((parse_univariate(CUSP_B), parse_operator(CUSP_OP, 2), parse_polynomial(CUSP, 2)))
    return out


def b_perturbations(b):
    from .bernstein import UPoly

    for j in range(len(b.coeffs) + 1):
        cs = list(b.coeffs) + [Fraction(0)] * (j + 1 - len(b.coeffs))
        cs[j] += 1
        yield UPoly(cs)


def suite_lct_diagonal(rng, count=20):
    for _ in range(count):
        n = rng.randint(1, 3)
        a = [rng.randint(1, 9) for _ in range(n)]
        ideal = MonomialIdeal(n, [[a[i] if j == i else 0 for j in range(n)] for i in range(n)])
        if lct(ideal) != sum(Fraction(1, x) for x in a):
            return False, f"lct mismatch for exponents {a}"
    return True, f"{count} diagonal ideals"


def suite_snc(rng, count=20):
    lams = [Fraction(1, 3), Fraction(1, 2), Fraction(5, 6), Fraction(3, 2)]
    for _ in range(count):
        n = rng.randint(1, 3)
        a = [rng.randint(0, 6) for _ in range(n)]
        if not any(a):
            a[0] = 1
        ideal = MonomialIdeal(n, [a])
        for lam in lams:
            expect = MonomialIdeal(n, [[floor(lam * x) for x in a]])
            if multiplier_ideal(ideal, lam) != expect:
                return False, f"J((x^{a})^{lam}) wrong"
    return True, f"{count} principal monomials x 4 lambdas"


def suite_cusp_jumps():
    got = jumping_numbers(MonomialIdeal.parse("x^3, y^5", 2), Fraction(99, 100))
    want = [Fraction(8, 15), Fraction(11, 15), Fraction(13, 15), Fraction(14, 15)]
    return got == want, ", ".join(str(x) for x in got)


def suite_nu_table():
    f = parse_polynomial(CUSP, 2)
    want = {7: [5, 40, 285], 5: [3, 19, 99], 13: [10]}
    for p, values in want.items():
        t = nu_table(f, p, len(values))
        got = [t.entries[e] for e in range(1, len(values) + 1)]
        if got != values or not all(t.window_verified.values()) or not t.ratios_monotone():
            return False, f"p={p}: {got}"
    return True, "nu(7^e), nu(5^e), nu(13)"


def cusp_fpt(p):
    return Fraction(5, 6) if p % 3 == 1 else Fraction(5, 6) - Fraction(1, 6 * p)


def suite_fpt(primes=None):
    f = parse_polynomial(CUSP, 2)
    primes = primes or primes_between(5, 31)
    for p in primes:
        est = fpt_estimate(f, p, 3)
        if est.conjectured != cusp_fpt(p) or not est.lower <= est.conjectured <= est.upper:
            return False, f"p={p}: {est.conjectured}"
    return True, f"primes {primes[0]}..{primes[-1]}"


def suite_charp_vs_char0(primes=None):
    f = parse_polynomial(CUSP, 2)
    c = lct(MonomialIdeal.parse("x^2, y^3", 2))
    primes = primes or primes_between(5, 31)
    values = [fpt_estimate(f, p, 3).conjectured for p in primes]
    if any(v > c for v in values):
        return False, "some c_p exceeds lct"
    gaps = [c - v for v in values if v != c]
    shrinking = all(b < a for a, b in zip(gaps, gaps[1:]))
    return shrinking, "c_p <= 5/6, gap shrinking along p = 2 mod 3"


def suite_bernstein():
    for b, P, f in paper_triples():
        if not verify_functional_equation(b, P, f):
            return False, f"identity fails for f = {f}"
        for bb in b_perturbations(b):
            if verify_functional_equation(bb, P, f):
                return False, f"perturbed b accepted for f = {f}"
        for PP in P.perturbations():
            if verify_functional_equation(b, PP, f):
                return False, f"perturbed P accepted for f = {f}"
    return True, "4 triples, all perturbations rejected"


def suite_root_hunt():
    f = parse_polynomial(CUSP, 2)
    rep = bs_root_report(f, primes_between(5, 47), 2, 12)
    got = set(rep.results["candidates"])
    ok = got == {"-5/6", "-7/6", "-1/1"} and rep.results["largest_candidate"] == "-5/6"
    return ok, ", ".join(sorted(got))


def suite_arcs(rng, count=20):
    for _ in range(count):
        a = random_m_primary(rng, rng.randint(1, 3), 5)
        c = lct(a)
        _, den = lct_certificate(a)
        M = lcm(den, c.denominator) - 1
        limit = lct_via_arcs(a, M)
        if limit.value != c:
            return False, f"{a}: arcs give {limit.value}, lct {c}"
        if any(codim < c * (m + 1) for m, codim in enumerate(limit.codims)):
            return False, f"{a}: lower bound violated"
    return True, f"{count} random m-primary ideals"


def suite_multiplicity(rng, count=30):
    for _ in range(count):
        n = rng.randint(1, 3)
        a = random_m_primary(rng, n, 5 if n < 3 else 4)
        c = lct(a)
        bound = Fraction(n ** n) / c ** n
        factorial_n = [1, 1, 2, 6][n]
        length, e = colength(a), samuel_multiplicity(a)
        if length < bound / factorial_n or e < bound:
            return False, f"inequality fails for {a}"
        if (e == bound) != (integral_closure_is_power_of_m(a) is not None):
            return False, f"equality clause fails for {a}"
    for _ in range(10):
        n = rng.randint(1, 3)
        ex = [rng.randint(1, 6) for _ in range(n)]
        diag = MonomialIdeal(n, [[ex[i] if j == i else 0 for j in range(n)] for i in range(n)])
        expect = 1
        for x in ex:
            expect *= x
        if samuel_multiplicity(diag) != expect:
            return False, f"e({diag}) != {expect}"
    return True, f"{count} random ideals, 10 diagonal"


def suite_skoda(rng, count=10):
    for _ in range(count):
        n = rng.randint(1, 3)
        a = random_m_primary(rng, n, 4)
        for lam in (Fraction(n - 1), n - Fraction(1, 2), Fraction(n)):
            if not skoda_check(a, lam):
                return False, f"{a} at lambda={lam}"
    return True, f"{count} random ideals"


def suite_symbolic():
    a = MonomialIdeal.parse("xy, xz, yz", 3)
    primes = minimal_primes(a)
    witness = (1, 1, 1)
    ok = (symbolic_power_containment(a, 2)
          and in_symbolic_power(witness, primes, 2)
          and not in_ordinary_power(a, witness, 2))
    return ok, "a^(6) in a^2; xyz in a^(2) minus a^2"


def run_all(seed=0, quick=False):
    rng = random.Random(seed)
    suites = [
        ("lct-diagonal", lambda: suite_lct_diagonal(rng)),
        ("snc-multiplier", lambda: suite_snc(rng)),
        ("cusp-jumps", suite_cusp_jumps),
        ("nu-table", suite_nu_table),
        ("fpt-cusp", lambda: suite_fpt(primes_between(5, 13) if quick else None)),
        ("charp-vs-char0", lambda: suite_charp_vs_char0(primes_between(5, 13) if quick else None)),
        ("bernstein-verify", suite_bernstein),
        ("root-hunt", suite_root_hunt),
        ("arcs-vs-lct", lambda: suite_arcs(rng, 5 if quick else 20)),
        ("multiplicity", lambda: suite_multiplicity(rng, 8 if quick else 30)),
        ("skoda", lambda: suite_skoda(rng, 3 if quick else 10)),
        ("symbolic-powers", suite_symbolic),
    ]
    results = []
    for name, run in suites:
        ok, detail = run()
        results.append((name, bool(ok), detail))
    return results


def contact_is_monotone(a, top):
    values = [contact_codim(a, k) for k in range(1, top + 1)]
    return all(x <= y for x, y in zip(values, values[1:]))
