"""Colength, Samuel multiplicity and symbolic powers of monomial ideals."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import factorial, prod

import numpy as np

from . import kernels
from .budget import check_budget
from .errors import DomainError, InputError
from .monomial import MonomialIdeal, dominates, integral_closure_is_power_of_m, is_m_primary, lct, minimalize


def _pure_powers(a):
    ok, c = is_m_primary(a)
    if not ok:
        raise DomainError("ideal is not m-primary")
    if a.is_unit:
        raise DomainError("the unit ideal has colength 0 and no multiplicity")
    return c


def _colength_from(gens, c):
    check_budget(prod(c[:-1]), "colength box")
    G = np.asarray(gens, dtype=np.int64).reshape(-1, len(c))
    return int(kernels.colength_count(G, np.array(c, dtype=np.int64)))


def colength(a):
    """Length of R/a: the number of monomials outside a."""
    c = _pure_powers(a)
    return _colength_from(a.gens, c)


def _power_generators(a, k):
    """Exponent vectors generating a^k (not necessarily minimal)."""
    G = np.array(a.gens, dtype=np.int64)
    S = np.zeros((1, a.n), dtype=np.int64)
    for _ in range(k):
        S = np.unique((S[:, None, :] + G[None, :, :]).reshape(-1, a.n), axis=0)
    return S


def colength_of_power(a, k):
    c = _pure_powers(a)
    return _colength_from(_power_generators(a, k), tuple(k * ci for ci in c))


def interpolate(xs, ys):
    """Coefficients (low degree first) of the polynomial through the points."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n):
            coeffs[k] += yi * basis[k] / denom
    return coeffs


def evaluate(coeffs, x):
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


@dataclass(frozen=True)
class HilbertSamuelSample:
    ks: tuple
    colengths: tuple
    polynomial: tuple  # coefficients, low degree first
    stable: bool

    @property
    def multiplicity(self):
        n = len(self.polynomial) - 1
        return self.polynomial[-1] * factorial(n)


def hilbert_samuel(a, k0=None, retries=4):
    """Sample k -> l(R/a^k) at n + 2 consecutive k, fit the degree-n
    polynomial through the first n + 1, and certify it with the last."""
    c = _pure_powers(a)
    n = a.n
    k0 = n * max(c) if k0 is None else k0
    for _ in range(retries + 1):
        ks = tuple(range(k0, k0 + n + 2))
        ls = tuple(colength_of_power(a, k) for k in ks)
        poly = tuple(interpolate(ks[: n + 1], ls[: n + 1]))
        stable = evaluate(poly, ks[-1]) == ls[-1]
        sample = HilbertSamuelSample(ks, ls, poly, stable)
        if stable and sample.multiplicity.denominator == 1:
            return sample
        k0 *= 2
    return sample


def samuel_multiplicity(a, retries=4):
    sample = hilbert_samuel(a, retries=retries)
    if not sample.stable or sample.multiplicity.denominator != 1:
        raise DomainError("Hilbert-Samuel fit did not stabilize within the retry budget")
    return int(sample.multiplicity)


def check_lct_multiplicity_inequalities(a):
    """Compare l(R/a) and e(a) against n^n/(n! c^n) and n^n/c^n."""
    from .report import InvariantReport

    n = a.n
    c = lct(a)
    length = colength(a)
    sample = hilbert_samuel(a)
    if not sample.stable:
        raise DomainError("Hilbert-Samuel fit did not stabilize")
    e = int(sample.multiplicity)
    bound_e = Fraction(n ** n) / c ** n
    bound_l = bound_e / factorial(n)
    k = integral_closure_is_power_of_m(a)
    equality = e == bound_e
    results = {
        "n": n,
        "lct": c,
        "colength": length,
        "multiplicity": e,
        "colength_bound": bound_l,
        "multiplicity_bound": bound_e,
        "colength_inequality_holds": length >= bound_l,
        "multiplicity_inequality_holds": e >= bound_e,
        "multiplicity_equality": equality,
        "closure_is_power_of_m": k,
        "equality_biconditional_holds": equality == (k is not None),
    }
    certs = [{
        "hilbert_samuel_ks": list(sample.ks),
        "hilbert_samuel_colengths": list(sample.colengths),
        "hilbert_samuel_polynomial": list(sample.polynomial),
        "stable": sample.stable,
    }]
    return InvariantReport("ineq", {"ideal": a.to_str(), "n": n}, results, certs)


# ---------------------------------------------------------------------------
# symbolic powers of squarefree monomial ideals


def minimal_primes(a):
    """Minimal vertex covers of the hypergraph of generator supports; each
    cover S is the prime (x_i : i in S)."""
    if not a.is_squarefree:
        raise DomainError("ideal is not squarefree")
    if a.is_unit or a.is_zero:
        raise DomainError("need a proper nonzero ideal")
    edges = [frozenset(i for i, x in enumerate(g) if x) for g in a.gens]
    covers = []
    for size in range(1, a.n + 1):
        for S in combinations(range(a.n), size):
            S = frozenset(S)
            if all(S & e for e in edges) and not any(C <= S for C in covers):
                covers.append(S)
    return [tuple(sorted(S)) for S in covers]


def in_symbolic_power(u, primes, t):
    return all(sum(u[i] for i in S) >= t for S in primes)


def symbolic_power(a, t):
    """Minimal generators of a^(t) = intersection of P_S^t over minimal primes."""
    primes = minimal_primes(a)
    check_budget((t + 1) ** a.n, "symbolic power box")
    members = [u for u in product(range(t + 1), repeat=a.n) if in_symbolic_power(u, primes, t)]
    return MonomialIdeal(a.n, members)


def in_ordinary_power(a, u, m):
    """Is x^u in a^m?  Some sum of m generators must lie below u."""
    for combo in combinations_with_replacement(a.gens, m):
        if dominates(u, [sum(col) for col in zip(*combo)] if combo else (0,) * a.n):
            return True
    return False


def symbolic_power_containment(a, m):
    """Does a^(m n) lie in a^m, n the ambient dimension?"""
    if m < 1:
        raise InputError("m must be positive")
    sym = symbolic_power(a, m * a.n)
    return all(in_ordinary_power(a, g, m) for g in sym.gens)


def containment_report(a, m):
    from .report import InvariantReport

    t = m * a.n
    primes = minimal_primes(a)
    sym = symbolic_power(a, t)
    failures = [g for g in sym.gens if not in_ordinary_power(a, g, m)]
    # smallest symbolic power that already escapes a^m, if any below t
    escape = None
    for s in range(m, t + 1):
        outside = [g for g in symbolic_power(a, s).gens if not in_ordinary_power(a, g, m)]
        if not outside:
            break
        escape = (s, outside[0])
    results = {"contained": not failures, "symbolic_exponent": t, "minimal_primes": [list(S) for S in primes],
               "symbolic_generators": [list(g) for g in sym.gens]}
    certs = []
    if escape is not None:
        certs.append({"witness_exponent": list(escape[1]), "in_symbolic_power": escape[0],
                      "not_in_power": m})
    if failures:
        certs.append({"counterexample": [list(g) for g in failures]})
    return InvariantReport("sympow", {"ideal": a.to_str(), "n": a.n, "m": m}, results, certs)
