"""Frobenius powers, nu^J(p^e), F-thresholds and F-pure threshold estimates.

nu^J(q) is the largest r with f^r outside J^[q] = (u^q : u in J).  For a
principal f the powers f^r are taken in F_p[x] / J^[q], i.e. monomials of
J^[q] are deleted after every product (harmless, since J^[q] is an ideal).
Level e is seeded from level e-1 by f^(p k) = (f^k)(x^p), which holds over
F_p, and then stepped at most p-1 times.
"""
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import SparsePolynomial, cap_matrix, frobenius_twist, is_prime, poly_pow_truncated, reduce_mul
from .errors import DomainError
from .monomial import MonomialIdeal, dominates, minimalize


def frobenius_power(J, q):
    """J^[q] for a monomial ideal J: generators scaled by q."""
    return MonomialIdeal(J.n, [tuple(q * x for x in g) for g in J.gens])


def frobenius_membership(g, J, q):
    """True iff every monomial of g is divisible by x^(q u) for a generator
    u of J.  The zero polynomial lies in every ideal."""
    big = [tuple(q * x for x in u) for u in J.gens]
    return all(any(dominates(exp, b) for b in big) for exp in g.support())


def in_radical(exp, J):
    """x^exp lies in rad(J), J monomial: its support contains that of a
    generator."""
    return any(all(e > 0 for e, x in zip(exp, u) if x > 0) for u in J.gens)


def _kill_rows(J, q):
    return np.array([[q * x for x in u] for u in J.gens], dtype=np.int64).reshape(-1, J.n)


def _prepare(f, J, p):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if f.p is None:
        f = f.mod(p)
    elif f.p != p:
        raise DomainError(f"polynomial is over F_{f.p}, not F_{p}")
    if J is None:
        J = MonomialIdeal.maximal(f.nvars)
    if J.n != f.nvars:
        raise DomainError("ideal and polynomial live in different rings")
    if f.is_zero():
        raise DomainError(f"f reduces to zero mod {p}")
    if f.constant_term():
        raise DomainError("f is a unit at the origin")
    if J.is_unit or J.is_zero:
        raise DomainError("J must be a proper nonzero ideal")
    if not all(in_radical(exp, J) for exp in f.support()):
        raise DomainError("f does not lie in the radical of J")
    return f, J


@dataclass
class NuTable:
    """nu^J(p^e) for one (f, J, p), filled level by level."""

    f: SparsePolynomial
    J: MonomialIdeal
    p: int
    entries: dict = field(default_factory=dict)
    window_verified: dict = field(default_factory=dict)
    _frontier: dict = field(default_factory=dict, repr=False)

    def rows(self):
        """Report rows (p, e, nu, nu/p^e, window-verified) for e >= 1."""
        return [
            (self.p, e, nu, Fraction(nu, self.p ** e), self.window_verified[e])
            for e, nu in sorted(self.entries.items())
            if e >= 1
        ]

    def ratios_monotone(self):
        levels = sorted(self.entries)
        return all(
            Fraction(self.entries[a], self.p ** a) <= Fraction(self.entries[b], self.p ** b)
            for a, b in zip(levels, levels[1:])
        )


def _step_until_zero(g, f, kill, r, limit):
    """Multiply g by f until the reduced product vanishes.  Returns the last
    nonzero power and its exponent."""
    while r < limit:
        h = reduce_mul(g, f, kill)
        if h.is_zero():
            return g, r, True
        g = h
        r += 1
    return g, r, False


def nu(f, J, p, e, table=None):
    """nu^J(p^e) of a principal f (over Q, reduced mod p, or over F_p)."""
    if e < 0:
        raise DomainError("level e must be >= 0")
    if table is None:
        f, J = _prepare(f, J, p)
        table = NuTable(f, J, p)
    f, J = table.f, table.J
    if 0 not in table.entries:
        # q = 1: largest r with f^r outside J itself; finite because f is in rad(J)
        one = SparsePolynomial.one(f.nvars, p)
        limit = (max(sum(u) for u in J.gens) + 1) * (len(f) + 1) * (f.nvars + 1) * 4
        g, r, done = _step_until_zero(one, f, _kill_rows(J, 1), 0, limit)
        if not done:
            raise RuntimeError("level-0 search did not terminate")
        table.entries[0] = r
        table.window_verified[0] = True
        table._frontier[0] = g
    for level in range(1, e + 1):
        if level in table.entries:
            continue
        q = p ** level
        kill = _kill_rows(J, q)
        prev = table.entries[level - 1]
        lo = p * prev
        g = frobenius_twist(table._frontier[level - 1], p)
        g, r, done = _step_until_zero(g, f, kill, lo, lo + p)
        if not done:
            # the window bound failed: fall back to an open-ended search
            g, r, done = _step_until_zero(g, f, kill, r, r + (J.n + 1) * q * max(1, f.degree()))
            if not done:
                raise RuntimeError("nu search did not terminate")
        table.entries[level] = r
        table.window_verified[level] = lo <= r <= lo + p - 1
        table._frontier[level] = g
    return table.entries[e]


def nu_table(f, p, E, J=None):
    f, J = _prepare(f, J, p)
    table = NuTable(f, J, p)
    nu(f, J, p, E, table)
    return table


def nu_windowless(f, J, p, e):
    """nu^J(p^e) by doubling + bisection over r, each f^r computed from
    scratch by square-and-multiply.  Independent of the window and of the
    Frobenius seeding; used as a cross-check."""
    f, J = _prepare(f, J, p)
    q = p ** e
    maximal = J == MonomialIdeal.maximal(f.nvars)
    kill = _kill_rows(J, q)

    def outside(r):
        if maximal:
            return not poly_pow_truncated(f, r, q).is_zero()
        result = SparsePolynomial.one(f.nvars, p)
        base = f
        k = r
        while k:
            if k & 1:
                result = reduce_mul(result, base, kill)
            k >>= 1
            if k:
                base = reduce_mul(base, base, kill)
        return not result.is_zero()

    if not outside(0):
        raise DomainError("1 lies in J^[q]")
    hi = 1
    while outside(hi):
        hi *= 2
    lo = hi // 2  # outside(lo) holds, outside(hi) fails
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if outside(mid):
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class FptEstimate:
    p: int
    lower: Fraction
    upper: Fraction
    conjectured: Fraction | None
    stable_levels: int
    depth: int
    nus: tuple

    @property
    def certified(self):
        return (self.lower, self.upper)


def _estimate(p, nus):
    """nus[e] = nu(p^e) for e = 0..E."""
    E = len(nus) - 1
    q = p ** E
    lower = Fraction(nus[E], q)
    upper = Fraction(nus[E] + 1, q)
    incs = [nus[e] - p * nus[e - 1] for e in range(1, E + 1)]
    stable = 0
    for d in reversed(incs):
        if d != incs[-1]:
            break
        stable += 1
    need = max(2, E - 2)
    conjectured = None
    if E >= 1 and stable >= need:
        conjectured = (nus[E] + Fraction(incs[-1], p - 1)) / q
    return FptEstimate(p, lower, upper, conjectured, stable, E, tuple(nus))


def fpt_estimate(f, p, E, J=None):
    """Certified interval [nu/q, (nu+1)/q] for c^J(f) at q = p^E, plus a
    closed form when the increments nu(p^(e+1)) - p nu(p^e) have settled
    (labeled conjectural)."""
    if E < 1:
        raise DomainError("depth must be >= 1")
    table = nu_table(f, p, E, J)
    return _estimate(p, [table.entries[e] for e in range(E + 1)])


# ---------------------------------------------------------------------------
# monomial ideals: nu by integer programming


def nu_monomial(a, J, q):
    """Largest r such that some sum of r generators of a lies outside J^[q].

    Tracks only the minimal surviving sums: if s survives so does anything
    below it, and s + g >= m + g for the minimal m <= s.
    """
    big = [tuple(q * x for x in u) for u in J.gens]
    alive = [(0,) * a.n]
    if any(dominates(alive[0], b) for b in big):
        raise DomainError("J^[q] is the unit ideal")
    r = 0
    while True:
        nxt = [tuple(x + y for x, y in zip(s, g)) for s in alive for g in a.gens]
        nxt = [s for s in nxt if not any(dominates(s, b) for b in big)]
        if not nxt:
            return r
        alive = minimalize(nxt)
        r += 1


def fthreshold(a, J, p, E):
    """F-threshold estimate c^J(a) for a monomial ideal a."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if E < 1:
        raise DomainError("depth must be >= 1")
    if a.is_zero or a.is_unit or J.is_zero or J.is_unit:
        raise DomainError("both ideals must be proper and nonzero")
    if not all(in_radical(g, J) for g in a.gens):
        raise DomainError("a is not contained in the radical of J")
    nus = [nu_monomial(a, J, p ** e) for e in range(E + 1)]
    return _estimate(p, nus)
