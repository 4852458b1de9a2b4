"""Monomial ideals, Newton polyhedra and Howald multiplier ideals.

For a monomial ideal ``a`` with generators a_1..a_m the Newton order of an
exponent vector u is

    ord(u) = max{ sum t_j : t >= 0, sum t_j a_j <= u }
           = min{ <u, w> : w >= 0, <w, a_j> >= 1 for all j }

and x^u lies in the multiplier ideal J(a^lam) iff ord(u + 1) > lam.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import floor, lcm

import numpy as np

from . import kernels
from .algebra import default_names, grlex_key
from .budget import check_budget
from .errors import DomainError, UnitIdealError
from .lp import fm_minimize, vertices


def minimalize(vectors):
    """Minimal elements under componentwise order, in graded-lex order."""
    kept = []
    for v in sorted(set(tuple(v) for v in vectors), key=grlex_key):
        if not any(all(g_i <= v_i for g_i, v_i in zip(g, v)) for g in kept):
            kept.append(v)
    return tuple(kept)


def dominates(u, g):
    return all(x >= y for x, y in zip(u, g))


class MonomialIdeal:
    """A monomial ideal in n variables, stored by its minimal generators.

    The unit ideal has the single generator (0,...,0); the zero ideal has
    none.
    """

    def __init__(self, n, gens):
        self.n = int(n)
        gens = [tuple(int(x) for x in g) for g in gens]
        for g in gens:
            if len(g) != self.n or min(g, default=0) < 0:
                raise DomainError(f"bad exponent vector {g} for n={self.n}")
        self.gens = minimalize(gens)

    @classmethod
    def parse(cls, text, n):
        from .parse import parse_monomial_list

        return cls(n, parse_monomial_list(text, n))

    @classmethod
    def unit(cls, n):
        return cls(n, [(0,) * n])

    @classmethod
    def zero(cls, n):
        return cls(n, [])

    @classmethod
    def maximal(cls, n):
        return cls(n, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    @property
    def is_unit(self):
        return self.gens == ((0,) * self.n,)

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_proper(self):
        return not self.is_unit

    @property
    def is_principal(self):
        return len(self.gens) == 1

    @property
    def is_squarefree(self):
        return all(x <= 1 for g in self.gens for x in g)

    def contains(self, u):
        return any(dominates(u, g) for g in self.gens)

    __contains__ = contains

    def issubset(self, other):
        return all(other.contains(g) for g in self.gens)

    __le__ = issubset

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and (self.n, self.gens) == (other.n, other.gens)

    def __hash__(self):
        return hash((self.n, self.gens))

    def __mul__(self, other):
        if self.n != other.n:
            raise DomainError("dimension mismatch")
        return MonomialIdeal(self.n, [tuple(x + y for x, y in zip(g, h))
                                      for g in self.gens for h in other.gens])

    def power(self, k):
        result = MonomialIdeal.unit(self.n)
        for _ in range(k):
            result = result * self
        return result

    def to_str(self):
        if self.is_zero:
            return "0"
        if self.is_unit:
            return "1"
        names = default_names(self.n)
        return ", ".join(
            "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(names, g) if e) for g in self.gens
        )

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MonomialIdeal({self.to_str()!r}, n={self.n})"

    # Newton polyhedron data, computed once per ideal -------------------------

    @cached_property
    def dual_rows(self):
        rows = [(g, 1) for g in self.gens]
        rows += [(tuple(int(i == j) for j in range(self.n)), 0) for i in range(self.n)]
        return rows

    @cached_property
    def dual_vertices(self):
        """Vertices of {w >= 0 : <w, a_j> >= 1}; each is the normal of a
        compact face of the Newton polyhedron."""
        self._require_proper_nonzero()
        return vertices(self.dual_rows, self.n)

    @cached_property
    def _scaled_vertices(self):
        verts = self.dual_vertices
        scale = 1
        for v in verts:
            for x in v:
                scale = lcm(scale, x.denominator)
        V = np.array([[int(x * scale) for x in v] for v in verts], dtype=np.int64)
        return V, scale

    def _require_proper_nonzero(self):
        if self.is_zero:
            raise DomainError("the zero ideal has an empty Newton polyhedron")
        if self.is_unit:
            raise UnitIdealError("the unit ideal has no finite Newton order")

    def orders_on_box(self, dims, shift):
        """ord(u + shift) for every u in the box prod(range(d)), C order, as
        Fractions.  Uses the dual vertices; no LP per point."""
        V, scale = self._scaled_vertices
        check_budget(int(np.prod(dims)) * len(V), "Newton-order box")
        raw = kernels.min_dot_box(V, np.array(shift, np.int64), np.array(dims, np.int64))
        return raw, scale


@lru_cache(maxsize=65536)
def _newton_order_cached(n, gens, u):
    rows = [(g, 1) for g in gens] + [(tuple(int(i == j) for j in range(n)), 0) for i in range(n)]
    return fm_minimize(u, rows)


def is_m_primary(a):
    """(True, c) with c_i the pure-power exponent on axis i, or (False, None)."""
    if a.is_unit:
        return True, (0,) * a.n
    c = []
    for i in range(a.n):
        powers = [g[i] for g in a.gens if all(x == 0 for j, x in enumerate(g) if j != i)]
        if not powers:
            return False, None
        c.append(min(powers))
    return True, tuple(c)


def newton_order(a, u):
    """max{lam : u in lam * P_a}, exactly, via Fourier-Motzkin on the dual LP."""
    a._require_proper_nonzero()
    u = tuple(int(x) for x in u)
    if len(u) != a.n or min(u, default=0) < 0:
        raise DomainError(f"bad exponent vector {u}")
    return _newton_order_cached(a.n, a.gens, u)


def lct(a):
    """Log canonical threshold of a monomial ideal (Howald)."""
    return newton_order(a, (1,) * a.n)


def lct_certificate(a):
    """An optimal weight vector w for lct(a) = min sum(w), chosen with the
    smallest common denominator, and that denominator."""
    c = lct(a)
    best = None
    for v in a.dual_vertices:
        if sum(v) == c:
            den = 1
            for x in v:
                den = lcm(den, x.denominator)
            if best is None or den < best[1]:
                best = (v, den)
    return best


def _check_lambda(lam):
    lam = Fraction(lam)
    if lam < 0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    return lam


def multiplier_ideal(a, lam):
    """J(a^lam) = (x^u : ord(u + 1) > lam), returned by minimal generators."""
    lam = _check_lambda(lam)
    if a.is_zero:
        return MonomialIdeal.zero(a.n)
    if a.is_unit:
        return MonomialIdeal.unit(a.n)
    verts = a.dual_vertices
    dims = []
    for i in range(a.n):
        positive = [v[i] for v in verts if v[i] > 0]
        # a minimal generator never has u_i > lam / min positive v_i
        dims.append(floor(lam / min(positive)) + 1 if positive else 1)
    raw, scale = a.orders_on_box(dims, (1,) * a.n)
    members = np.flatnonzero(raw * lam.denominator > lam.numerator * scale)
    coords = np.stack(np.unravel_index(members, tuple(dims)), axis=1)
    return MonomialIdeal(a.n, [tuple(int(x) for x in row) for row in coords])


def jumping_numbers(a, T):
    """Sorted jumping numbers of a in (0, T]."""
    T = Fraction(T)
    if T <= 0:
        raise DomainError("T must be positive")
    a._require_proper_nonzero()
    if a.is_principal:
        (g,) = a.gens
        found = set()
        for e in g:
            if e:
                found.update(Fraction(k, e) for k in range(1, floor(T * e) + 1))
        return sorted(found)
    ok, c = is_m_primary(a)
    if not ok:
        raise DomainError("jumping numbers need an m-primary or principal ideal")
    # ord(u + 1) >= (u_i + 1)/c_i, so only u_i + 1 <= T c_i can matter
    dims = [floor(T * ci) for ci in c]
    if min(dims) <= 0:
        return []
    raw, scale = a.orders_on_box(dims, (1,) * a.n)
    values = {Fraction(int(v), scale) for v in np.unique(raw)}
    return sorted(v for v in values if 0 < v <= T)


def jumping_number_witnesses(a, T):
    """Map each jumping number <= T to the exponent vectors u with
    ord(u + 1) equal to it (the monomials leaving the ideal there)."""
    ok, c = is_m_primary(a)
    if not ok:
        raise DomainError("witnesses need an m-primary ideal")
    T = Fraction(T)
    dims = [floor(T * ci) for ci in c]
    out = {}
    if min(dims, default=0) <= 0:
        return out
    raw, scale = a.orders_on_box(dims, (1,) * a.n)
    for idx in np.flatnonzero(raw * T.denominator <= T.numerator * scale):
        u = tuple(int(x) for x in np.unravel_index(idx, tuple(dims)))
        out.setdefault(Fraction(int(raw[idx]), scale), []).append(u)
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class SkodaCheck:
    equal: bool
    in_theorem_range: bool
    lhs: MonomialIdeal
    rhs: MonomialIdeal

    def __bool__(self):
        return self.equal

    @property
    def label(self):
        return "within theorem range" if self.in_theorem_range else "outside theorem range"


def skoda_check(a, lam):
    """Compare J(a^lam) * a with J(a^(lam+1))."""
    lam = _check_lambda(lam)
    ok, _ = is_m_primary(a)
    if not ok and not a.is_principal:
        raise DomainError("skoda_check needs an m-primary or principal ideal")
    lhs = multiplier_ideal(a, lam) * a
    rhs = multiplier_ideal(a, lam + 1)
    return SkodaCheck(lhs == rhs, lam >= a.n - 1, lhs, rhs)


def integral_closure_is_power_of_m(a):
    """k such that the integral closure of a equals m^k, else None.

    The closure is m^k exactly when every generator has degree >= k (with k
    the least generator degree) and every degree-k monomial lies in the
    Newton polyhedron.
    """
    ok, _ = is_m_primary(a)
    if not ok:
        raise DomainError("integral closure test needs an m-primary ideal")
    if a.is_unit:
        return 0
    k = min(sum(g) for g in a.gens)
    for u in product(range(k + 1), repeat=a.n):
        if sum(u) == k and newton_order(a, u) < 1:
            return None
    return k
