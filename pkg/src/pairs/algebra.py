"""Exact sparse multivariate polynomials over Q and prime fields F_p."""
from fractions import Fraction
from functools import lru_cache
from math import prod

import numpy as np

from . import kernels
from .errors import DomainError, InputError

QQ = None  # field tag for the rationals; a prime int tags F_p


@lru_cache(maxsize=None)
def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Context object for F_p; validates primality once."""

    __slots__ = ("p",)

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def reduce(self, c):
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise DomainError(f"coefficient {c} has denominator divisible by {self.p}")
        return c.numerator * pow(c.denominator, -1, self.p) % self.p


def field_name(p):
    return "QQ" if p is None else f"F_{p}"


def default_names(n):
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def grlex_key(exp):
    """Ascending total degree, then x before y within a degree."""
    return (sum(exp), tuple(-e for e in exp))


class SparsePolynomial:
    """Immutable polynomial: a map exponent-tuple -> nonzero coefficient.

    ``p is None`` means coefficients are Fractions; otherwise they are ints
    in range(p).
    """

    __slots__ = ("nvars", "p", "_terms", "_hash")

    def __init__(self, nvars, terms=None, p=None):
        if p is not None and not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.nvars = int(nvars)
        self.p = p
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.nvars or any(e < 0 for e in exp):
                raise InputError(f"bad exponent vector {exp} for {self.nvars} variables")
            c = self._coerce(c)
            if c:
                clean[exp] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms, p):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.p = p
        obj._terms = terms
        obj._hash = None
        return obj

    def _coerce(self, c):
        if self.p is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            return PrimeField(self.p).reduce(c)
        return int(c) % self.p

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, nvars, p=None):
        return cls._raw(nvars, {}, p)

    @classmethod
    def constant(cls, c, nvars, p=None):
        return cls(nvars, {(0,) * nvars: c}, p)

    @classmethod
    def one(cls, nvars, p=None):
        return cls.constant(1, nvars, p)

    @classmethod
    def monomial(cls, exp, c=1, p=None):
        return cls(len(exp), {tuple(exp): c}, p)

    @classmethod
    def variable(cls, i, nvars, p=None):
        exp = [0] * nvars
        exp[i] = 1
        return cls.monomial(exp, 1, p)

    # basic queries ------------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in canonical (graded lexicographic) order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        zero = Fraction(0) if self.p is None else 0
        return self._terms.get((0,) * self.nvars, zero)

    def coefficient(self, exp):
        zero = Fraction(0) if self.p is None else 0
        return self._terms.get(tuple(exp), zero)

    def degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def support(self):
        return sorted(self._terms, key=grlex_key)

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return (self.nvars, self.p, self._terms) == (other.nvars, other.p, other._terms)
        if isinstance(other, (int, Fraction)):
            return self == SparsePolynomial.constant(other, self.nvars, self.p)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.p, frozenset(self._terms.items())))
        return self._hash

    # arithmetic -----------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise InputError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        if self.p != other.p:
            raise InputError(f"field mismatch: {field_name(self.p)} vs {field_name(other.p)}")

    def _lift(self, other):
        if isinstance(other, SparsePolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePolynomial.constant(other, self.nvars, self.p)
        return None

    def _norm(self, c):
        return c if self.p is None else c % self.p

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = self._norm(out.get(exp, 0) + c)
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return SparsePolynomial._raw(self.nvars, out, self.p)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial._raw(
            self.nvars, {e: self._norm(-c) for e, c in self._terms.items()}, self.p
        )

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self._coerce(c)
        if not c:
            return SparsePolynomial.zero(self.nvars, self.p)
        return SparsePolynomial._raw(
            self.nvars, {e: self._norm(v * c) for e, v in self._terms.items()}, self.p
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        if self.p is None:
            out = {e: c for e, c in out.items() if c}
        else:
            out = {e: c % self.p for e, c in out.items() if c % self.p}
        return SparsePolynomial._raw(self.nvars, out, self.p)

    __rmul__ = __mul__

    def __pow__(self, r):
        r = int(r)
        if r < 0:
            raise InputError("negative exponent")
        result = SparsePolynomial.one(self.nvars, self.p)
        base = self
        while r:
            if r & 1:
                result = result * base
            r >>= 1
            if r:
                base = base * base
        return result

    def diff(self, i):
        """Formal partial derivative with respect to variable ``i``."""
        if not 0 <= i < self.nvars:
            raise InputError(f"variable index {i} out of range")
        out = {}
        for exp, c in self._terms.items():
            if exp[i]:
                d = self._norm(c * exp[i])
                if d:
                    e = list(exp)
                    e[i] -= 1
                    out[tuple(e)] = d
        return SparsePolynomial._raw(self.nvars, out, self.p)

    def evaluate(self, point):
        total = Fraction(0) if self.p is None else 0
        for exp, c in self._terms.items():
            total += c * prod(x ** e for x, e in zip(point, exp))
        return self._norm(total)

    def mod(self, p):
        """Reduce a rational polynomial into F_p."""
        if self.p is not None:
            raise InputError("polynomial is already over a prime field")
        field = PrimeField(p)
        out = {}
        for exp, c in self._terms.items():
            r = field.reduce(c)
            if r:
                out[exp] = r
        return SparsePolynomial._raw(self.nvars, out, field.p)

    def embed(self, nvars, positions):
        """Re-index into ``nvars`` variables, variable i going to positions[i]."""
        out = {}
        for exp, c in self._terms.items():
            e = [0] * nvars
            for i, k in enumerate(positions):
                e[k] = exp[i]
            out[tuple(e)] = c
        return SparsePolynomial._raw(nvars, out, self.p)

    def truncate(self, cap):
        """Drop every monomial having some exponent >= cap."""
        return SparsePolynomial._raw(
            self.nvars, {e: c for e, c in self._terms.items() if max(e, default=0) < cap}, self.p
        )

    # conversion -----------------------------------------------------------

    def to_arrays(self):
        exps = np.array(list(self._terms), dtype=np.int64).reshape(-1, self.nvars)
        coefs = np.array(list(self._terms.values()), dtype=np.int64)
        return exps, coefs

    @classmethod
    def from_arrays(cls, exps, coefs, p):
        terms = {tuple(int(x) for x in e): int(c) for e, c in zip(exps, coefs)}
        return cls._raw(exps.shape[1], terms, p)

    def to_str(self, names=None):
        names = names or default_names(self.nvars)
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.items():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exp) if e
            )
            coef = Fraction(c)
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            if not mono:
                body = _fmt_coef(mag, bare=True)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt_coef(mag)}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"SparsePolynomial({self.to_str()!r}, nvars={self.nvars}, field={field_name(self.p)})"


def _fmt_coef(c, bare=False):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}" if bare else f"({c.numerator}/{c.denominator})"


# ---------------------------------------------------------------------------
# truncated powering over F_p


def _encoding_fits(ea, eb):
    span = 1
    for t in range(ea.shape[1]):
        span *= int(ea[:, t].max()) + int(eb[:, t].max()) + 1
    return span < 2**62


def reduce_mul(a, b, kill):
    """a*b with every monomial dominating a row of ``kill`` removed.

    Deleting a monomial that lies in the monomial ideal generated by
    ``kill`` commutes with further multiplication, so this computes
    products in F_p[x]/(kill).
    """
    a._check(b)
    if a.p is None:
        raise InputError("reduced multiplication needs a prime field")
    if not a or not b:
        return SparsePolynomial.zero(a.nvars, a.p)
    ea, ca = a.to_arrays()
    eb, cb = b.to_arrays()
    if _encoding_fits(ea, eb):
        exps, coefs = kernels.trunc_mul(ea, ca, eb, cb, kill, a.p)
        return SparsePolynomial.from_arrays(exps, coefs, a.p)
    # exponents too large for an int64 key: exact Python fallback
    prod_ = a * b
    rows = [tuple(int(x) for x in r) for r in kill]
    return SparsePolynomial._raw(
        a.nvars,
        {e: c for e, c in prod_._terms.items()
         if not any(all(x >= y for x, y in zip(e, r)) for r in rows)},
        a.p,
    )


def cap_matrix(nvars, cap):
    return np.eye(nvars, dtype=np.int64) * int(cap)


def poly_pow_truncated(f, r, cap):
    """f^r in F_p[x]/(x_1^cap, ..., x_n^cap) by square-and-multiply."""
    if f.p is None:
        raise InputError("truncated powering is defined over F_p")
    if cap < 1:
        raise InputError("cap must be positive")
    r = int(r)
    if r < 0:
        raise InputError("negative exponent")
    kill = cap_matrix(f.nvars, cap)
    result = SparsePolynomial.one(f.nvars, f.p).truncate(cap)
    base = f.truncate(cap)
    while r:
        if r & 1:
            result = reduce_mul(result, base, kill)
        r >>= 1
        if r:
            base = reduce_mul(base, base, kill)
    return result


def frobenius_twist(g, p):
    """g(x^p) - equal to g^p for g over F_p, since c^p = c there."""
    return SparsePolynomial._raw(
        g.nvars, {tuple(e * p for e in exp): c for exp, c in g._terms.items()}, g.p
    )
