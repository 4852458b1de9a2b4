"""Jets, arcs and contact loci.

For a monomial ideal a, the jets of order m along which a vanishes to order
>= m + 1 form a subvariety of codimension

    min { sum(w) : w in Z^n_{>=0}, min_j <w, a_j> >= m + 1 }

(w records the orders of vanishing of the coordinates along the arc).
"""
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .algebra import SparsePolynomial
from .budget import check_budget, get_budget
from .errors import DomainError


def _contact(a, order):
    if order < 1:
        raise DomainError("contact order must be >= 1")
    if a.is_zero or a.is_unit:
        raise DomainError("contact loci need a proper nonzero ideal")
    check_budget((order + 1) ** (a.n - 1) * len(a.gens), "contact-locus enumeration")
    A = np.array(a.gens, dtype=np.int64)
    best, w = kernels.contact_min(A, int(order))
    return int(best), tuple(int(x) for x in w)


def contact_codim(a, order):
    """Codimension of the jets of order ``order - 1`` along which a vanishes
    to order >= ``order``."""
    return _contact(a, order)[0]


def contact_witness(a, order):
    """(codimension, minimizing order vector w)."""
    return _contact(a, order)


@dataclass(frozen=True)
class ArcLimit:
    value: Fraction
    m_star: int
    codims: tuple  # codim(Y_m, X_m) for m = 0..M

    def __iter__(self):
        return iter((self.value, self.m_star))


def lct_via_arcs(a, M):
    """min over 0 <= m <= M of codim(Y_m, X_m) / (m + 1), with the first
    minimizing m."""
    if M < 0:
        raise DomainError("M must be >= 0")
    codims = tuple(contact_codim(a, m + 1) for m in range(M + 1))
    best, m_star = None, None
    for m, c in enumerate(codims):
        ratio = Fraction(c, m + 1)
        if best is None or ratio < best:
            best, m_star = ratio, m
    return ArcLimit(best, m_star, codims)


def jet_variable_names(n, m):
    return [f"x{i + 1}_{j}" for i in range(n) for j in range(m + 1)]


@dataclass(frozen=True)
class JetSystem:
    f: SparsePolynomial
    m: int
    equations: tuple

    @property
    def nvars(self):
        return self.f.nvars * (self.m + 1)

    def names(self):
        return jet_variable_names(self.f.nvars, self.m)

    def to_strings(self):
        names = self.names()
        return [eq.to_str(names) for eq in self.equations]


def _series_mul(a, b, m):
    out = [None] * (m + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b[: m + 1 - i]):
            term = x * y
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    return out


def jet_equations(f, m):
    """Coefficients of t^0..t^m in f(sum_j x_{i,j} t^j); jet variable (i, j)
    sits at index i*(m+1) + j."""
    if f.is_zero():
        raise DomainError("f must be nonzero")
    if m < 0:
        raise DomainError("jet level must be >= 0")
    n = f.nvars
    N = n * (m + 1)
    zero = SparsePolynomial.zero(N, f.p)
    arcs = [
        [SparsePolynomial.variable(i * (m + 1) + j, N, f.p) for j in range(m + 1)]
        for i in range(n)
    ]
    powers = {}

    def power(i, k):
        if (i, k) not in powers:
            if k == 0:
                powers[(i, k)] = [SparsePolynomial.one(N, f.p)] + [zero] * m
            else:
                powers[(i, k)] = _series_mul(power(i, k - 1), arcs[i], m)
        return powers[(i, k)]

    total = [zero] * (m + 1)
    for exp, c in f.items():
        series = [SparsePolynomial.one(N, f.p)] + [zero] * m
        for i, k in enumerate(exp):
            if k:
                series = _series_mul(series, power(i, k), m)
        total = [t + s.scale(c) for t, s in zip(total, series)]
    return JetSystem(f, m, tuple(total))


@dataclass(frozen=True)
class JetCount:
    count: int
    p: int
    nvars: int
    dimension_estimate: float  # log_p(count); a heuristic, never exact data

    heuristic = True


def count_jet_points(f, m, p, budget=None, chunk=1 << 22):
    """Number of F_p-points of the jet scheme Y_m, by exhaustive search."""
    system = jet_equations(f, m)
    N = system.nvars
    limit = get_budget() if budget is None else budget
    check_budget(p ** N, "jet point count", limit)
    eqs = [eq if eq.p is not None else eq.mod(p) for eq in system.equations]
    eqs = [eq for eq in eqs if not eq.is_zero()]
    rows, coefs, offsets = [], [], [0]
    for eq in eqs:
        for exp, c in eq.items():
            rows.append(exp)
            coefs.append(c)
        offsets.append(len(rows))
    exps = np.array(rows, dtype=np.int64).reshape(-1, N)
    coefs = np.array(coefs, dtype=np.int64)
    offsets = np.array(offsets, dtype=np.int64)
    total = p ** N
    count = 0
    # disjoint index ranges, summed; each range is independent
    for start in range(0, total, chunk):
        count += int(kernels.count_zeros(exps, coefs, offsets, N, p, start, min(total, start + chunk)))
    dim = math.log(count, p) if count else float("-inf")
    return JetCount(count, p, N, dim)
