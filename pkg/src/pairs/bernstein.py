"""Bernstein-Sato functional equations b(s) f^s = P . f^(s+1), checked by
exact formal calculus, and mod-p root candidates of b_f from nu(p^e)."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .algebra import SparsePolynomial, is_prime
from .charp import nu_table
from .errors import DomainError, InputError
from .monomial import MonomialIdeal, is_m_primary, jumping_numbers


class UPoly:
    """Dense univariate polynomial over Q; coefficients low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def from_roots(cls, roots):
        out = cls.constant(1)
        for r in roots:
            out = out * cls((-Fraction(r), 1))
        return out

    @classmethod
    def from_sparse(cls, poly):
        if poly.nvars != 1:
            raise InputError("expected a univariate polynomial")
        deg = max((e[0] for e in poly.support()), default=-1)
        cs = [Fraction(0)] * (deg + 1)
        for (k,), c in poly.items():
            cs[k] = Fraction(c)
        return cls(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly.constant(other)
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, UPoly) else -Fraction(other))

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly.constant(other)
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = UPoly.constant(1)
        for _ in range(int(k)):
            out = out * self
        return out

    def __call__(self, s):
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * s + c
        return total

    def to_sparse(self, nvars, index):
        """Embed as a polynomial in ``nvars`` variables, s at ``index``."""
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                e = [0] * nvars
                e[index] = k
                terms[tuple(e)] = c
        return SparsePolynomial(nvars, terms)

    def to_str(self, var="s"):
        return SparsePolynomial(1, {(k,): c for k, c in enumerate(self.coeffs)}).to_str([var])

    def __repr__(self):
        return f"UPoly({self.to_str()!r})"


class WeylOperator:
    """Normal-ordered sum of c(s) * x^alpha * d^beta."""

    def __init__(self, n, terms):
        self.n = n
        merged = {}
        for coef, alpha, beta in terms:
            alpha, beta = tuple(alpha), tuple(beta)
            if len(alpha) != n or len(beta) != n:
                raise InputError("multi-index length does not match n")
            if not isinstance(coef, UPoly):
                coef = UPoly.constant(coef)
            merged[(alpha, beta)] = merged.get((alpha, beta), UPoly()) + coef
        self.terms = tuple(
            (c, a, b) for (a, b), c in sorted(merged.items()) if not c.is_zero()
        )

    @classmethod
    def parse(cls, text, n):
        from .parse import parse_operator

        return parse_operator(text, n)

    def perturbations(self):
        """Every operator obtained by adding 1 to one coefficient of one
        c(s) (including the slot just above its degree)."""
        for k, (c, a, b) in enumerate(self.terms):
            for j in range(len(c.coeffs) + 1):
                bumped = list(c.coeffs) + [Fraction(0)] * (j + 1 - len(c.coeffs))
                bumped[j] += 1
                terms = list(self.terms)
                terms[k] = (UPoly(bumped), a, b)
                yield WeylOperator(self.n, terms)

    def to_str(self):
        from .algebra import default_names

        names = default_names(self.n)
        pieces = []
        for c, a, b in self.terms:
            factors = [f"({c.to_str()})"]
            factors += [v if e == 1 else f"{v}^{e}" for v, e in zip(names, a) if e]
            factors += [f"d{v}" if e == 1 else f"d{v}^{e}" for v, e in zip(names, b) if e]
            pieces.append("*".join(factors))
        return " + ".join(pieces) if pieces else "0"

    def __eq__(self, other):
        return isinstance(other, WeylOperator) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.terms))

    def __repr__(self):
        return f"WeylOperator({self.to_str()!r})"


@dataclass
class FormalFPower:
    """sum_j q_j(x, s) * f^(s + 1 - j); q_j live in n + 1 variables, s last."""

    f: SparsePolynomial
    parts: dict = field(default_factory=dict)

    @classmethod
    def start(cls, f):
        """The state 1 * f^(s+1)."""
        return cls(f, {0: SparsePolynomial.one(f.nvars + 1)})

    @property
    def n(self):
        return self.f.nvars

    def lifted_f(self):
        return self.f.embed(self.n + 1, range(self.n))

    def clean(self):
        return FormalFPower(self.f, {j: q for j, q in self.parts.items() if not q.is_zero()})


def _s_poly(n, c0):
    """s + c0 as a polynomial in the n + 1 variables (x, s)."""
    return SparsePolynomial(n + 1, {(0,) * n + (1,): 1, (0,) * (n + 1): c0})


def _apply_partial(state, i, fl, dfl):
    out = {}
    n = state.n
    for j, q in state.parts.items():
        out[j] = out.get(j, SparsePolynomial.zero(n + 1)) + q.diff(i)
        out[j + 1] = out.get(j + 1, SparsePolynomial.zero(n + 1)) + q * _s_poly(n, 1 - j) * dfl[i]
    return FormalFPower(state.f, out).clean()


def apply_weyl(P, state):
    """P . state, with d_i acting on q f^(s+1-j) by the Leibniz rule and
    d_i f^(s+1-j) = (s+1-j) (d_i f) f^(s-j)."""
    if P.n != state.n:
        raise InputError("operator and polynomial have different variable counts")
    n = state.n
    fl = state.lifted_f()
    dfl = [fl.diff(i) for i in range(n)]
    total = {}
    for c, alpha, beta in P.terms:
        cur = state
        for i, times in enumerate(beta):
            for _ in range(times):
                cur = _apply_partial(cur, i, fl, dfl)
        mult = c.to_sparse(n + 1, n) * SparsePolynomial.monomial(alpha + (0,))
        for j, q in cur.parts.items():
            total[j] = total.get(j, SparsePolynomial.zero(n + 1)) + q * mult
    return FormalFPower(state.f, total).clean()


@dataclass(frozen=True)
class FunctionalEquationCheck:
    verified: bool
    residual: SparsePolynomial
    level: int  # both sides were multiplied through to f^(s + 1 - level)

    def __bool__(self):
        return self.verified


def verify_functional_equation(b, P, f):
    """Exact check of b(s) f^s = P . f^(s+1) as an identity in (x, s)."""
    if f.is_zero():
        raise DomainError("f must be nonzero")
    if b.is_zero():
        raise DomainError("b must be nonzero")
    if f.p is not None:
        raise InputError("functional equations are checked over Q")
    state = apply_weyl(P, FormalFPower.start(f))
    n = f.nvars
    fl = state.lifted_f()
    level = max([1] + list(state.parts))
    lhs = SparsePolynomial.zero(n + 1)
    for j, q in state.parts.items():
        lhs = lhs + q * fl ** (level - j)
    rhs = b.to_sparse(n + 1, n) * fl ** (level - 1)
    residual = rhs - lhs
    return FunctionalEquationCheck(residual.is_zero(), residual, level)


def specialize(P, m):
    """P with s replaced by the integer m: a list of (const, alpha, beta)."""
    return [(c(m), a, b) for c, a, b in P.terms]


def apply_specialized(P, m, g):
    """Apply P(m, x, d) to an honest polynomial g (x-before-d ordering)."""
    n = g.nvars
    total = SparsePolynomial.zero(n)
    for c, alpha, beta in specialize(P, m):
        h = g
        for i, times in enumerate(beta):
            for _ in range(times):
                h = h.diff(i)
        total = total + h * SparsePolynomial.monomial(alpha, c)
    return total


# ---------------------------------------------------------------------------
# mod-p root candidates


def candidate_grid(denom_bound, lo=Fraction(-2), hi=Fraction(0)):
    """Reduced fractions -a/b with 1 <= b <= denom_bound in [lo, hi)."""
    found = set()
    for b in range(1, denom_bound + 1):
        for num in range(floor(lo * b), floor(hi * b) + 1):
            r = Fraction(num, b)
            if lo <= r < hi:
                found.add(r)
    return sorted(found)


@dataclass
class RootCandidates:
    per_prime: dict  # p -> {candidate: sorted levels e supporting it}
    nus: dict  # p -> {e: nu(p^e)}
    aggregate: dict  # candidate -> {"primes": [...], "classes": [(d, c), ...]}
    warnings: list


def _supported(r, nu_value, p):
    a, b = -r.numerator, r.denominator
    return b % p != 0 and (b * nu_value + a) % p == 0


def root_candidates_modp(f, primes, E, denom_bound, rng=(Fraction(-2), Fraction(0)),
                         min_class_size=3):
    """Candidates r = -a/b with b nu(p^e) + a = 0 mod p for some level e.

    A candidate enters the aggregate when it is supported by every tested
    prime in some residue class mod d (1 <= d <= denom_bound) holding at
    least min(min_class_size, len(primes)) tested primes.
    """
    primes = sorted(set(int(p) for p in primes))
    if not primes:
        raise DomainError("empty prime list")
    for p in primes:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
    if f.p is not None:
        raise InputError("f must have rational coefficients")
    if f.is_constant():
        raise DomainError("f must be nonconstant")
    if f.constant_term():
        raise DomainError("f must vanish at the origin")
    for p in primes:
        for _, c in f.items():
            if c.denominator % p == 0:
                raise DomainError(f"{p} divides a coefficient denominator of f")
    lo, hi = Fraction(rng[0]), Fraction(rng[1])
    warnings = []
    if hi > 0:
        warnings.append("range reaches nonnegative values; roots of b_f are negative rationals")
    grid = candidate_grid(denom_bound, lo, hi)
    nus, per_prime = {}, {}
    for p in primes:
        table = nu_table(f, p, E)
        nus[p] = {e: table.entries[e] for e in range(1, E + 1)}
        support = {}
        for r in grid:
            levels = [e for e, v in nus[p].items() if _supported(r, v, p)]
            if levels:
                support[r] = levels
        per_prime[p] = support
    need = min(min_class_size, len(primes))
    aggregate = {}
    for r in grid:
        backers = [p for p in primes if r in per_prime[p]]
        if len(backers) < need:
            continue
        classes = []
        for d in range(1, denom_bound + 1):
            for c in range(d):
                members = [p for p in primes if p % d == c]
                if len(members) >= need and all(p in backers for p in members):
                    classes.append((d, c))
        if classes:
            aggregate[r] = {"primes": backers, "classes": classes}
    return RootCandidates(per_prime, nus, dict(sorted(aggregate.items())), warnings)


def term_ideal(f):
    return MonomialIdeal(f.nvars, f.support())


def bs_root_report(f, primes, E, denom_bound, rng=(Fraction(-2), Fraction(0)), b=None, P=None):
    """Root candidates filtered by r <= -(best F-pure threshold lower bound),
    with optional checks against a verified functional equation."""
    from .report import InvariantReport, fmt

    rc = root_candidates_modp(f, primes, E, denom_bound, rng)
    best_lower = max(
        Fraction(v[E], p ** E) for p, v in rc.nus.items()
    )
    kept = {r: info for r, info in rc.aggregate.items() if r <= -best_lower}
    results = {
        "candidates": [fmt(r) for r in kept],
        "largest_candidate": fmt(max(kept)) if kept else None,
        "fpt_lower_bound": fmt(best_lower),
        "nu": {str(p): {str(e): v for e, v in nv.items()} for p, nv in rc.nus.items()},
    }
    certs = [
        {"candidate": fmt(r), "supporting_primes": info["primes"],
         "classes": [f"p = {c} mod {d}" for d, c in info["classes"]]}
        for r, info in kept.items()
    ]
    notes = ["root multiplicities are not detected"] + rc.warnings
    dropped = [fmt(r) for r in rc.aggregate if r not in kept]
    if dropped:
        notes.append("dropped above -fpt bound: " + ", ".join(dropped))
    # jumping numbers of the term ideal in (0, 1] should reappear as -lambda
    ti = term_ideal(f)
    if ti.is_principal or is_m_primary(ti)[0]:
        jumps = jumping_numbers(ti, 1)
        results["term_ideal_jumps"] = [fmt(j) for j in jumps]
        results["jumps_among_candidates"] = all(-j in kept for j in jumps)
    if b is not None and P is not None:
        check = verify_functional_equation(b, P, f)
        results["functional_equation_verified"] = check.verified
        if check.verified:
            results["candidates_are_roots"] = all(b(r) == 0 for r in kept)
    return InvariantReport(
        command="bs-roots",
        inputs={"poly": f.to_str(), "n": f.nvars, "primes": primes_str(primes),
                "depth": E, "denom_bound": denom_bound,
                "range": [fmt(Fraction(rng[0])), fmt(Fraction(rng[1]))]},
        results=results,
        certificates=certs,
        notes=notes,
    )


def primes_str(primes):
    return [int(p) for p in sorted(set(primes))]
