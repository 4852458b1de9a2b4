"""Exact linear programming by Fourier-Motzkin elimination.

Small problems only (a handful of variables, a few dozen constraints).
A constraint is a pair ``(coeffs, rhs)`` meaning ``<coeffs, w> >= rhs``.
"""
from fractions import Fraction
from itertools import combinations
from math import gcd


def _normalize(row):
    """Scale a row to a canonical primitive integer form (positive scaling)."""
    coeffs, rhs = row
    vals = list(coeffs) + [rhs]
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return tuple(Fraction(0) for _ in coeffs), Fraction(0)
    return tuple(Fraction(v // g) for v in ints[:-1]), Fraction(ints[-1] // g)


def _prune(rows):
    """Drop duplicate rows, keeping the tightest rhs for equal coefficients."""
    best = {}
    for coeffs, rhs in rows:
        coeffs, rhs = _normalize((coeffs, rhs))
        if coeffs in best and best[coeffs] >= rhs:
            continue
        best[coeffs] = rhs
    return list(best.items())


def eliminate(rows, k):
    """Project the system onto all coordinates but ``k``."""
    pos, neg, rest = [], [], []
    for coeffs, rhs in rows:
        c = coeffs[k]
        (pos if c > 0 else neg if c < 0 else rest).append((coeffs, rhs))
    out = list(rest)
    for cp, rp in pos:
        for cn, rn in neg:
            a, b = -cn[k], cp[k]
            coeffs = tuple(a * x + b * y for x, y in zip(cp, cn))
            out.append((coeffs, a * rp + b * rn))
    return _prune(out)


def fm_minimize(objective, rows):
    """Minimize <objective, w> subject to ``rows``.

    Returns the optimum as a Fraction, ``None`` if infeasible, and raises
    ValueError when the objective is unbounded below.
    """
    n = len(objective)
    # slack variable z sits at index n:  z - <objective, w> >= 0
    system = [(tuple(Fraction(c) for c in coeffs) + (Fraction(0),), Fraction(rhs))
              for coeffs, rhs in rows]
    system.append((tuple(-Fraction(c) for c in objective) + (Fraction(1),), Fraction(0)))
    system = _prune(system)
    for k in range(n):
        system = eliminate(system, k)
    lower, upper = None, None
    for coeffs, rhs in system:
        cz = coeffs[n]
        if cz == 0:
            if rhs > 0:
                return None
        elif cz > 0:
            v = rhs / cz
            lower = v if lower is None or v > lower else lower
        else:
            v = rhs / cz
            upper = v if upper is None or v < upper else upper
    if upper is not None and lower is not None and lower > upper:
        return None
    if lower is None:
        raise ValueError("objective unbounded below")
    return lower


def solve_exact(matrix, rhs):
    """Solve a square rational system by Gauss-Jordan; None if singular."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def vertices(rows, n):
    """All vertices of the pointed polyhedron {w : rows} in R^n, by
    solving every n-subset of constraints at equality."""
    found = set()
    for subset in combinations(rows, n):
        sol = solve_exact([c for c, _ in subset], [r for _, r in subset])
        if sol is None:
            continue
        if all(sum(c * x for c, x in zip(coeffs, sol)) >= rhs for coeffs, rhs in rows):
            found.add(tuple(sol))
    return sorted(found)
