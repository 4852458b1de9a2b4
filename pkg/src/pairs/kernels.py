"""Integer kernels behind the exact invariants.

Every kernel exists twice: a numba ``@njit`` loop nest and a vectorized numpy
twin.  ``_accel.BACKEND`` picks one at call time; both must agree bit for
bit (the test-suite runs them side by side).  All arithmetic is int64, so the
callers are responsible for keeping encodings and residues in range.
"""
import numpy as np

from ._accel import dispatch, njit

_NUMPY_CHUNK = 1 << 18


# ---------------------------------------------------------------------------
# truncated sparse multiplication over F_p


@njit
def _trunc_mul_numba(ea, ca, eb, cb, kill, p):
    ka, n = ea.shape
    kb = eb.shape[0]
    nk = kill.shape[0]
    if ka == 0 or kb == 0:
        return np.zeros((0, n), np.int64), np.zeros(0, np.int64)
    base = np.empty(n, np.int64)
    for t in range(n):
        base[t] = ea[:, t].max() + eb[:, t].max() + 1
    keys = np.empty(ka * kb, np.int64)
    vals = np.empty(ka * kb, np.int64)
    cnt = 0
    e = np.empty(n, np.int64)
    for i in range(ka):
        for j in range(kb):
            for t in range(n):
                e[t] = ea[i, t] + eb[j, t]
            killed = False
            for g in range(nk):
                dom = True
                for t in range(n):
                    if e[t] < kill[g, t]:
                        dom = False
                        break
                if dom:
                    killed = True
                    break
            if killed:
                continue
            key = 0
            for t in range(n):
                key = key * base[t] + e[t]
            keys[cnt] = key
            vals[cnt] = (ca[i] * cb[j]) % p
            cnt += 1
    keys = keys[:cnt]
    vals = vals[:cnt]
    order = np.argsort(keys, kind="mergesort")
    out_k = np.empty(cnt, np.int64)
    out_v = np.empty(cnt, np.int64)
    m = 0
    i = 0
    while i < cnt:
        k = keys[order[i]]
        s = 0
        while i < cnt and keys[order[i]] == k:
            s = (s + vals[order[i]]) % p
            i += 1
        if s != 0:
            out_k[m] = k
            out_v[m] = s
            m += 1
    exps = np.empty((m, n), np.int64)
    for r in range(m):
        k = out_k[r]
        for t in range(n - 1, -1, -1):
            exps[r, t] = k % base[t]
            k //= base[t]
    return exps, out_v[:m].copy()


def _trunc_mul_numpy(ea, ca, eb, cb, kill, p):
    """Product of two sparse F_p polynomials with every monomial that
    dominates a row of ``kill`` deleted.  Returns (exponents, coefficients)
    sorted lexicographically by exponent."""
    n = ea.shape[1]
    if ea.shape[0] == 0 or eb.shape[0] == 0:
        return np.zeros((0, n), np.int64), np.zeros(0, np.int64)
    base = ea.max(axis=0) + eb.max(axis=0) + 1
    exps = (ea[:, None, :] + eb[None, :, :]).reshape(-1, n)
    vals = ((ca[:, None] * cb[None, :]) % p).ravel()
    if kill.shape[0]:
        dead = np.zeros(exps.shape[0], dtype=bool)
        for row in kill:
            dead |= (exps >= row).all(axis=1)
        exps = exps[~dead]
        vals = vals[~dead]
    if exps.shape[0] == 0:
        return np.zeros((0, n), np.int64), np.zeros(0, np.int64)
    strides = np.ones(n, np.int64)
    for t in range(n - 2, -1, -1):
        strides[t] = strides[t + 1] * base[t + 1]
    keys = exps @ strides
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    sums = np.add.reduceat(vals[order], starts) % p
    keep = sums != 0
    return exps[order][starts][keep].copy(), sums[keep].astype(np.int64)


trunc_mul = dispatch(_trunc_mul_numba, _trunc_mul_numpy)


# ---------------------------------------------------------------------------
# min over a finite vertex set of <u + shift, v>, for u ranging over a box


@njit
def _min_dot_box_numba(V, shift, dims):
    k, n = V.shape
    total = 1
    for t in range(n):
        total *= dims[t]
    out = np.empty(total, np.int64)
    u = np.zeros(n, np.int64)
    for idx in range(total):
        best = np.iinfo(np.int64).max
        for r in range(k):
            s = 0
            for t in range(n):
                s += (u[t] + shift[t]) * V[r, t]
            if s < best:
                best = s
        out[idx] = best
        t = n - 1
        while t >= 0:
            u[t] += 1
            if u[t] < dims[t]:
                break
            u[t] = 0
            t -= 1
    return out


def _min_dot_box_numpy(V, shift, dims):
    """For every u in the box prod(range(d) for d in dims), in C order,
    return min over rows v of V of <u + shift, v>."""
    n = V.shape[1]
    total = int(np.prod(dims)) if n else 1
    out = np.empty(total, np.int64)
    for lo in range(0, total, _NUMPY_CHUNK):
        idx = np.arange(lo, min(total, lo + _NUMPY_CHUNK), dtype=np.int64)
        coords = np.stack(np.unravel_index(idx, tuple(dims)), axis=1) + shift
        out[lo:lo + idx.size] = (coords @ V.T).min(axis=1)
    return out


min_dot_box = dispatch(_min_dot_box_numba, _min_dot_box_numpy)


# ---------------------------------------------------------------------------
# integer program  min sum(w)  s.t.  <w, a_j> >= order for all rows a_j


@njit
def _contact_min_numba(A, order):
    m, n = A.shape
    big = np.iinfo(np.int64).max
    best = big
    witness = np.zeros(n, np.int64)
    w = np.zeros(n, np.int64)
    while True:
        partial = 0
        for t in range(n - 1):
            partial += w[t]
        last = 0
        ok = True
        for j in range(m):
            need = order
            for t in range(n - 1):
                need -= A[j, t] * w[t]
            if need > 0:
                a = A[j, n - 1]
                if a == 0:
                    ok = False
                    break
                c = (need + a - 1) // a
                if c > last:
                    last = c
        if ok and partial + last < best:
            best = partial + last
            for t in range(n - 1):
                witness[t] = w[t]
            witness[n - 1] = last
        t = n - 2
        while t >= 0:
            w[t] += 1
            if w[t] <= order:
                break
            w[t] = 0
            t -= 1
        if t < 0:
            break
    return best, witness


def _contact_min_numpy(A, order):
    """Minimum of sum(w) over w >= 0 integral with min_j <w, a_j> >= order.

    The first n-1 coordinates range over {0..order}; the last one is solved
    for.  Ties go to the lexicographically first prefix.
    """
    m, n = A.shape
    side = order + 1
    prefix_dims = (side,) * (n - 1)
    total = side ** (n - 1)
    best = np.iinfo(np.int64).max
    witness = np.zeros(n, np.int64)
    for lo in range(0, total, _NUMPY_CHUNK):
        idx = np.arange(lo, min(total, lo + _NUMPY_CHUNK), dtype=np.int64)
        if n > 1:
            P = np.stack(np.unravel_index(idx, prefix_dims), axis=1).astype(np.int64)
        else:
            P = np.zeros((idx.size, 0), np.int64)
        need = order - P @ A[:, : n - 1].T
        last_col = A[:, n - 1]
        pos = last_col > 0
        req = np.zeros_like(need)
        if pos.any():
            req[:, pos] = -((-need[:, pos]) // last_col[pos])
        feasible = ~((need[:, ~pos] > 0).any(axis=1))
        last = np.maximum(req.max(axis=1), 0) if m else np.zeros(idx.size, np.int64)
        cost = P.sum(axis=1) + last
        cost = np.where(feasible, cost, np.iinfo(np.int64).max)
        r = int(np.argmin(cost))
        if cost[r] < best:
            best = int(cost[r])
            witness = np.r_[P[r], last[r]].astype(np.int64)
    return best, witness


contact_min = dispatch(_contact_min_numba, _contact_min_numpy)


# ---------------------------------------------------------------------------
# number of standard monomials of a monomial ideal inside a box


@njit
def _colength_numba(gens, bounds):
    n = bounds.shape[0]
    size = 1
    for t in range(n - 1):
        size *= bounds[t]
    strides = np.ones(max(n - 1, 1), np.int64)
    for t in range(n - 3, -1, -1):
        strides[t] = strides[t + 1] * bounds[t + 1]
    H = np.full(size, bounds[n - 1], np.int64)
    for g in range(gens.shape[0]):
        inside = True
        idx = 0
        for t in range(n - 1):
            if gens[g, t] >= bounds[t]:
                inside = False
                break
            idx += gens[g, t] * strides[t]
        if inside and gens[g, n - 1] < H[idx]:
            H[idx] = gens[g, n - 1]
    for t in range(n - 1):
        for idx in range(size):
            if (idx // strides[t]) % bounds[t] > 0:
                prev = H[idx - strides[t]]
                if prev < H[idx]:
                    H[idx] = prev
    total = 0
    for idx in range(size):
        total += H[idx]
    return total


def _colength_numpy(gens, bounds):
    """Count exponent vectors u with u_i < bounds_i not dominating any row
    of ``gens``.  The ideal must contain x_i^bounds_i for each i."""
    n = bounds.shape[0]
    shape = tuple(int(b) for b in bounds[: n - 1])
    H = np.full(shape if n > 1 else (1,), bounds[n - 1], np.int64)
    inside = (gens[:, : n - 1] < bounds[: n - 1]).all(axis=1)
    g = gens[inside]
    if n > 1:
        np.minimum.at(H, tuple(g[:, t] for t in range(n - 1)), g[:, n - 1])
        for t in range(n - 1):
            np.minimum.accumulate(H, axis=t, out=H)
    elif g.size:
        H[0] = min(H[0], g[:, 0].min())
    return int(H.sum())


colength_count = dispatch(_colength_numba, _colength_numpy)


# ---------------------------------------------------------------------------
# common zeros of a polynomial system over F_p, by exhaustive enumeration


@njit
def _count_zeros_numba(exps, coefs, offsets, nvars, p, start, stop):
    maxdeg = 0
    if exps.size:
        maxdeg = exps.max()
    pw = np.ones((p, maxdeg + 1), np.int64)
    for v in range(p):
        for d in range(1, maxdeg + 1):
            pw[v, d] = (pw[v, d - 1] * v) % p
    digits = np.zeros(nvars, np.int64)
    rest = start
    for t in range(nvars - 1, -1, -1):
        digits[t] = rest % p
        rest //= p
    neq = offsets.shape[0] - 1
    count = 0
    for _ in range(start, stop):
        ok = True
        for q in range(neq):
            s = 0
            for r in range(offsets[q], offsets[q + 1]):
                c = coefs[r]
                for t in range(nvars):
                    e = exps[r, t]
                    if e:
                        c = (c * pw[digits[t], e]) % p
                s = (s + c) % p
            if s != 0:
                ok = False
                break
        if ok:
            count += 1
        t = nvars - 1
        while t >= 0:
            digits[t] += 1
            if digits[t] < p:
                break
            digits[t] = 0
            t -= 1
    return count


def _count_zeros_numpy(exps, coefs, offsets, nvars, p, start, stop):
    """Number of points of F_p^nvars with index in [start, stop) (base-p,
    last coordinate least significant) where every equation vanishes.
    Equation q owns term rows offsets[q]:offsets[q+1]."""
    maxdeg = int(exps.max()) if exps.size else 0
    pw = np.ones((p, maxdeg + 1), np.int64)
    for d in range(1, maxdeg + 1):
        pw[:, d] = (pw[:, d - 1] * np.arange(p)) % p
    count = 0
    for lo in range(start, stop, _NUMPY_CHUNK):
        idx = np.arange(lo, min(stop, lo + _NUMPY_CHUNK), dtype=np.int64)
        digits = np.empty((idx.size, nvars), np.int64)
        rest = idx.copy()
        for t in range(nvars - 1, -1, -1):
            digits[:, t] = rest % p
            rest //= p
        alive = np.ones(idx.size, dtype=bool)
        for q in range(offsets.size - 1):
            val = np.zeros(idx.size, np.int64)
            for r in range(offsets[q], offsets[q + 1]):
                term = np.full(idx.size, coefs[r], np.int64)
                for t in np.flatnonzero(exps[r]):
                    term = (term * pw[digits[:, t], exps[r, t]]) % p
                val = (val + term) % p
            alive &= val == 0
        count += int(alive.sum())
    return count


count_zeros = dispatch(_count_zeros_numba, _count_zeros_numpy)
