"""Time every kernel on its numba and numpy paths.

    python benchmarks/bench_kernels.py [--repeat 5]

The first numba call compiles (or loads from cache); it is run once as a
warm-up and not timed.  Results of the two paths are compared as well.
"""
import argparse
import time

import numpy as np

from pairs import _accel, kernels
from pairs.algebra import SparsePolynomial
from pairs.arcspace import jet_equations


def trunc_mul_operands(p=101, terms=600, seed=0):
    rng = np.random.default_rng(seed)
    ea = np.unique(rng.integers(0, 40, size=(terms, 3)), axis=0).astype(np.int64)
    eb = np.unique(rng.integers(0, 40, size=(terms, 3)), axis=0).astype(np.int64)
    ca = rng.integers(1, p, size=len(ea)).astype(np.int64)
    cb = rng.integers(1, p, size=len(eb)).astype(np.int64)
    kill = np.array([[60, 0, 0], [0, 60, 0], [0, 0, 60], [30, 30, 30]], np.int64)
    return ea, ca, eb, cb, kill, p


def jet_operands(m=2, p=7):
    system = jet_equations(SparsePolynomial(2, {(2, 0): 1, (0, 3): 1}), m)
    rows, coefs, offsets = [], [], [0]
    for eq in system.equations:
        for exp, c in eq.mod(p).items():
            rows.append(exp)
            coefs.append(c)
        offsets.append(len(rows))
    N = system.nvars
    return (np.array(rows, np.int64), np.array(coefs, np.int64), np.array(offsets, np.int64),
            N, p, 0, p ** N)


CASES = {
    "trunc_mul": (kernels.trunc_mul, trunc_mul_operands),
    "min_dot_box": (kernels.min_dot_box, lambda: (
        np.array([[10, 6], [15, 0], [0, 15], [6, 10]], np.int64),
        np.ones(2, np.int64), np.array([400, 400], np.int64))),
    "contact_min": (kernels.contact_min, lambda: (
        np.array([[7, 0, 0], [0, 5, 0], [0, 0, 4], [2, 2, 1]], np.int64), 60)),
    "colength_count": (kernels.colength_count, lambda: (
        np.array([[40, 0, 0], [0, 50, 0], [0, 0, 60], [10, 10, 10]], np.int64),
        np.array([40, 50, 60], np.int64))),
    "count_zeros": (kernels.count_zeros, jet_operands),
}


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _accel.HAVE_NUMBA:
        print("numba not installed; only the numpy path can run")
    print(f"{'kernel':<16}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}  agree")
    for name, (kernel, make) in CASES.items():
        operands = make()
        t_np, out_np = best_of(kernel.numpy, operands, args.repeat)
        if _accel.HAVE_NUMBA:
            kernel.numba(*operands)  # warm-up / compile
            t_nb, out_nb = best_of(kernel.numba, operands, args.repeat)
            print(f"{name:<16}{t_nb:>12.5f}{t_np:>12.5f}{t_np / t_nb:>10.1f}  {same(out_nb, out_np)}")
        else:
            print(f"{name:<16}{'-':>12}{t_np:>12.5f}{'-':>10}  -")


if __name__ == "__main__":
    main()
