"""The numba kernels and their numpy twins must agree exactly."""
import numpy as np
import pytest
from hypothesis import given, strategies as st

from pairs import _accel, kernels

pytestmark = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")


def both(kernel, *args):
    return kernel.numba(*args), kernel.numpy(*args)


@st.composite
def int_matrix(draw, rows, cols, lo=0, hi=6):
    r = draw(rows)
    return np.array([[draw(st.integers(lo, hi)) for _ in range(cols)] for _ in range(r)],
                    dtype=np.int64).reshape(r, cols)


@given(st.integers(1, 3), st.sampled_from([2, 3, 7, 13]), st.data())
def test_trunc_mul(n, p, data):
    ea = data.draw(int_matrix(st.integers(1, 6), n))
    eb = data.draw(int_matrix(st.integers(1, 6), n))
    ea, eb = np.unique(ea, axis=0), np.unique(eb, axis=0)
    ca = np.array([data.draw(st.integers(1, p - 1)) for _ in ea], dtype=np.int64)
    cb = np.array([data.draw(st.integers(1, p - 1)) for _ in eb], dtype=np.int64)
    kill = data.draw(int_matrix(st.integers(0, 3), n, 1, 8))
    (e1, c1), (e2, c2) = both(kernels.trunc_mul, ea, ca, eb, cb, kill, p)
    assert np.array_equal(e1, e2) and np.array_equal(c1, c2)


@given(st.integers(1, 3), st.data())
def test_min_dot_box(n, data):
    V = data.draw(int_matrix(st.integers(1, 5), n, 0, 30))
    shift = np.ones(n, dtype=np.int64)
    dims = np.array([data.draw(st.integers(1, 7)) for _ in range(n)], dtype=np.int64)
    a, b = both(kernels.min_dot_box, V, shift, dims)
    assert np.array_equal(a, b)


@given(st.integers(1, 3), st.integers(1, 9), st.data())
def test_contact_min(n, order, data):
    A = data.draw(int_matrix(st.integers(1, 4), n, 0, 5))
    for i in range(n):  # make the ideal m-primary so the minimum is finite
        A = np.vstack([A, np.eye(n, dtype=np.int64)[i] * data.draw(st.integers(1, 5))])
    (b1, w1), (b2, w2) = both(kernels.contact_min, A, order)
    assert b1 == b2 and np.array_equal(np.asarray(w1), np.asarray(w2))


@given(st.integers(1, 3), st.data())
def test_colength(n, data):
    c = np.array([data.draw(st.integers(1, 8)) for _ in range(n)], dtype=np.int64)
    G = np.vstack([np.diag(c), data.draw(int_matrix(st.integers(0, 4), n, 0, 8))])
    a, b = both(kernels.colength_count, G, c)
    assert int(a) == int(b)


def test_count_zeros_chunks_agree():
    # x0 + x1^2 - x2*x3 over F_5 in 4 variables
    exps = np.array([[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 1, 1]], dtype=np.int64)
    coefs = np.array([1, 1, 4], dtype=np.int64)
    offsets = np.array([0, 3], dtype=np.int64)
    total = 5 ** 4
    a = kernels.count_zeros.numba(exps, coefs, offsets, 4, 5, 0, total)
    b = sum(kernels.count_zeros.numpy(exps, coefs, offsets, 4, 5, s, min(total, s + 100))
            for s in range(0, total, 100))
    assert int(a) == int(b) == 5 ** 3


def test_backend_switch():
    before = _accel.get_backend()
    try:
        _accel.set_backend("numpy")
        assert _accel.get_backend() == "numpy"
        with pytest.raises(ValueError):
            _accel.set_backend("fortran")
    finally:
        _accel.set_backend(before)
