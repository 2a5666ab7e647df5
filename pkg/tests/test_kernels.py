"""Kernel backends: canonical form, truncation, and py/c parity."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperhodge import _kernels_py, kernels

try:
    from hyperhodge import _ckernels
except ImportError:
    _ckernels = None

pairs = st.tuples(st.integers(-200, 200), st.integers(1, 60))
pair_lists = st.lists(pairs, max_size=24)

needs_compiled = pytest.mark.skipif(_ckernels is None,
                                    reason="compiled kernels not built")


def canonical(pair_list):
    return [_kernels_py.normalize(n, d) for n, d in pair_list]


@given(st.integers(-10 ** 9, 10 ** 9), st.integers(-10 ** 6, 10 ** 6))
def test_normalize_canonical_form(num, den):
    if den == 0:
        with pytest.raises(ZeroDivisionError):
            _kernels_py.normalize(num, den)
        return
    n, d = _kernels_py.normalize(num, den)
    assert d > 0
    assert gcd(abs(n), d) == 1
    assert Fraction(n, d) == Fraction(num, den)
    if n == 0:
        assert d == 1


@given(pair_lists, pair_lists)
def test_poly_mul_matches_fraction_arithmetic(a, b):
    a, b = canonical(a), canonical(b)
    got = _kernels_py.poly_mul(a, b)
    fa = [Fraction(n, d) for n, d in a]
    fb = [Fraction(n, d) for n, d in b]
    if not fa or not fb:
        assert got == []
        return
    want = [Fraction(0)] * (len(fa) + len(fb) - 1)
    for i, x in enumerate(fa):
        for j, y in enumerate(fb):
            want[i + j] += x * y
    assert [Fraction(n, d) for n, d in got] == want


@given(pair_lists)
def test_linear_product_expands_factors(consts):
    consts = canonical(consts)
    got = _kernels_py.linear_product(consts)
    want = [Fraction(1)]
    for n, d in consts:
        c = Fraction(n, d)
        nxt = [Fraction(0)] * (len(want) + 1)
        for i, x in enumerate(want):
            nxt[i] += x
            nxt[i + 1] += c * x
        want = nxt
    assert [Fraction(n, d) for n, d in got] == want


@given(pair_lists, st.integers(0, 6))
def test_linear_product_truncation_is_prefix(consts, cap):
    consts = canonical(consts)
    full = _kernels_py.linear_product(consts)
    cut = _kernels_py.linear_product(consts, max_degree=cap)
    assert cut == full[:cap + 1]


def test_linear_product_empty_is_one():
    assert _kernels_py.linear_product([]) == [(1, 1)]


@needs_compiled
@given(pair_lists, pair_lists, st.integers(0, 8))
def test_backend_parity(a, b, cap):
    a, b = canonical(a), canonical(b)
    assert _ckernels.poly_mul(a, b) == _kernels_py.poly_mul(a, b)
    assert _ckernels.linear_product(a) == _kernels_py.linear_product(a)
    assert (_ckernels.linear_product(a, max_degree=cap)
            == _kernels_py.linear_product(a, max_degree=cap))


@needs_compiled
@given(st.integers(-10 ** 9, 10 ** 9), st.integers(-10 ** 6, 10 ** 6))
def test_backend_parity_normalize(num, den):
    if den == 0:
        with pytest.raises(ZeroDivisionError):
            _ckernels.normalize(num, den)
        return
    assert _ckernels.normalize(num, den) == _kernels_py.normalize(num, den)


def test_selected_backend_is_exposed():
    assert kernels.BACKEND in ("py", "c")
    assert kernels.load_backend("py") is _kernels_py


@needs_compiled
def test_use_backend_switches_and_restores():
    start = kernels.BACKEND
    other = "py" if start == "c" else "c"
    try:
        assert kernels.use_backend(other) == start
        assert kernels.BACKEND == other
        assert kernels.poly_mul([(1, 1)], [(1, 2)]) == [(1, 2)]
    finally:
        kernels.use_backend(start)
    assert kernels.BACKEND == start
