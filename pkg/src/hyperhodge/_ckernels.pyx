# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Arithmetic kernels, compiled backend.

Mirror of ``_kernels_py`` (same functions, same semantics).  Values are
Python ints (arbitrary precision); Cython removes the interpreter dispatch
around the convolution and product loops.
"""

from math import gcd, lcm


def normalize(num, den):
    """Reduce ``num/den`` to canonical form (positive, coprime denominator)."""
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if num == 0:
        return (0, 1)
    if den < 0:
        num = -num
        den = -den
    g = gcd(num, den)
    if g > 1:
        return (num // g, den // g)
    return (num, den)


def poly_mul(a, b):
    """Exact convolution of two dense rational-pair polynomials."""
    cdef Py_ssize_t la, lb, i, j
    if not a or not b:
        return []
    den_a = 1
    for _, d in a:
        den_a = lcm(den_a, d)
    den_b = 1
    for _, d in b:
        den_b = lcm(den_b, d)
    cdef list ints_a = [n * (den_a // d) for n, d in a]
    cdef list ints_b = [n * (den_b // d) for n, d in b]
    la = len(ints_a)
    lb = len(ints_b)
    cdef list conv = [0] * (la + lb - 1)
    for i in range(la):
        x = ints_a[i]
        if not x:
            continue
        for j in range(lb):
            y = ints_b[j]
            if y:
                conv[i + j] = conv[i + j] + x * y
    den = den_a * den_b
    if den == 1:
        return [(c, 1) for c in conv]
    return [normalize(c, den) for c in conv]


def linear_product(constants, max_degree=None):
    """Coefficients of ``prod_j (1 + c_j * t)`` as rational pairs."""
    cdef Py_ssize_t n, cap, size, i
    n = len(constants)
    cap = n if max_degree is None else min(max_degree, n)
    if cap < 0:
        return []
    den = 1
    for _, d in constants:
        den = lcm(den, d)
    cdef list scaled = [c * (den // d) for c, d in constants]
    cdef list coeffs = [1]
    cdef list nxt
    for c in scaled:
        size = min(len(coeffs) + 1, cap + 1)
        nxt = [0] * size
        for i in range(len(coeffs)):
            x = coeffs[i]
            if not x:
                continue
            if i < size:
                nxt[i] = nxt[i] + den * x
            if i + 1 < size:
                nxt[i + 1] = nxt[i + 1] + c * x
        coeffs = nxt
    if den == 1:
        return [(c, 1) for c in coeffs]
    whole = den ** n
    return [normalize(c, whole) for c in coeffs]
