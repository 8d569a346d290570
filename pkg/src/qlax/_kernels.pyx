# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact kernels; same algorithms as ``qlax._kernels_py``."""
from fractions import Fraction


cdef inline tuple _nd(object x):
    if type(x) is int:
        return x, 1
    return x.numerator, x.denominator


def esym(xs):
    cdef list coeffs = [1]
    cdef list nxt
    cdef Py_ssize_t k, n
    cdef object den = 1, a, b, c
    for x in xs:
        a, b = _nd(x)
        n = len(coeffs)
        nxt = [0] * (n + 1)
        for k in range(n):
            c = coeffs[k]
            nxt[k] = nxt[k] + c * b
            nxt[k + 1] = c * a
        coeffs = nxt
        den = den * b
    return [Fraction(c, den) for c in coeffs]


def prod_sub(z, xs):
    cdef object a, b, c, d
    cdef object num = 1, den = 1
    a, b = _nd(z)
    for x in xs:
        c, d = _nd(x)
        num = num * (a * d - c * b)
        den = den * (b * d)
    return Fraction(num, den)


def horner(coeffs, x):
    cdef Py_ssize_t i, n = len(coeffs)
    cdef object a, b, p, r, num, den
    if n == 0:
        return Fraction(0)
    a, b = _nd(x)
    num, den = _nd(coeffs[n - 1])
    for i in range(n - 2, -1, -1):
        p, r = _nd(coeffs[i])
        num = num * a * r + p * den * b
        den = den * b * r
    return Fraction(num, den)


def dot(xs, ys):
    cdef object num = 0, den = 1, p, r, s, t
    for x, y in zip(xs, ys):
        p, r = _nd(x)
        s, t = _nd(y)
        p = p * s
        if p == 0:
            continue
        r = r * t
        num = num * r + p * den
        den = den * r
    return Fraction(num, den)


def bideg_eval(grid, f, g):
    return horner([horner(row, g) for row in grid], f)


def lagrange_matrix(nodes):
    cdef Py_ssize_t n = len(nodes), a, i, k
    cdef list out = [], row, others, e
    for a in range(n):
        others = [nodes[k] for k in range(n) if k != a]
        e = esym(others)
        scale = prod_sub(nodes[a], others)
        row = []
        for i in range(n):
            c = e[n - 1 - i]
            row.append(c / scale if (n - 1 - i) % 2 == 0 else -c / scale)
        out.append(row)
    return out


def bideg_interp(f_nodes, g_nodes, values):
    cdef Py_ssize_t nf = len(f_nodes), ng = len(g_nodes), a, b, i, j
    cdef list lf = lagrange_matrix(f_nodes)
    cdef list lg = lagrange_matrix(g_nodes)
    cdef list tmp = [[dot([values[a][b] for b in range(ng)], [lg[b][j] for b in range(ng)])
                      for j in range(ng)] for a in range(nf)]
    return [[dot([lf[a][i] for a in range(nf)], [tmp[a][j] for a in range(nf)])
             for j in range(ng)] for i in range(nf)]
