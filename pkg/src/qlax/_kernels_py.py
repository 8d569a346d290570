"""Pure-Python exact kernels.

Every kernel works on integer numerator/denominator pairs and reduces once
at the end, instead of paying a gcd per ``Fraction`` operation.  The Cython
module ``qlax._kernels`` compiles the same algorithms.
"""
from fractions import Fraction


def _nd(x):
    if isinstance(x, int):
        return x, 1
    return x.numerator, x.denominator


def esym(xs):
    """Elementary symmetric functions e_0..e_n of ``xs``."""
    # prod_i (b_i + a_i T) = sum_k E_k T^k, and e_k = E_k / prod_i b_i
    coeffs = [1]
    den = 1
    for x in xs:
        a, b = _nd(x)
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * b
            nxt[k + 1] += c * a
        coeffs = nxt
        den *= b
    return [Fraction(c, den) for c in coeffs]


def prod_sub(z, xs):
    """prod_i (z - x_i)."""
    a, b = _nd(z)
    num = 1
    den = 1
    for x in xs:
        c, d = _nd(x)
        num *= a * d - c * b
        den *= b * d
    return Fraction(num, den)


def horner(coeffs, x):
    """sum_i coeffs[i] * x**i."""
    if not coeffs:
        return Fraction(0)
    a, b = _nd(x)
    num, den = _nd(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        p, r = _nd(c)
        num = num * a * r + p * den * b
        den = den * b * r
    return Fraction(num, den)


def dot(xs, ys):
    """sum_i xs[i] * ys[i]."""
    num = 0
    den = 1
    for x, y in zip(xs, ys):
        p, r = _nd(x)
        s, t = _nd(y)
        p *= s
        r *= t
        if p == 0:
            continue
        num = num * r + p * den
        den *= r
    return Fraction(num, den)


def bideg_eval(grid, f, g):
    """sum_ij grid[i][j] f**i g**j."""
    return horner([horner(row, g) for row in grid], f)


def lagrange_matrix(nodes):
    """Rows of the inverse Vandermonde matrix.

    ``out[a][i]`` is the coefficient of x**i in the Lagrange basis polynomial
    that is 1 at ``nodes[a]`` and 0 at the other nodes.
    """
    n = len(nodes)
    out = []
    for a in range(n):
        others = [nodes[k] for k in range(n) if k != a]
        # prod (x - o) has coefficients (-1)^(n-1-i) e_{n-1-i}(others)
        e = esym(others)
        scale = prod_sub(nodes[a], others)
        row = []
        for i in range(n):
            c = e[n - 1 - i]
            row.append(c / scale if (n - 1 - i) % 2 == 0 else -c / scale)
        out.append(row)
    return out


def bideg_interp(f_nodes, g_nodes, values):
    """Coefficient grid of the unique polynomial of bidegree
    (len(f_nodes)-1, len(g_nodes)-1) taking ``values[a][b]`` at
    ``(f_nodes[a], g_nodes[b])``."""
    lf = lagrange_matrix(f_nodes)
    lg = lagrange_matrix(g_nodes)
    nf, ng = len(f_nodes), len(g_nodes)
    # contract over g first, then over f
    tmp = [[dot([values[a][b] for b in range(ng)], [lg[b][j] for b in range(ng)])
            for j in range(ng)] for a in range(nf)]
    return [[dot([lf[a][i] for a in range(nf)], [tmp[a][j] for a in range(nf)])
             for j in range(ng)] for i in range(nf)]
