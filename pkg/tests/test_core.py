from fractions import Fraction

import pytest

from qlax.core import (F_BAR, G_BAR, PLAIN, ParamsE8, State, check_evolution,
                       check_identities, evolve, evolve_inverse, f_equation_sides,
                       g_equation_sides, orbit, pd_eval, phi, phi_at, pn_eval,
                       point_on_curve, step_f, step_g, sym_funcs, u_poly, u_poly_sym,
                       unstep_g, v_eval)
from qlax.exact import NonGeneric, Rng, sample_rational
from qlax.lax import sample_e8_draw

ONES = [Fraction(1)] * 8


def draws(seed, n):
    rng = Rng(seed)
    return [sample_e8_draw(rng) for _ in range(n)], rng


def solve(matrix, rhs):
    """Gauss-Jordan over Fractions; oracle for the expansion tests."""
    n = len(matrix)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        a[col] = [x / a[col][col] for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                a[r] = [x - a[r][col] * y for x, y in zip(a[r], a[col])]
    return [row[-1] for row in a]


def test_point_on_curve_examples():
    p = ParamsE8(1, 1, ONES)
    assert point_on_curve(Fraction(1), p) == State(2, 2)
    p6 = ParamsE8(6, 1, ONES)
    assert point_on_curve(Fraction(2), p6).f == 5 == point_on_curve(Fraction(3), p6).f
    with pytest.raises(NonGeneric):
        point_on_curve(Fraction(0), p)
    with pytest.raises(ValueError):
        point_on_curve(Fraction(1), p, "sideways")


def test_point_on_curve_shifts():
    (d,), _ = draws(1, 1)
    p = d[0]
    u = Fraction(5, 3)
    assert point_on_curve(u, p, F_BAR) == State(u + p.h1 / (p.q * u), u + p.h2 / u)
    assert point_on_curve(u, p, G_BAR) == State(u + p.h1 / (p.q * u), u + p.h2 * p.q / u)
    # the g_bar shift is the plain curve of the evolved parameters
    assert point_on_curve(u, p, G_BAR) == point_on_curve(u, p.evolved(), PLAIN)


def test_phi_examples():
    assert phi_at(Fraction(3), Fraction(1), Fraction(2), Fraction(2)) == 2
    assert phi_at(Fraction(4), Fraction(4), Fraction(9), Fraction(9)) == 0
    ds, rng = draws(2, 10)
    for p, _, _ in ds:
        assert phi(point_on_curve(sample_rational(rng), p), p) == 0


def test_sym_funcs_examples():
    assert sym_funcs(ONES) == [1, 8, 28, 56, 70, 56, 28, 8, 1]
    m = sym_funcs([Fraction(i) for i in range(1, 9)])
    assert m[1] == 36 and m[8] == 40320


def test_sym_funcs_against_linear_solve():
    rng = Rng(3)
    u = [sample_rational(rng) for _ in range(8)]
    zs = [Fraction(k) for k in range(9)]
    rows = [[z ** i for i in range(9)] for z in zs]
    vals = []
    for z in zs:
        v = Fraction(1)
        for x in u:
            v *= z - x
        vals.append(v)
    coeffs = solve(rows, vals)
    m = sym_funcs(u)
    assert coeffs == [(-1) ** (8 - i) * m[8 - i] for i in range(9)]


def test_params_invariants():
    ds, _ = draws(4, 10)
    for p, _, _ in ds:
        assert p.m[0] == 1
        assert p.m[8] == p.h1 ** 2 * p.h2 ** 2 / p.q
        assert p.q == p.h1 ** 2 * p.h2 ** 2 / p.m[8]
    with pytest.raises(ValueError):
        ParamsE8(1, 2, ONES[:7])
    with pytest.raises(NonGeneric):
        ParamsE8(0, 2, ONES)
    with pytest.raises(NonGeneric):
        ParamsE8(1, 1, ONES).guard()


def test_u_poly():
    p = ParamsE8(1, 1, ONES)
    assert u_poly(Fraction(0), p) == 1
    (d,), rng = draws(5, 1)
    p = d[0]
    assert u_poly(p.u[0], p) == 0
    for _ in range(10):
        z = sample_rational(rng)
        assert u_poly(z, p) == u_poly_sym(z, p.m)


def test_pn_example():
    m = sym_funcs(ONES)
    assert pn_eval(Fraction(1), Fraction(0), m) == 16


def test_pn_pd_identities():
    ds, rng = draws(6, 10)
    for p, _, z in ds:
        rep = check_identities(p, sample_rational(rng), z, sample_rational(rng), sample_rational(rng))
        assert rep.ok, rep.to_dict()


def p_by_definition(h, z, params):
    """P_n, P_d at x = z + h/z straight from their defining relations."""
    U = lambda w: u_poly(w, params)  # noqa: E731
    d = z - h / z
    return ((U(z) / z ** 3 - (z / h) ** 3 * U(h / z)) / d,
            (z ** 5 * U(h / z) - (h / z) ** 5 * U(z)) / d)


def test_v_eval_reassembly():
    ds, rng = draws(7, 5)
    for p, s, _ in ds:
        w = sample_rational(rng)
        g = w + p.h2 / w
        pn, pd = p_by_definition(p.h2, w, p)
        f0, f = sample_rational(rng), s.f
        h1, h2, q = p.h1, p.h2, p.q
        first = (f0 - g) * (f - g) - (h1 / q - h2) * (h1 - h2) / h2
        second = (f0 * q / h1 - g / h2) * (f / h1 - g / h2) - (q / h1 - 1 / h2) * (1 / h1 - 1 / h2) * h2
        assert v_eval(f0, f, g, p) == q * first * pd - h1 ** 2 * h2 ** 4 * second * pn


def test_v_is_affine_in_f0():
    (d,), rng = draws(8, 1)
    p, s, _ = d
    a, b, c = (sample_rational(rng) for _ in range(3))
    va, vb, vc = (v_eval(x, s.f, s.g, p) for x in (a, b, c))
    assert (va - vb) / (a - b) == (vc - vb) / (c - b)


def test_step_f_solves_both_forms():
    ds, _ = draws(9, 10)
    for p, s, _ in ds:
        fb = step_f(s.f, s.g, p)
        assert v_eval(fb, s.f, s.g, p) == 0
        lhs, rhs = f_equation_sides(fb, s.f, s.g, p)
        assert lhs == rhs
        gb = step_g(fb, s.g, p)
        lhs, rhs = g_equation_sides(gb, fb, s.g, p)
        assert lhs == rhs


def test_step_f_at_base_point_is_guarded():
    (d,), _ = draws(10, 1)
    p = d[0]
    u = p.u[3]
    with pytest.raises(NonGeneric):
        step_f(p.f_of(u), p.g_of(u), p)


def test_step_g_base_points():
    ds, rng = draws(11, 3)
    for p, _, _ in ds:
        for u in p.u:
            assert step_g(p.fbar_of(u), sample_rational(rng), p) == p.gbar_of(u)
        w = sample_rational(rng)
        assert unstep_g(p.fbar_of(w), p.gbar_of(w), p) == p.g_of(p.h1 / (p.q * w))


def test_evolve_updates_parameters():
    ds, _ = draws(12, 5)
    for p, s, _ in ds:
        p2, _ = evolve(p, s)
        assert (p2.h1, p2.h2, p2.u) == (p.h1 / p.q, p.h2 * p.q, p.u)
        assert p2.q == p.q
        assert check_evolution(p, s).ok


def test_round_trips():
    ds, _ = draws(13, 10)
    for p, s, _ in ds:
        assert evolve_inverse(*evolve(p, s)) == (p, s)
        assert evolve(*evolve_inverse(p, s)) == (p, s)


def test_orbit_ten_steps_and_back():
    # small heights: coordinate bit sizes grow quadratically with the step
    u = [Fraction(x) for x in (1, -1, 2, -2, 3, 5, Fraction(1, 2), Fraction(-1, 3))]
    p = ParamsE8(Fraction(2), Fraction(3), u)
    p.guard()
    s = State(Fraction(7), Fraction(-4, 3))
    fwd = list(orbit(p, s, 10))
    assert [k for k, _, _ in fwd] == list(range(11))
    _, pe, se = fwd[-1]
    back = list(orbit(pe, se, -10))
    assert back[-1][0] == -10
    assert back[-1][1:] == (p, s)
