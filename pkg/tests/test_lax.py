from fractions import Fraction

import pytest

from qlax import lax
from qlax.core import State, evolve
from qlax.exact import NonGeneric, Rng, eval_curve, sample_rational

from conftest import retry


def draw(seed):
    return retry(lambda r: _checked(lax.sample_e8_draw(r)), Rng(seed).child("draw"))


def _checked(d):
    p, s, z = d
    lax.l1_coeffs(z, s, p)
    evolve(p, s)
    return d


def test_l1_vanishing_coefficients_at_roots_of_u():
    p, s, _ = draw(1)
    u1 = p.u[0]
    assert lax.l1_coeffs(p.q * u1, s, p).c_minus == 0
    assert lax.l1_coeffs(p.h1 / u1, s, p).c_plus == 0


def test_l1_guards():
    p, s, z = draw(2)
    with pytest.raises(NonGeneric):
        lax.l1_coeffs(z, State(p.f_of(z), s.g), p)
    with pytest.raises(NonGeneric):
        lax.l1_coeffs(z, State(s.f, Fraction(0)), p)
    with pytest.raises(NonGeneric):
        lax.l1_coeffs(Fraction(0), s, p)


def test_l2_coefficients():
    p, s, z = draw(3)
    q, h1 = p.q, p.h1
    form = lax.l2_coeffs(z, s, p)
    assert form.a == s.g - p.g_of(z / q)
    assert form.b == -(s.g - p.g_of(h1 * q / z))
    assert form.c == (s.f - p.f_of(z / q)) * (h1 / z - z / q ** 2)
    printed = lax.l2_coeffs(z, s, p, printed=True)
    assert printed.c == (s.f - p.f_of(z)) * (h1 / z - z / q ** 2)
    assert lax.l2_coeffs(z, State(s.f, p.g_of(z / q)), p).a == 0
    assert lax.l2_coeffs(z, State(s.f, p.g_of(h1 * q / z)), p).b == 0
    assert lax.l2_coeffs(z, State(p.f_of(z / q), s.g), p).c == 0


def test_curve_matches_direct_assembly():
    p, s, z = draw(4)
    rng = Rng(40)
    y = (sample_rational(rng), sample_rational(rng), sample_rational(rng))
    curve = lax.curve_from_l1(z, p, y, rng)
    f, g = s.f, s.g
    direct = (lax.phi_at(f, g, p.h1, p.h2) * (f - p.f_of(z / p.q)) * (f - p.f_of(z))
              * lax.l1_coeffs(z, s, p).apply(*y))
    assert eval_curve(curve, f, g) == direct


def test_q_point_g():
    p, _, z = draw(5)
    assert lax.q_point_g(z, Fraction(3), Fraction(0), p) == p.g_of(z)
    assert lax.q_point_g(z, Fraction(0), Fraction(3), p) == p.g_of(p.h1 / z)
    g = lax.q_point_g(z, Fraction(2), Fraction(-5), p)
    assert (g - p.g_of(z)) / (g - p.g_of(p.h1 / z)) == Fraction(-5, 2)
    with pytest.raises(NonGeneric):
        lax.q_point_g(z, Fraction(1), Fraction(1), p)


def test_propagate_y_properties():
    p, s, z = draw(6)
    zero = lax.propagate_y(Fraction(0), Fraction(0), z, s, p, 3)
    assert zero.is_zero()
    a = lax.propagate_y(Fraction(2), Fraction(-1), z, s, p, 3)
    b = lax.propagate_y(Fraction(1, 3), Fraction(5), z, s, p, 3)
    c = lax.propagate_y(2 * Fraction(2) - 3 * Fraction(1, 3), 2 * Fraction(-1) - 3 * Fraction(5), z, s, p, 3)
    for k in range(-1, 4):
        assert c[k] == 2 * a[k] - 3 * b[k]
    for k in range(0, 3):
        assert lax.l1_coeffs(z * p.q ** k, s, p).apply(*a.triple(k)) == 0


def test_ybar_from_y_properties():
    p, s, z = draw(7)
    y = lax.propagate_y(Fraction(2), Fraction(-1), z, s, p, 3)
    yb = lax.ybar_from_y(y, s, p)
    assert (yb.lo, yb.hi) == (-1, 2)
    for k in range(yb.lo, yb.hi + 1):
        form = lax.l2_coeffs(z * p.q ** (k + 1), s, p)
        assert form.apply(y[k], y[k + 1], yb[k]) == 0
    assert lax.ybar_from_y(lax.propagate_y(0, 0, z, s, p, 3), s, p).is_zero()
    y2 = lax.propagate_y(Fraction(4), Fraction(-2), z, s, p, 3)
    yb2 = lax.ybar_from_y(y2, s, p)
    assert all(yb2[k] == 2 * yb[k] for k in range(-1, 2))


def test_window_must_be_contiguous():
    with pytest.raises(ValueError):
        lax.LaxWindow(Fraction(1), Fraction(2), {0: Fraction(1), 2: Fraction(1)})


def test_compatibility_and_controls():
    for seed in range(3):
        p, s, z = draw(100 + seed)
        rep = lax.check_compatibility(p, s, z, Rng(seed))
        assert rep.ok, rep.to_dict()
        assert rep.controls == 4 == rep.controls_failed_as_expected


def test_compatibility_vacuous_seeds_flagged():
    p, s, z = draw(8)
    rep = lax.check_compatibility(p, s, z, Rng(1), seeds=(Fraction(0), Fraction(0)))
    assert rep.notes["vacuous_seeds_resampled"] == 1
    assert rep.ok


def test_printed_l2_breaks_compatibility():
    p, s, z = draw(9)
    seeds = (Fraction(1), Fraction(2))
    assert lax.compatibility_residual(p, s, z, seeds) == 0
    assert lax.compatibility_residual(p, s, z, seeds, printed_l2=True) != 0


def test_lemma_ratio():
    p, s, _ = draw(10)
    rng = Rng(1010)
    assert lax.check_lemma_ratio(p, s, sample_rational(rng), sample_rational(rng)).ok
    rep = lax.check_lemma_ratio_constancy(p, s, rng, pairs=5)
    assert rep.ok and rep.draws == 5
    # x1 = f: numerator vanishes, and so does V(fbar, f)
    fb = evolve(p, s)[1].f
    assert lax.v_eval(fb, s.f, s.g, p) == 0


def test_proof_chain():
    p, s, z = draw(11)
    rep = lax.check_proof_chain(p, s, z, Rng(11))
    assert rep.ok, rep.to_dict()
    assert rep.notes["l1u_agrees_with_evolved_l1"] == 1


def test_printed_l1u_fails():
    p, s, z = draw(12)
    y = lax.propagate_y(Fraction(1), Fraction(3), z, s, p, 3)
    yb = lax.ybar_from_y(y, s, p)
    fb = evolve(p, s)[1].f
    assert lax.l1u_coeffs(z, fb, s.g, p).apply(*yb.triple(0)) == 0
    assert lax.l1u_coeffs(z, fb, s.g, p, printed=True).apply(*yb.triple(0)) != 0


def test_l1_curve():
    p, s, z = draw(13)
    rng = Rng(13)
    y = lax.propagate_y(Fraction(1), Fraction(-2), z, s, p, 1).values
    triple = (y[-1], y[0], y[1])
    rep = lax.check_l1_curve(p, z, triple, rng)
    assert rep.ok, rep.to_dict()
    # with a free third value (not an L1 solution) the 8 + 2 fixed points still lie on F
    curve = lax.curve_from_l1(z, p, (Fraction(1), Fraction(2), Fraction(7)), rng)
    for name, (f, g) in lax.l1_curve_points(z, p, (1, 2, 7)).items():
        assert eval_curve(curve, f, g) == 0, name


def test_residues_and_ycoef():
    p, _, z = draw(14)
    assert lax.check_residues(p, z).ok
    assert lax.check_ycoef_proportional(p, z, Rng(14), samples=20).ok


def test_l1u_geometry():
    p, s, z = draw(15)
    y = lax.propagate_y(Fraction(3), Fraction(-1), z, s, p, 3)
    yb = lax.ybar_from_y(y, s, p)
    rep = lax.check_l1u_geometry(p, s, z, yb.triple(0), Rng(15))
    assert rep.ok, rep.to_dict()
