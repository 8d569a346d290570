"""The E7(1), E6(1) and D5(1) degenerations.

Each system has parameters b_1..b_8, t with q = b5 b6 b7 b8 / (b1 b2 b3 b4),
an evolution (b, t; f, g) -> (b, t/q; fbar, gbar) given by two relations
that are affine in the unknown, and a scalar Lax pair of the same shape as
the E8 one.  For E7 and below g is the inverted coordinate 1/g.

Two printed formulas are wrong and are kept behind ``printed=True``:

* E7, second evolution relation: the factor (fbar g - t^2) must read
  (fbar g q - t^2), as in the first relation.
* D5, L1: in the first bracket "q z / (q t^2)" must read "g z / (q t^2)".

The limit checks evaluate E8 -> E7 -> E6 -> D5 at shrinking rational eps and
require the relative deviation of each limit relation to shrink at least
5x per decade.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from qlax.core import ParamsE8, State, evolve, nz, pd_eval, pn_eval, u_poly
from qlax.exact import NonGeneric, Rng, sample_distinct, sample_rational
from qlax.lax import L2Form, LaxTriple, LaxWindow
from qlax.report import Report

SYSTEMS = ("e7", "e6", "d5")
DegState = State


def _prod(xs) -> Fraction:
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def normalize_system(name: str) -> str:
    key = name.strip().lower()
    if key not in SYSTEMS:
        raise ValueError(f"unknown degenerate system {name!r}")
    return key


@dataclass(frozen=True)
class ParamsDeg:
    system: str
    b: tuple[Fraction, ...]
    t: Fraction
    q: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "system", normalize_system(self.system))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        object.__setattr__(self, "t", Fraction(self.t))
        if len(self.b) != 8:
            raise ValueError("ParamsDeg needs exactly 8 b-parameters")
        for i, x in enumerate(self.b):
            nz(x, f"b{i + 1} = 0")
        nz(self.t, "t = 0")
        b = self.b
        object.__setattr__(self, "q", b[4] * b[5] * b[6] * b[7] / (b[0] * b[1] * b[2] * b[3]))

    def guard(self) -> None:
        if self.q == 1:
            raise NonGeneric("q = 1")
        if len(set(self.b)) != 8:
            raise NonGeneric("repeated b_i")
        if self.t ** 2 == 1:
            raise NonGeneric("t^2 = 1")

    def evolved(self) -> "ParamsDeg":
        return ParamsDeg(self.system, self.b, self.t / self.q)

    def unevolved(self) -> "ParamsDeg":
        return ParamsDeg(self.system, self.b, self.t * self.q)

    def with_t(self, t: Fraction) -> "ParamsDeg":
        return ParamsDeg(self.system, self.b, t)

    def configuration(self) -> list[tuple[Fraction, Fraction] | None]:
        """E7 base points; for E6/D5 the finite points only (points at
        infinity are given as None)."""
        b, t = self.b, self.t
        if self.system == "e7":
            return [(x, 1 / x) for x in b[:4]] + [(x * t, t / x) for x in b[4:]]
        if self.system == "e6":
            return ([(x, 1 / x) for x in b[:4]] + [(x * t, Fraction(0)) for x in b[4:6]]
                    + [(Fraction(0), t / x) for x in b[6:]])
        return ([None, None] + [None, None] + [(x * t, Fraction(0)) for x in b[4:6]]
                + [(Fraction(0), t / x) for x in b[6:]])


def b_polys(z: Fraction, params: ParamsDeg) -> tuple[Fraction, Fraction]:
    """(B1(z), B2(z)) with B1 = prod_{i<=4} (1 - b_i z), B2 over i >= 5."""
    b = params.b
    return _prod(1 - x * z for x in b[:4]), _prod(1 - x * z for x in b[4:])


def _b1(z, p):
    return b_polys(z, p)[0]


def _b2(z, p):
    return b_polys(z, p)[1]


# cleared forms of the two evolution relations; params are pre-step

def relation_f(fbar: Fraction, f: Fraction, g: Fraction, p: ParamsDeg) -> Fraction:
    b, t, q = p.b, p.t, p.q
    if p.system == "e7":
        return ((f * g - 1) * (fbar * g - 1) * t ** 4 * _b2(g / t, p)
                - _b1(g, p) * (f * g - t ** 2) * (fbar * g * q - t ** 2))
    if p.system == "e6":
        return ((f * g - 1) * (fbar * g - 1) * b[4] * b[5] * (b[6] * g - t) * (b[7] * g - t)
                - f * fbar * q * _prod(x * g - 1 for x in b[:4]))
    return f * fbar * q * (b[0] * g - 1) * (b[1] * g - 1) - b[4] * b[5] * (b[6] * g - t) * (b[7] * g - t)


def relation_g(gbar: Fraction, fbar: Fraction, g: Fraction, p: ParamsDeg,
               printed: bool = False) -> Fraction:
    b, t, q = p.b, p.t, p.q
    if p.system == "e7":
        mid = fbar * g - t ** 2 if printed else fbar * g * q - t ** 2
        return ((fbar * g - 1) * (fbar * gbar - 1) * q ** 3 * _b2(t / nz(fbar * q, "fbar = 0"), p)
                - _b1(1 / fbar, p) * mid * (fbar * gbar * q ** 2 - t ** 2))
    if p.system == "e6":
        return ((fbar * g - 1) * (fbar * gbar - 1) * (fbar * q - b[4] * t) * (fbar * q - b[5] * t)
                - g * gbar * q ** 2 * _prod(x - fbar for x in b[:4]))
    return (g * gbar * q ** 2 * b[0] * b[1] * (b[2] - fbar) * (b[3] - fbar)
            - (fbar * q - b[4] * t) * (fbar * q - b[5] * t))


def relation_sides(which: str, new: Fraction, fbar_or_f: Fraction, g: Fraction,
                   p: ParamsDeg, printed: bool = False) -> tuple[Fraction, Fraction]:
    """(LHS, RHS) of the displayed fractional relations.

    ``which="f"``: new = fbar, second argument f.  ``which="g"``: new = gbar,
    second argument fbar.  Independent of the cleared forms used to solve.
    """
    b, t, q = p.b, p.t, p.q
    if which == "f":
        fbar, f = new, fbar_or_f
        if p.system == "e7":
            lhs = (f * g - 1) * (fbar * g - 1) / nz((f * g - t ** 2) * (fbar * g * q - t ** 2), "fg = t^2")
            rhs = _b1(g, p) / nz(t ** 4 * _b2(g / t, p), "B2(g/t) = 0")
        elif p.system == "e6":
            lhs = (f * g - 1) * (fbar * g - 1) / nz(f * fbar, "f fbar = 0")
            rhs = (q * _prod(x * g - 1 for x in b[:4])
                   / nz(b[4] * b[5] * (b[6] * g - t) * (b[7] * g - t), "b7 g = t or b8 g = t"))
        else:
            lhs = f * fbar
            rhs = (b[4] * b[5] * (b[6] * g - t) * (b[7] * g - t)
                   / nz(q * (b[0] * g - 1) * (b[1] * g - 1), "b1 g = 1 or b2 g = 1"))
        return lhs, rhs
    if which != "g":
        raise ValueError("which must be 'f' or 'g'")
    gbar, fbar = new, fbar_or_f
    if p.system == "e7":
        mid = fbar * g - t ** 2 if printed else fbar * g * q - t ** 2
        lhs = (fbar * g - 1) * (fbar * gbar - 1) / nz(mid * (fbar * gbar * q ** 2 - t ** 2), "g-relation pole")
        rhs = _b1(1 / fbar, p) / nz(q ** 3 * _b2(t / (fbar * q), p), "B2(t/(fbar q)) = 0")
    elif p.system == "e6":
        lhs = (fbar * g - 1) * (fbar * gbar - 1) / nz(g * gbar, "g gbar = 0")
        rhs = (q ** 2 * _prod(x - fbar for x in b[:4])
               / nz((fbar * q - b[4] * t) * (fbar * q - b[5] * t), "fbar q = b5 t or b6 t"))
    else:
        lhs = g * gbar
        rhs = ((fbar * q - b[4] * t) * (fbar * q - b[5] * t)
               / nz(q ** 2 * b[0] * b[1] * (b[2] - fbar) * (b[3] - fbar), "fbar = b3 or b4"))
    return lhs, rhs


def _solve(fn: Callable[[Fraction], Fraction], where: str) -> Fraction:
    c0 = fn(Fraction(0))
    c1 = fn(Fraction(1)) - c0
    if c1 == 0:
        raise NonGeneric(where)
    return -c0 / c1


def deg_evolve(params: ParamsDeg, s: State, printed: bool = False) -> tuple[ParamsDeg, State]:
    fb = _solve(lambda x: relation_f(x, s.f, s.g, params), "fbar at infinity")
    gb = _solve(lambda x: relation_g(x, fb, s.g, params, printed), "gbar at infinity")
    return params.evolved(), State(fb, gb)


def deg_evolve_inverse(params: ParamsDeg, s: State, printed: bool = False) -> tuple[ParamsDeg, State]:
    prev = params.unevolved()
    g = _solve(lambda x: relation_g(s.g, s.f, x, prev, printed), "g at infinity")
    f = _solve(lambda x: relation_f(s.f, x, g, prev), "f at infinity")
    return prev, State(f, g)


def deg_lax_coeffs(system: str, z: Fraction, s: State, params: ParamsDeg,
                   printed: bool = False) -> tuple[LaxTriple, L2Form]:
    """L1 as coefficients of (Y(z/q), Y(z), Y(qz)) and L2 as a Y(z/q) +
    b Y(z) + c Ybar(z/q)."""
    system = normalize_system(system)
    if system != params.system:
        raise ValueError("system does not match params")
    b, t, q = params.b, params.t, params.q
    f, g = s.f, s.g
    nz(f - z, "f = z")
    nz(f * q - z, "f q = z")
    nz(g, "g = 0")
    nz(z, "z = 0")
    if system == "e7":
        cp = _b2(t / z, params) / (t ** 2 * (f - z))
        cm = t ** 2 * _b1(q / z, params) / (q * (f * q - z))
        c0 = (1 - t ** 2) / (g * z ** 2) * (
            q * _b1(g, params) / (nz(f * g - 1, "fg = 1") * nz(g * z - q, "gz = q"))
            - t ** 4 * _b2(g / t, params) / (nz(f * g - t ** 2, "fg = t^2") * nz(g * z - t ** 2, "gz = t^2")))
        c0 -= cp * t ** 2 * (1 - g * z) / (t ** 2 - g * z)
        c0 -= cm * (q * t ** 2 - g * z) / (t ** 2 * (q - g * z))
        l2 = L2Form(g * z - q, (q * t ** 2 - g * z) / t ** 2, g * z * (f * q - z) / q ** 2)
    elif system == "e6":
        cm = _prod(x * q - z for x in b[:4]) * t ** 2 / (q * (f * q - z) * z ** 4)
        cp = (b[4] * t - z) * (b[5] * t - z) / ((f - z) * z ** 2 * t ** 2)
        c0 = (_prod(x * g - 1 for x in b[:4]) * q
              / (g * nz(f * g - 1, "fg = 1") * z ** 2 * nz(g * z - q, "gz = q"))
              - b[4] * b[5] * (b[6] * g - t) * (b[7] * g - t) / (nz(f, "f = 0") * g * z ** 3))
        c0 -= cm * g * z / (t ** 2 * (g * z - q))
        c0 -= cp * (g * z - 1) * t ** 2 / (g * z)
        l2 = L2Form(q - g * z, g * z / t ** 2, -g * z * (f * q - z) / q ** 2)
    else:
        cm = b[0] * b[1] * q * (b[2] * q - z) * (b[3] * q - z) * t ** 2 / ((f * q - z) * z ** 2)
        cp = (b[4] * t - z) * (b[5] * t - z) / ((f - z) * t ** 2)
        c0 = ((b[0] * g - 1) * (b[1] * g - 1) / g
              - b[4] * b[5] * (b[6] * g - t) * (b[7] * g - t) / (nz(f, "f = 0") * g * z))
        c0 += cm * (q if printed else g) * z / (q * t ** 2)
        c0 += cp * t ** 2 / (g * z)
        l2 = L2Form(q, g * z / t ** 2, -g * z * (f * q - z) / q ** 2)
    return LaxTriple(cm, c0, cp), l2


def sample_deg_draw(system: str, rng: Rng) -> tuple[ParamsDeg, State, Fraction]:
    system = normalize_system(system)
    while True:
        b = sample_distinct(rng, 8)
        t = sample_rational(rng)
        try:
            params = ParamsDeg(system, b, t)
            params.guard()
        except NonGeneric:
            continue
        return params, State(sample_rational(rng), sample_rational(rng)), sample_rational(rng)


def deg_compatibility_residual(params: ParamsDeg, s: State, z: Fraction,
                               seeds: tuple[Fraction, Fraction], evolved: tuple[ParamsDeg, State],
                               printed_l1: bool = False) -> Fraction:
    q = params.q
    y = {-1: seeds[0], 0: seeds[1]}
    for k in range(3):
        lt, _ = deg_lax_coeffs(params.system, z * q ** k, s, params, printed_l1)
        nz(lt.c_plus, f"Y(qz) coefficient vanishes at offset {k}")
        y[k + 1] = -(lt.c_minus * y[k - 1] + lt.c_zero * y[k]) / lt.c_plus
    window = LaxWindow(z, q, y)
    ybar = {}
    for k in range(window.lo, window.hi):
        _, form = deg_lax_coeffs(params.system, z * q ** (k + 1), s, params, printed_l1)
        nz(form.c, f"Ybar coefficient of L2 vanishes at offset {k}")
        ybar[k] = -(form.a * window[k] + form.b * window[k + 1]) / form.c
    p2, s2 = evolved
    lt, _ = deg_lax_coeffs(params.system, z, s2, p2, printed_l1)
    return lt.apply(ybar[-1], ybar[0], ybar[1])


def deg_check_compatibility(system: str, params: ParamsDeg, s: State, z: Fraction,
                            rng: Rng) -> Report:
    """Same seed / L1 / L2 / evolved-L1 harness as for E8.

    Controls: gbar + 1, fbar * 2, t not updated, and the printed formula
    where one is wrong (E7 second relation, D5 L1).  The printed residual
    is stored in the notes.
    """
    system = normalize_system(system)
    rep = Report(f"{system}_compatibility")
    seeds = (sample_rational(rng), sample_rational(rng))
    p2, s2 = deg_evolve(params, s)
    res = deg_compatibility_residual(params, s, z, seeds, (p2, s2))
    rep.record(res == 0, system=system, residual=res)
    rep.control(deg_compatibility_residual(params, s, z, seeds, (p2, State(s2.f, s2.g + 1))), "gbar+1")
    rep.control(deg_compatibility_residual(params, s, z, seeds, (p2, State(2 * s2.f, s2.g))), "fbar*2")
    rep.control(deg_compatibility_residual(params, s, z, seeds, (params, s2)), "t not updated")
    if system == "e7":
        printed = deg_compatibility_residual(params, s, z, seeds, deg_evolve(params, s, printed=True))
    elif system == "d5":
        printed = deg_compatibility_residual(params, s, z, seeds, (p2, s2), printed_l1=True)
    else:
        printed = None
    if printed is not None:
        rep.control(printed, "printed formula")
        rep.notes["printed_formula_residual"] = printed
    return rep


def deg_check_evolution(params: ParamsDeg, s: State) -> Report:
    """Back-substitution into the displayed relations, round trip, q and t."""
    rep = Report(f"{params.system}_evolution")
    p2, s2 = deg_evolve(params, s)
    lf = relation_sides("f", s2.f, s.f, s.g, params)
    lg = relation_sides("g", s2.g, s2.f, s.g, params)
    rep.record(lf[0] == lf[1], relation="f")
    rep.record(lg[0] == lg[1], relation="g")
    back = deg_evolve_inverse(p2, s2)
    rep.record(back[0] == params and back[1] == s, relation="round trip")
    rep.record(p2.q == params.q and p2.t == params.t / params.q, relation="q, t update")
    wrong = relation_sides("g", s2.g + 1, s2.f, s.g, params)
    rep.control(wrong[0] - wrong[1], "gbar+1")
    if params.system == "e7":
        printed = relation_sides("g", s2.g, s2.f, s.g, params, printed=True)
        rep.control(printed[0] - printed[1], "printed second relation")
    return rep


def check_e7_configuration(params: ParamsDeg) -> Report:
    rep = Report("e7_configuration_curve")
    t = params.t
    for k, (f, g) in enumerate(params.configuration()):
        rep.record((f * g - 1) * (f * g - t ** 2) == 0, point=k + 1)
    return rep


# limits --------------------------------------------------------------------

def parse_epsilons(text: str) -> list[Fraction]:
    """'1e-3,1e-4' -> [1/1000, 1/10000]; plain rationals 'p/q' also accepted."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if "e" in item.lower():
            mant, exp = item.lower().split("e")
            value = Fraction(mant or "1") * Fraction(10) ** int(exp)
        else:
            value = Fraction(item)
        if value <= 0:
            raise ValueError("epsilons must be positive")
        out.append(value)
    if any(a <= b for a, b in zip(out, out[1:])):
        raise ValueError("epsilons must be strictly decreasing")
    return out


DEFAULT_EPSILONS = [Fraction(1, 10 ** k) for k in range(3, 7)]


def deviation(ratio: Fraction) -> Fraction:
    return abs(ratio - 1)


def converges(devs: Sequence[Fraction], eps: Sequence[Fraction], factor: float = 5.0,
              per_decade: bool = False) -> bool:
    """Deviation strictly decreases along eps and shrinks by at least
    ``factor`` per decade on average between the first and last eps.

    With ``per_decade`` every consecutive pair must shrink by ``factor``
    per decade separating them.  Exact zeros count as converged once reached.
    """
    for d0, d1, e0, e1 in zip(devs, devs[1:], eps, eps[1:]):
        if d1 == 0:
            continue
        if not d1 < d0:
            return False
        if per_decade and d0 / d1 < factor ** math.log10(e0 / e1):
            return False
    if devs[-1] == 0:
        return True
    decades = math.log10(eps[0] / eps[-1])
    return devs[0] / devs[-1] >= factor ** decades


def e8_from_e7(params: ParamsDeg, eps: Fraction) -> ParamsE8:
    b, t = params.b, params.t
    return ParamsE8(t * eps, eps / t, list(b[:4]) + [eps / x for x in b[4:]])


def e7_from_e6(params: ParamsDeg, eps: Fraction) -> ParamsDeg:
    b = params.b
    return ParamsDeg("e7", (*b[:4], b[4] / eps, b[5] / eps, b[6] * eps, b[7] * eps), params.t * eps)


def e6_from_d5(params: ParamsDeg, eps: Fraction) -> ParamsDeg:
    b = params.b
    return ParamsDeg("e6", (b[0] / eps, b[1] / eps, b[2] * eps, b[3] * eps, *b[4:]), params.t * eps)


def _limit_relations_e7(p7: ParamsDeg, s: State, z: Fraction):
    """Functions eps -> ratio that must tend to 1."""
    b, t, q = p7.b, p7.t, p7.q
    f, g = s.f, s.g
    _, s7 = deg_evolve(p7, s)
    _, s7p = deg_evolve(p7, s, printed=True)
    fb7 = s7.f

    def pn_h2(e):
        p = e8_from_e7(p7, e)
        return pn_eval(p.h2, g, p.m) / (g ** 4 * _b1(1 / g, p7))

    def pd_h2(e):
        p = e8_from_e7(p7, e)
        return pd_eval(p.h2, g, p.m) / (e ** 4 * g ** 4 / q * _b2(1 / (t * g), p7))

    def pn_h1q(e):
        p = e8_from_e7(p7, e)
        return pn_eval(p.h1 / q, fb7, p.m) / (fb7 ** 4 * _b1(1 / fb7, p7))

    def pd_h1q(e):
        p = e8_from_e7(p7, e)
        return pd_eval(p.h1 / q, fb7, p.m) / (e ** 4 * fb7 ** 4 / q * _b2(t / (q * fb7), p7))

    def u_zq(e):
        p = e8_from_e7(p7, e)
        return u_poly(z / q, p) / ((z / q) ** 8 * _b1(q / z, p7))

    def u_h1z(e):
        p = e8_from_e7(p7, e)
        return u_poly(p.h1 / z, p) / (e ** 4 / q * _b2(t / z, p7))

    def configuration(e):
        # worst point; E8 g is inverted to compare with the E7 coordinate
        p = e8_from_e7(p7, e)
        worst, out = Fraction(-1), Fraction(1)
        for (f8, g8), (f7, g7) in zip(p.configuration(), p7.configuration()):
            for r in (f8 / f7, g7 * g8):
                if deviation(r) > worst:
                    worst, out = deviation(r), r
        return out

    def evolution_f(e):
        return evolve(e8_from_e7(p7, e), State(f, 1 / g))[1].f / fb7

    def evolution_g(e):
        return evolve(e8_from_e7(p7, e), State(f, 1 / g))[1].g * s7.g

    rels = {"Pn(h2,g)": pn_h2, "Pd(h2,g)": pd_h2, "Pn(h1/q,fbar)": pn_h1q,
            "Pd(h1/q,fbar)": pd_h1q, "U(z/q)": u_zq, "U(h1/z)": u_h1z,
            "configuration": configuration, "evolution fbar": evolution_f,
            "evolution gbar": evolution_g}
    printed = {"printed second relation":
                lambda e: evolve(e8_from_e7(p7, e), State(f, 1 / g))[1].g * s7p.g}
    return rels, printed


def _limit_relations_e6(p6: ParamsDeg, s: State, z: Fraction):
    _, s6 = deg_evolve(p6, s)

    def ev(e):
        return deg_evolve(e7_from_e6(p6, e), s)[1]

    rels = {"evolution fbar": lambda e: ev(e).f / s6.f,
            "evolution gbar": lambda e: ev(e).g / s6.g,
            "q": lambda e: e7_from_e6(p6, e).q / p6.q}
    return rels, {}


def _limit_relations_d5(p5: ParamsDeg, s: State, z: Fraction):
    _, s5 = deg_evolve(p5, s)
    l1_5, l2_5 = deg_lax_coeffs("d5", z, s, p5)
    l1_5p, _ = deg_lax_coeffs("d5", z, s, p5, printed=True)

    def e6_state(e):
        return State(s.f * e, s.g * e)

    def ev(e):
        return deg_evolve(e6_from_d5(p5, e), e6_state(e))[1]

    def lax(e):
        return deg_lax_coeffs("e6", z * e, e6_state(e), e6_from_d5(p5, e))

    rels = {
        "evolution fbar": lambda e: ev(e).f / e / s5.f,
        "evolution gbar": lambda e: ev(e).g / e / s5.g,
        "q": lambda e: e6_from_d5(p5, e).q / p5.q,
        "L2 Y(z/q)": lambda e: lax(e)[1].a / l2_5.a,
        "L2 Y(z)": lambda e: lax(e)[1].b / l2_5.b,
        "L2 Ybar(z/q)": lambda e: lax(e)[1].c / e ** 3 / l2_5.c,
        "L1 Y(z/q):Y(qz)": lambda e: (lax(e)[0].c_minus / lax(e)[0].c_plus) / (l1_5.c_minus / l1_5.c_plus),
        "L1 Y(z):Y(qz)": lambda e: (lax(e)[0].c_zero / lax(e)[0].c_plus) / (l1_5.c_zero / l1_5.c_plus),
    }
    printed = {"printed L1": lambda e: (lax(e)[0].c_zero / lax(e)[0].c_plus)
                / (l1_5p.c_zero / l1_5p.c_plus)}
    return rels, printed


_LIMITS = {"e7": _limit_relations_e7, "e6": _limit_relations_e6, "d5": _limit_relations_d5}


LIMIT_Q_WINDOW = 50


def sample_limit_draw(target: str, rng: Rng) -> tuple[ParamsDeg, State, Fraction]:
    """Base draw for a limit check, with 1/50 <= |q| <= 50.

    The limit relations expand in eps times powers of q, so a draw with an
    extreme q is still far from its limit at eps = 1e-3.
    """
    while True:
        draw = sample_deg_draw(target, rng)
        if Fraction(1, LIMIT_Q_WINDOW) <= abs(draw[0].q) <= LIMIT_Q_WINDOW:
            return draw


def check_limit(target: str, eps_list: Sequence[Fraction], rng: Rng,
                draw: tuple[ParamsDeg, State, Fraction] | None = None) -> Report:
    """Relative deviation of every limit relation into ``target`` must
    decrease along ``eps_list`` and shrink >= 5x per decade overall.

    The control scales the evolution relation by 3/2, which must not
    converge.  Printed-formula variants are tabulated in the notes.
    """
    target = normalize_system(target)
    eps = [Fraction(e) for e in eps_list]
    if len(eps) < 2 or any(e <= 0 for e in eps) or any(a <= b for a, b in zip(eps, eps[1:])):
        raise ValueError("eps_list must be at least two strictly decreasing positive values")
    params, s, z = draw if draw is not None else sample_limit_draw(target, rng)
    try:
        rels, printed = _LIMITS[target](params, s, z)
    except ZeroDivisionError as exc:
        raise NonGeneric(f"limit base draw: {exc}") from exc
    rep = Report(f"limit_{target}")
    table = {}

    def devs_of(fn):
        try:
            return [deviation(fn(e)) for e in eps]
        except ZeroDivisionError as exc:
            raise NonGeneric(f"limit relation: {exc}") from exc

    for name, fn in rels.items():
        devs = devs_of(fn)
        table[name] = [f"{float(d):.3e}" for d in devs]
        rep.record(converges(devs, eps), relation=name, deviations=table[name])
        if not converges(devs, eps, per_decade=True):
            rep.notes.setdefault("below 5x in some decade", []).append(name)
    scaled = rels["evolution gbar"]
    devs = devs_of(lambda e: scaled(e) * Fraction(3, 2))
    table["control: gbar target * 3/2"] = [f"{float(d):.3e}" for d in devs]
    rep.control(Fraction(int(not converges(devs, eps))), "gbar target * 3/2")
    for name, fn in printed.items():
        devs = devs_of(fn)
        table[name] = [f"{float(d):.3e}" for d in devs]
        rep.notes[f"{name} converges"] = converges(devs, eps)
    rep.notes["deviations"] = table
    rep.notes["epsilons"] = eps
    return rep
