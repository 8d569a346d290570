"""E8 parameter geometry and the q-Painleve time evolution.

The evolution T: (h1, h2, u; f, g) -> (h1/q, h2 q, u; fbar, gbar) is computed
as two successive linear solves.  fbar comes from V(fbar, f) = 0 and gbar
from the g-relation, which is affine in gbar and in g.  The inverse solves
the same two relations in the opposite order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from qlax import kernels
from qlax.exact import NonGeneric, solve_linear
from qlax.report import Report

PLAIN, F_BAR, G_BAR = "plain", "f_bar", "g_bar"


def nz(x: Fraction, where: str) -> Fraction:
    """Return ``x`` unless it vanishes, in which case raise NonGeneric."""
    if x == 0:
        raise NonGeneric(where)
    return x


def sym_funcs(u: Sequence[Fraction]) -> list[Fraction]:
    """Elementary symmetric functions m_0..m_n of ``u``."""
    return kernels.esym(list(u))


@dataclass(frozen=True)
class ParamsE8:
    h1: Fraction
    h2: Fraction
    u: tuple[Fraction, ...]
    q: Fraction = field(init=False)
    m: tuple[Fraction, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "h1", Fraction(self.h1))
        object.__setattr__(self, "h2", Fraction(self.h2))
        object.__setattr__(self, "u", tuple(Fraction(x) for x in self.u))
        if len(self.u) != 8:
            raise ValueError("ParamsE8 needs exactly 8 u-parameters")
        nz(self.h1, "h1 = 0")
        nz(self.h2, "h2 = 0")
        m = tuple(sym_funcs(self.u))
        nz(m[8], "some u_i = 0")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "q", self.h1 ** 2 * self.h2 ** 2 / m[8])

    def guard(self) -> None:
        """Raise NonGeneric unless the parameters are on the generic stratum."""
        if self.q == 1:
            raise NonGeneric("q = 1")
        if self.h1 == self.h2:
            raise NonGeneric("h1 = h2")
        if self.h1 == self.h2 * self.q:
            raise NonGeneric("h1 = h2 q")
        if len(set(self.u)) != 8:
            raise NonGeneric("repeated u_i")

    def evolved(self) -> "ParamsE8":
        return ParamsE8(self.h1 / self.q, self.h2 * self.q, self.u)

    def unevolved(self) -> "ParamsE8":
        return ParamsE8(self.h1 * self.q, self.h2 / self.q, self.u)

    def f_of(self, u: Fraction) -> Fraction:
        return u + self.h1 / nz(u, "u = 0")

    def g_of(self, u: Fraction) -> Fraction:
        return u + self.h2 / nz(u, "u = 0")

    def fbar_of(self, u: Fraction) -> Fraction:
        return u + self.h1 / (self.q * nz(u, "u = 0"))

    def gbar_of(self, u: Fraction) -> Fraction:
        return u + self.h2 * self.q / nz(u, "u = 0")

    def configuration(self) -> list[tuple[Fraction, Fraction]]:
        return [(self.f_of(x), self.g_of(x)) for x in self.u]


@dataclass(frozen=True)
class State:
    f: Fraction
    g: Fraction


def point_on_curve(u: Fraction, params: ParamsE8, shift: str = PLAIN) -> State:
    """Point of the parametrized curve at ``u``.

    ``plain`` gives (f(u), g(u)), ``f_bar`` gives (fbar(u), g(u)) and ``g_bar``
    gives (fbar(u), gbar(u)), the configuration of the evolved parameters.
    """
    if u == 0:
        raise NonGeneric("u = 0")
    if shift == PLAIN:
        return State(params.f_of(u), params.g_of(u))
    if shift == F_BAR:
        return State(params.fbar_of(u), params.g_of(u))
    if shift == G_BAR:
        return State(params.fbar_of(u), params.gbar_of(u))
    raise ValueError(f"unknown shift {shift!r}")


def phi_at(f: Fraction, g: Fraction, h1: Fraction, h2: Fraction) -> Fraction:
    return (f - g) * (f / h1 - g / h2) - (h1 - h2) * (1 / h1 - 1 / h2)


def phi(s: State, params: ParamsE8) -> Fraction:
    return phi_at(s.f, s.g, params.h1, params.h2)


def u_poly(z: Fraction, params: ParamsE8) -> Fraction:
    """U(z) = prod (z - u_i)."""
    return kernels.prod_sub(z, params.u)


def u_poly_sym(z: Fraction, m: Sequence[Fraction]) -> Fraction:
    """U(z) from its symmetric-function expansion sum (-1)^i m_{8-i} z^i."""
    return kernels.horner([(-1) ** i * m[8 - i] for i in range(9)], z)


def pn_coeffs(h: Fraction, m: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients of P_n(h, g) in ascending powers of g."""
    return [
        h ** 2 * m[0] - h * m[2] + m[4] - m[6] / h + m[8] / h ** 2,
        2 * h * m[1] - m[3] + m[7] / h ** 2,
        m[2] - 3 * h * m[0] - m[8] / h ** 3,
        -m[1],
        m[0],
    ]


def pd_coeffs(h: Fraction, m: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients of P_d(h, g) in ascending powers of g."""
    return [
        h ** 6 * m[0] - h ** 5 * m[2] + h ** 4 * m[4] - h ** 3 * m[6] + h ** 2 * m[8],
        2 * h ** 2 * m[7] - h ** 3 * m[5] + h ** 5 * m[1],
        h ** 2 * m[6] - 3 * h * m[8] - h ** 5 * m[0],
        -h * m[7],
        m[8],
    ]


def pn_eval(h: Fraction, g: Fraction, m: Sequence[Fraction]) -> Fraction:
    return kernels.horner(pn_coeffs(nz(h, "h = 0"), m), g)


def pd_eval(h: Fraction, g: Fraction, m: Sequence[Fraction]) -> Fraction:
    return kernels.horner(pd_coeffs(nz(h, "h = 0"), m), g)


def v_eval(f0: Fraction, f: Fraction, g: Fraction, params: ParamsE8) -> Fraction:
    """V(f0, f) at the given g.  Affine in f0 and in f."""
    h1, h2, q, m = params.h1, params.h2, params.q, params.m
    first = (f0 - g) * (f - g) - (h1 / q - h2) * (h1 - h2) / h2
    second = ((f0 * q / h1 - g / h2) * (f / h1 - g / h2)
              - (q / h1 - 1 / h2) * (1 / h1 - 1 / h2) * h2)
    return q * first * pd_eval(h2, g, m) - h1 ** 2 * h2 ** 4 * second * pn_eval(h2, g, m)


def g_relation(gbar: Fraction, fbar: Fraction, g: Fraction, params: ParamsE8) -> Fraction:
    """Cleared form of the gbar equation; affine in gbar and in g.

    ``params`` are the parameters before the step.
    """
    h1, h2, q, m = params.h1, params.h2, params.q, params.m
    hq = h1 / q
    first = (fbar - gbar) * (fbar - g) - (hq - h2 * q) * (hq - h2) * q / h1
    second = ((fbar * q / h1 - gbar / (h2 * q)) * (fbar * q / h1 - g / h2)
              - (q / h1 - 1 / (h2 * q)) * (q / h1 - 1 / h2) * h1 / q)
    return q ** 3 * first * pd_eval(hq, fbar, m) - h1 ** 4 * h2 ** 2 * second * pn_eval(hq, fbar, m)


def f_equation_sides(fbar: Fraction, f: Fraction, g: Fraction,
                     params: ParamsE8) -> tuple[Fraction, Fraction]:
    """(LHS, RHS) of the fbar equation in its printed fractional form."""
    h1, h2, q, m = params.h1, params.h2, params.q, params.m
    num = (fbar - g) * (f - g) - (h1 / q - h2) * (h1 - h2) / h2
    den = ((fbar * q / h1 - g / h2) * (f / h1 - g / h2)
           - (q / h1 - 1 / h2) * (1 / h1 - 1 / h2) * h2)
    lhs = num / nz(den, "f-equation LHS denominator")
    rhs = h1 ** 2 * h2 ** 4 / q * pn_eval(h2, g, m) / nz(pd_eval(h2, g, m), "P_d(h2, g) = 0")
    return lhs, rhs


def g_equation_sides(gbar: Fraction, fbar: Fraction, g: Fraction,
                     params: ParamsE8) -> tuple[Fraction, Fraction]:
    """(LHS, RHS) of the gbar equation in its printed fractional form."""
    h1, h2, q, m = params.h1, params.h2, params.q, params.m
    num = (fbar - gbar) * (fbar - g) - (h1 / q - h2 * q) * (h1 / q - h2) * q / h1
    den = ((fbar * q / h1 - gbar / (h2 * q)) * (fbar * q / h1 - g / h2)
           - (q / h1 - 1 / (h2 * q)) * (q / h1 - 1 / h2) * h1 / q)
    lhs = num / nz(den, "g-equation LHS denominator")
    pd = nz(pd_eval(h1 / q, fbar, m), "P_d(h1/q, fbar) = 0")
    rhs = h1 ** 4 * h2 ** 2 / q ** 3 * pn_eval(h1 / q, fbar, m) / pd
    return lhs, rhs


def step_f(f: Fraction, g: Fraction, params: ParamsE8) -> Fraction:
    return solve_linear(lambda x: v_eval(x, f, g, params), "fbar at infinity (V has no fbar term)")


def step_g(f_bar: Fraction, g: Fraction, params: ParamsE8) -> Fraction:
    return solve_linear(lambda x: g_relation(x, f_bar, g, params), "gbar at infinity")


def unstep_g(f_bar: Fraction, g_bar: Fraction, params: ParamsE8) -> Fraction:
    """g from (fbar, gbar); ``params`` are the pre-step parameters."""
    return solve_linear(lambda x: g_relation(g_bar, f_bar, x, params), "g at infinity")


def unstep_f(f_bar: Fraction, g: Fraction, params: ParamsE8) -> Fraction:
    """f from (fbar, g); ``params`` are the pre-step parameters."""
    return solve_linear(lambda x: v_eval(f_bar, x, g, params), "f at infinity")


def evolve(params: ParamsE8, s: State) -> tuple[ParamsE8, State]:
    fb = step_f(s.f, s.g, params)
    gb = step_g(fb, s.g, params)
    return params.evolved(), State(fb, gb)


def evolve_inverse(params: ParamsE8, s: State) -> tuple[ParamsE8, State]:
    prev = params.unevolved()
    g = unstep_g(s.f, s.g, prev)
    f = unstep_f(s.f, g, prev)
    return prev, State(f, g)


def orbit(params: ParamsE8, s: State, steps: int):
    """Yield (k, params, state) for k = 0..steps (backwards if negative)."""
    yield 0, params, s
    move = evolve if steps >= 0 else evolve_inverse
    sign = 1 if steps >= 0 else -1
    for k in range(1, abs(steps) + 1):
        params, s = move(params, s)
        yield sign * k, params, s


# checks ---------------------------------------------------------------------

def prel1_residuals(h: Fraction, z: Fraction, params: ParamsE8) -> tuple[Fraction, Fraction]:
    """Both defining relations of P_n, P_d, with the closed forms plugged in."""
    m = params.m
    x = z + h / z
    U = lambda w: u_poly(w, params)  # noqa: E731
    r1 = (z - h / z) * pn_eval(h, x, m) - (U(z) / z ** 3 - (z / h) ** 3 * U(h / z))
    r2 = (z - h / z) * pd_eval(h, x, m) - (z ** 5 * U(h / z) - (h / z) ** 5 * U(z))
    return r1, r2


def prel2_residuals(h: Fraction, z: Fraction, g: Fraction,
                    params: ParamsE8) -> tuple[Fraction, Fraction]:
    m = params.m
    x = z + h / z
    r1 = pd_eval(h, x, m) + h ** 3 * z ** 2 * pn_eval(h, x, m) - (h / z) ** 3 * x * u_poly(z, params)
    r2 = pd_eval(h, g, m) - h ** 4 * pn_eval(1 / h, g / h, m[::-1])
    return r1, r2


def check_identities(params: ParamsE8, h: Fraction, z: Fraction, g: Fraction,
                     u: Fraction) -> Report:
    """One draw of the P_n/P_d identities, the U expansion and phi on the curve."""
    rep = Report("core_identities")
    r1, r2 = prel1_residuals(h, z, params)
    r3, r4 = prel2_residuals(h, z, g, params)
    rep.record(r1 == 0, identity="P_n definition", residual=r1)
    rep.record(r2 == 0, identity="P_d definition", residual=r2)
    rep.record(r3 == 0, identity="P_d + h^3 z^2 P_n", residual=r3)
    rep.record(r4 == 0, identity="P_d / P_n duality", residual=r4)
    rep.record(u_poly(z, params) == u_poly_sym(z, params.m), identity="U expansion")
    rep.record(phi(point_on_curve(u, params), params) == 0, identity="phi on curve")
    # closed form built from the wrong m must miss the definition
    other = ParamsE8(params.h1, params.h2, (params.u[0] + 1,) + params.u[1:])
    x = z + h / z
    rep.control((z - h / z) * pn_eval(h, x, other.m) - (z - h / z) * pn_eval(h, x, params.m) + r1,
                "P_n with perturbed u1")
    rep.control(phi(State(params.f_of(u) + 1, params.g_of(u)), params), "phi off the curve")
    return rep


def check_evolution(params: ParamsE8, s: State) -> Report:
    """Back-substitution of one step into V and both printed equations,
    conservation of q, and the forward/backward round trip."""
    rep = Report("core_evolution")
    p2, s2 = evolve(params, s)
    rep.record(v_eval(s2.f, s.f, s.g, params) == 0, check="V(fbar, f) = 0")
    lhs, rhs = f_equation_sides(s2.f, s.f, s.g, params)
    rep.record(lhs == rhs, check="f equation")
    lhs, rhs = g_equation_sides(s2.g, s2.f, s.g, params)
    rep.record(lhs == rhs, check="g equation")
    rep.record(p2.q == params.q and p2.u == params.u
               and (p2.h1, p2.h2) == (params.h1 / params.q, params.h2 * params.q), check="parameters")
    rep.record(evolve_inverse(p2, s2) == (params, s), check="round trip")
    lhs, rhs = g_equation_sides(s2.g + 1, s2.f, s.g, params)
    rep.control(lhs - rhs, "gbar+1")
    lhs, rhs = f_equation_sides(2 * s2.f, s.f, s.g, params)
    rep.control(lhs - rhs, "fbar*2")
    return rep
