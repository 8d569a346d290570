"""Affine Weyl group of type E8(1) acting birationally on (params; f, g).

Words are applied right to left.  The nine simple reflections form the
affine E8 diagram::

                    s12
                     |
    c - mu12 - s23 - s34 - s45 - s56 - s67 - s78
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from qlax.core import ParamsE8, State, evolve, nz
from qlax.exact import NonGeneric, Rng
from qlax.report import Report

KINDS = ("s", "c", "mu", "nu")


@dataclass(frozen=True)
class Generator:
    kind: str
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "c":
            return
        if not (1 <= self.i <= 8 and 1 <= self.j <= 8) or self.i == self.j:
            raise ValueError(f"bad indices for {self.kind}: {self.i}, {self.j}")
        # unordered pair
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)

    def __str__(self) -> str:
        return "c" if self.kind == "c" else f"{self.kind}{self.i}{self.j}"


GroupWord = tuple  # of Generator, applied right to left

_GEN_RE = re.compile(r"^(c|s|mu|nu)(?:([1-8])([1-8]))?$")


def parse_generator(text: str) -> Generator:
    m = _GEN_RE.match(text.strip())
    if not m or (m.group(1) != "c" and m.group(2) is None) or (m.group(1) == "c" and m.group(2)):
        raise ValueError(f"cannot parse generator {text!r}")
    if m.group(1) == "c":
        return Generator("c")
    return Generator(m.group(1), int(m.group(2)), int(m.group(3)))


def parse_word(text: str) -> GroupWord:
    """Comma-separated generator names, e.g. ``"c,mu12,c,mu12"``."""
    if not text.strip():
        return ()
    return tuple(parse_generator(t) for t in text.split(","))


def format_word(word: Sequence[Generator]) -> str:
    return ",".join(str(g) for g in word)


def _cross_ratio_solve(a: Fraction, b: Fraction, ratio: Fraction, where: str) -> Fraction:
    # (x - a) / (x - b) = ratio
    return (a - ratio * b) / nz(1 - ratio, where)


def apply_generator(gen: Generator, params: ParamsE8, s: State) -> tuple[ParamsE8, State]:
    h1, h2 = params.h1, params.h2
    u = list(params.u)
    if gen.kind == "c":
        return ParamsE8(h2, h1, u), State(s.g, s.f)
    i, j = gen.i - 1, gen.j - 1
    if gen.kind == "s":
        u[i], u[j] = u[j], u[i]
        return ParamsE8(h1, h2, u), s
    fi, gi = params.f_of(u[i]), params.g_of(u[i])
    fj, gj = params.f_of(u[j]), params.g_of(u[j])
    f, g = s.f, s.g
    if gen.kind == "mu":
        new_h1 = h1 * h2 / (u[i] * u[j])
        u[i], u[j] = h2 / u[j], h2 / u[i]
        new = ParamsE8(new_h1, h2, u)
        ratio = ((f - fi) * (g - gj)) / nz((f - fj) * (g - gi), f"{gen}: f = f_j or g = g_i")
        ft = _cross_ratio_solve(new.f_of(u[i]), new.f_of(u[j]), ratio, f"{gen}: ftilde at infinity")
        return new, State(ft, g)
    new_h2 = h1 * h2 / (u[i] * u[j])
    u[i], u[j] = h1 / u[j], h1 / u[i]
    new = ParamsE8(h1, new_h2, u)
    ratio = ((g - gi) * (f - fj)) / nz((g - gj) * (f - fi), f"{gen}: g = g_j or f = f_i")
    gt = _cross_ratio_solve(new.g_of(u[i]), new.g_of(u[j]), ratio, f"{gen}: gtilde at infinity")
    return new, State(f, gt)


def apply_word(word: Sequence[Generator], params: ParamsE8, s: State) -> tuple[ParamsE8, State]:
    for step, gen in enumerate(reversed(word)):
        try:
            params, s = apply_generator(gen, params, s)
        except NonGeneric as exc:
            raise NonGeneric(f"step {step} ({gen}): {exc.where}") from exc
    return params, s


SIMPLE_REFLECTIONS = tuple(parse_word("c,mu12,s23,s34,s45,s56,s67,s78,s12"))
_CHAIN = [str(g) for g in SIMPLE_REFLECTIONS[:8]]
DYNKIN_EDGES = frozenset(
    [frozenset(p) for p in zip(_CHAIN, _CHAIN[1:])] + [frozenset(("s12", "s23"))]
)

R_WORD = parse_word("s12,mu12,s34,mu34,s56,mu56,s78,mu78")
T1_WORD = parse_word("c") + R_WORD + parse_word("c") + R_WORD


def coxeter_exponent(a: Generator, b: Generator) -> int:
    if a == b:
        return 1
    return 3 if frozenset((str(a), str(b))) in DYNKIN_EDGES else 2


def same_point(x: tuple[ParamsE8, State], y: tuple[ParamsE8, State]) -> bool:
    return (x[0].h1 == y[0].h1 and x[0].h2 == y[0].h2 and x[0].u == y[0].u
            and x[1] == y[1])


def check_coxeter(params: ParamsE8, s: State, rng: Rng | None = None) -> Report:
    """Every relation (ab)^m(a,b) = 1 of the affine E8 Coxeter matrix, by
    exact action on (params, f, g).  Off-by-one powers serve as controls:
    (ab)^(m-1) must not be the identity."""
    rep = Report("weyl_coxeter")
    start = (params, s)
    for a, b in itertools.combinations_with_replacement(SIMPLE_REFLECTIONS, 2):
        # a == b: the involution a^2 = 1
        m = 2 if a == b else coxeter_exponent(a, b)
        word = (a,) if a == b else (a, b)
        x = start
        powers = []
        for _ in range(m):
            x = apply_word(word, *x)
            powers.append(x)
        rep.record(same_point(powers[-1], start), relation=f"({format_word(word)})^{m}")
        rep.control(Fraction(int(not same_point(powers[-2], start))),
                    f"({format_word(word)})^{m - 1}")
    return rep


def check_q_invariance(params: ParamsE8, s: State) -> Report:
    rep = Report("weyl_q_invariant")
    for gen in SIMPLE_REFLECTIONS + tuple(parse_word("nu12,mu34,nu56,s18")):
        new, _ = apply_generator(gen, params, s)
        rep.record(new.q == params.q, generator=str(gen))
    return rep


def check_configuration(params: ParamsE8, s: State) -> Report:
    """Each generator carries configuration points k outside its index pair
    onto configuration points of the image parameters."""
    rep = Report("weyl_configuration")
    for gen in SIMPLE_REFLECTIONS + tuple(parse_word("nu12,nu45,mu37")):
        new, _ = apply_generator(gen, params, s)
        image = set(new.configuration())
        skip = set() if gen.kind in ("s", "c") else {gen.i - 1, gen.j - 1}
        for k, pt in enumerate(params.configuration()):
            if k in skip:
                continue
            _, moved = apply_generator(gen, params, State(*pt))
            rep.record((moved.f, moved.g) in image, generator=str(gen), point=k + 1)
    return rep


def check_r_action(params: ParamsE8, s: State) -> Report:
    rep = Report("weyl_r_action")
    v = params.q * params.h2 / params.h1
    new, moved = apply_word(R_WORD, params, s)
    fbar = evolve(params, s)[1].f
    ok = (new.h1 == v * params.h2 and new.h2 == params.h2
          and all(a == params.h2 / b for a, b in zip(new.u, params.u))
          and moved.f == fbar * v and moved.g == s.g)
    rep.record(ok)
    return rep


def check_translation(params: ParamsE8, s: State) -> Report:
    """T1 = crcr matches the evolution up to the rescaling by v = q h2 / h1."""
    rep = Report("weyl_translation")
    q = params.q
    v = q * params.h2 / params.h1
    new, moved = apply_word(T1_WORD, params, s)
    p2, s2 = evolve(params, s)
    checks = {
        "h1": new.h1 == params.h1 / q * v * v,
        "h2": new.h2 == q * params.h2 * v * v,
        "u": all(a == b * v for a, b in zip(new.u, params.u)),
        "f": moved.f == s2.f * v,
        "g": moved.g == s2.g * v,
        "q": new.q == q,
    }
    rep.record(all(checks.values()), failed=[k for k, ok in checks.items() if not ok])
    rep.control(moved.g - (s2.g + 1) * v, "gbar+1")
    rep.control(moved.f - s2.f, "no rescaling")
    return rep
