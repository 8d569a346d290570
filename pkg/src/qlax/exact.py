"""Exact scalar substrate: rationals, reproducible sampling, bidegree curves.

All quantities in the library are :class:`fractions.Fraction` values.  Identity
checks evaluate both sides at sampled rational points and compare for exact
equality, so there is no tolerance anywhere.
"""
from __future__ import annotations

import hashlib
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from qlax import kernels

Rational = Fraction

DEFAULT_BOUND = 1000


class QlaxError(Exception):
    """Base class for library errors."""


class ZeroDenominator(QlaxError, ZeroDivisionError):
    pass


class DegenerateNodes(QlaxError, ValueError):
    pass


class NonGeneric(QlaxError, ArithmeticError):
    """A formula hit a vanishing denominator or a coordinate went to infinity.

    ``where`` names the offending factor so reports can say what degenerated.
    """

    def __init__(self, where: str):
        super().__init__(where)
        self.where = where


class DegreeMismatch(QlaxError):
    pass


def rat(num: int, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDenominator(f"{num}/0")
    return Fraction(num, den)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; also accepts ints and Fractions."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = text.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return rat(int(p), int(q))
    return Fraction(int(s))


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def bitsize(x: Fraction) -> int:
    return max(abs(x.numerator).bit_length(), x.denominator.bit_length())


def sampling_bound() -> int:
    """Sampling bound, overridable through ``QLAX_BOUND``."""
    raw = os.environ.get("QLAX_BOUND")
    if not raw:
        return DEFAULT_BOUND
    bound = int(raw)
    if bound < 2:
        raise ValueError("QLAX_BOUND must be >= 2")
    return bound


class Rng:
    """Seeded sample stream.  Same seed, same stream, on every platform."""

    def __init__(self, seed: int):
        self.seed = seed & 0xFFFFFFFFFFFFFFFF
        self._random = random.Random(self.seed)
        self.counter = 0

    def randint(self, lo: int, hi: int) -> int:
        self.counter += 1
        return self._random.randint(lo, hi)

    def child(self, label: str, index: int = 0) -> "Rng":
        return Rng(split_seed(self.seed, label, index))


def split_seed(seed: int, label: str, index: int = 0) -> int:
    h = hashlib.blake2b(f"{seed}:{label}:{index}".encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big")


def sample_rational(rng: Rng, bound: int | None = None) -> Fraction:
    """Nonzero p/r with p, r uniform in [1, bound] and a uniform sign."""
    if bound is None:
        bound = sampling_bound()
    if bound < 2:
        raise ValueError("bound must be >= 2")
    p = rng.randint(1, bound)
    r = rng.randint(1, bound)
    sign = rng.randint(0, 1)
    return Fraction(-p if sign else p, r)


def sample_distinct(rng: Rng, n: int, bound: int | None = None,
                    avoid: Sequence[Fraction] = ()) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < n:
        x = sample_rational(rng, bound)
        if x not in out and x not in avoid:
            out.append(x)
    return out


def solve_linear(fn: Callable[[Fraction], Fraction], where: str) -> Fraction:
    """Root of ``fn``, which must be affine in its argument.

    Raises NonGeneric when the linear coefficient vanishes (root at infinity,
    or ``fn`` identically zero at a base point).
    """
    c0 = fn(Fraction(0))
    c1 = fn(Fraction(1)) - c0
    if c1 == 0:
        raise NonGeneric(where)
    return -c0 / c1


@dataclass(frozen=True)
class CurveCoeffs32:
    """F(f, g) = sum c[i][j] f**i g**j with i <= 3, j <= 2."""

    coefficients: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        c = self.coefficients
        if len(c) != 4 or any(len(row) != 3 for row in c):
            raise ValueError("CurveCoeffs32 needs a 4x3 coefficient grid")

    @classmethod
    def from_rows(cls, rows) -> "CurveCoeffs32":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    def __call__(self, f: Fraction, g: Fraction) -> Fraction:
        return eval_curve(self, f, g)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.coefficients for x in row)


def eval_curve(curve: CurveCoeffs32, f: Fraction, g: Fraction) -> Fraction:
    return kernels.bideg_eval(curve.coefficients, f, g)


def interpolate_bidegree32(f_nodes: Sequence[Fraction], g_nodes: Sequence[Fraction],
                           values) -> CurveCoeffs32:
    if len(f_nodes) != 4 or len(g_nodes) != 3:
        raise ValueError("need 4 f-nodes and 3 g-nodes")
    if len(set(f_nodes)) != 4 or len(set(g_nodes)) != 3:
        raise DegenerateNodes("interpolation nodes must be pairwise distinct")
    grid = kernels.bideg_interp(list(f_nodes), list(g_nodes), [list(r) for r in values])
    return CurveCoeffs32.from_rows(grid)


def fit_curve32(fn: Callable[[Fraction, Fraction], Fraction], rng: Rng,
                extra: int = 3, attempts: int = 20) -> CurveCoeffs32:
    """Interpolate ``fn`` on a random 4x3 grid and certify at ``extra``
    off-grid points that it really is of bidegree (3, 2).

    Grid points where ``fn`` is undefined are resampled.  Raises
    DegreeMismatch if an extra point disagrees.
    """
    for _ in range(attempts):
        try:
            f_nodes = sample_distinct(rng, 4)
            g_nodes = sample_distinct(rng, 3)
            values = [[fn(f, g) for g in g_nodes] for f in f_nodes]
            curve = interpolate_bidegree32(f_nodes, g_nodes, values)
            checked = 0
            while checked < extra:
                f, g = sample_rational(rng), sample_rational(rng)
                if f in f_nodes or g in g_nodes:
                    continue
                if eval_curve(curve, f, g) != fn(f, g):
                    raise DegreeMismatch(f"not of bidegree (3,2): disagreement at ({f}, {g})")
                checked += 1
            return curve
        except (NonGeneric, ZeroDivisionError):
            continue
    raise NonGeneric("could not find a generic interpolation grid")
