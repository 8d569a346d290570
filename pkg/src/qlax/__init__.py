"""Exact-arithmetic verification of the E8 q-Painleve equation, its Lax
pair, the affine Weyl group action and the E7, E6, D5 degenerations."""
from qlax.core import ParamsE8, State, evolve, evolve_inverse
from qlax.degen import ParamsDeg, deg_evolve, deg_evolve_inverse
from qlax.exact import NonGeneric, Rng
from qlax.kernels import BACKEND
from qlax.report import Report

__version__ = "0.1.0"

__all__ = ["BACKEND", "NonGeneric", "ParamsDeg", "ParamsE8", "Report", "Rng", "State",
           "deg_evolve", "deg_evolve_inverse", "evolve", "evolve_inverse", "__version__"]
