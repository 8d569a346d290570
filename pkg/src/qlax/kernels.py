"""Kernel backend selection.

The compiled module is used when it was built and ``QLAX_PURE`` is unset;
otherwise the pure-Python twin is used.  Both return identical values.
"""
import os

BACKEND = "python"
if not os.environ.get("QLAX_PURE"):
    try:
        from qlax._kernels import (bideg_eval, bideg_interp, dot, esym, horner,
                                   lagrange_matrix, prod_sub)
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from qlax._kernels_py import (bideg_eval, bideg_interp, dot, esym, horner,  # noqa: F401
                                  lagrange_matrix, prod_sub)

__all__ = ["BACKEND", "bideg_eval", "bideg_interp", "dot", "esym", "horner",
           "lagrange_matrix", "prod_sub"]
