"""Compare the compiled kernels with the pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N] [--size N]

Inputs are random rationals of moderate height.  Each kernel is timed on
both backends and the results are checked for equality first.  A last
row times one full E8 evolution step with whichever backend ``qlax.kernels``
selected.
"""
import argparse
import timeit
from fractions import Fraction

from qlax import _kernels_py as pure
from qlax.core import evolve
from qlax.exact import NonGeneric, Rng
from qlax.kernels import BACKEND
from qlax.lax import sample_e8_draw

try:
    from qlax import _kernels as compiled
except ImportError:
    compiled = None


def big(rng, digits):
    return Fraction(rng.randint(-10 ** digits, 10 ** digits), rng.randint(1, 10 ** digits))


def cases(rng, size, digits):
    xs = [big(rng, digits) for _ in range(size)]
    ys = [big(rng, digits) for _ in range(size)]
    nodes = [Fraction(k, k + 2) for k in range(4)]
    grid = [[big(rng, digits) for _ in range(3)] for _ in range(4)]
    return {
        "esym": (xs[:8],),
        "prod_sub": (ys[0], xs),
        "horner": (xs, ys[0]),
        "dot": (xs, ys),
        "bideg_eval": (grid, ys[1], ys[2]),
        "lagrange_matrix": (nodes,),
        "bideg_interp": (nodes, nodes[:3], grid),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=2000)
    ap.add_argument("--size", type=int, default=12)
    ap.add_argument("--digits", type=int, default=30)
    args = ap.parse_args()

    rng = Rng(0).child("bench")
    data = cases(rng, args.size, args.digits)
    print(f"selected backend: {BACKEND}")
    print(f"{'kernel':<16}{'python us':>12}{'cython us':>12}{'speedup':>9}")
    for name, call_args in data.items():
        fn_py = getattr(pure, name)
        t_py = timeit.timeit(lambda: fn_py(*call_args), number=args.repeat) / args.repeat * 1e6
        if compiled is None:
            print(f"{name:<16}{t_py:>12.2f}{'n/a':>12}{'':>9}")
            continue
        fn_c = getattr(compiled, name)
        assert fn_c(*call_args) == fn_py(*call_args), name
        t_c = timeit.timeit(lambda: fn_c(*call_args), number=args.repeat) / args.repeat * 1e6
        print(f"{name:<16}{t_py:>12.2f}{t_c:>12.2f}{t_py / t_c:>8.2f}x")

    draw_rng = Rng(1)
    while True:
        try:
            params, s, _ = sample_e8_draw(draw_rng)
            evolve(params, s)
            break
        except NonGeneric:
            continue
    n = max(1, args.repeat // 20)
    t = timeit.timeit(lambda: evolve(params, s), number=n) / n * 1e6
    print(f"{'evolve (E8)':<16}{t:>12.2f} us with {BACKEND} kernels")


if __name__ == "__main__":
    main()
