"""Time the compiled and pure-Python chamber counters on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

from toric_hodge import _kernels
from toric_hodge.cohomology import cohomology_dims
from toric_hodge.divisors import DivisorClass
from toric_hodge.fan import hirzebruch, projective_product, projective_space

CASES = [
    ("P3  O(25) h0 box", projective_space(3).rays, [25, 0, 0, 0], 0, [-25, -25, -25], [25, 25, 25]),
    ("P2xP1 (18,18) box", projective_product(2, 1).rays, [18, 0, 0, 18, 0], 0,
     [-18, -18, -18], [18, 18, 18]),
    ("F3 (-40,-40) H^2 box", hirzebruch(3).rays, [-40, -40, 0, 0], 0b1111,
     [-60, -60], [60, 60]),
]


def bench_raw(repeat):
    print(f"{'case':24s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, rays, coeffs, mask, lo, hi in CASES:
        args = (rays, coeffs, mask, lo, hi)
        py = min(timeit.repeat(lambda: _kernels.python_backend.count_chamber(*args),
                               number=1, repeat=repeat))
        if _kernels.compiled_backend is None:
            print(f"{name:24s} {py:10.4f} {'n/a':>10s}")
            continue
        assert _kernels.compiled_backend.count_chamber(*args) == \
            _kernels.python_backend.count_chamber(*args)
        cy = min(timeit.repeat(lambda: _kernels.compiled_backend.count_chamber(*args),
                               number=1, repeat=repeat))
        print(f"{name:24s} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")


def bench_end_to_end(repeat):
    fan = projective_space(3)
    D = DivisorClass((20,))
    work = lambda: (cohomology_dims(fan, D), cohomology_dims(fan, DivisorClass((-24,))))
    work()  # warm the per-fan caches
    for label, module in (("python", _kernels.python_backend), ("cython", _kernels.compiled_backend)):
        if module is None:
            continue
        saved = _kernels.count_chamber
        _kernels.count_chamber = module.count_chamber
        try:
            t = min(timeit.repeat(work, number=1, repeat=repeat))
        finally:
            _kernels.count_chamber = saved
        print(f"cohomology_dims P3 O(20), O(-24) [{label}]: {t:.4f}s")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"active backend: {_kernels.BACKEND}")
    bench_raw(args.repeat)
    bench_end_to_end(args.repeat)
