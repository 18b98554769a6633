"""Pure-Python versions of the compiled kernels (same signatures, same results)."""

from itertools import product


def count_chamber(rays, coeffs, mask, lo, hi):
    """Count integer m in the box ``lo <= m <= hi`` whose negative set is ``mask``.

    The negative set of m is ``{i : <m, rays[i]> < -coeffs[i]}``, encoded
    as a bitmask over ray indices.
    """
    if any(a > b for a, b in zip(lo, hi)):
        return 0
    rays = [tuple(r) for r in rays]
    bits = [(mask >> i) & 1 for i in range(len(rays))]
    neg = [-c for c in coeffs]
    count = 0
    for m in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        for u, t, bit in zip(rays, neg, bits):
            v = 0
            for x, y in zip(m, u):
                v += x * y
            if (v < t) != bit:
                break
        else:
            count += 1
    return count
