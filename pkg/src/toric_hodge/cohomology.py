"""Line-bundle cohomology on smooth complete toric varieties.

For a character ``m`` let ``Neg(m) = {i : <m, u_i> < -a_i}``. The
``m``-graded piece of ``H^p(X, O(D))`` has dimension equal to the
``(p-1)``-st reduced Betti number of the full subcomplex of the fan on the
vertex set ``Neg(m)`` (with the empty complex contributing in degree -1).
Characters with the same negative set form a sign chamber, so

    h^p(D) = sum over chambers S of  betti_{p-1}(S) * #(lattice points of S).

Reduced Betti numbers depend only on the fan and are cached per fan.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import _kernels
from .divisors import DivisorClass, TDivisor, as_divisor, canonical_divisor
from .errors import ConsistencyError, ContractError, ResourceError
from .exact import rank
from .fan import Fan, f_vector, require_smooth_complete
from .polyhedra import ChamberGeometry

MAX_RAYS = 16


@dataclass(frozen=True)
class CohomologyTable:
    dims: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * h for i, h in enumerate(self.dims))

    def higher_vanish(self) -> bool:
        return all(h == 0 for h in self.dims[1:])

    def __getitem__(self, i):
        return self.dims[i]


@dataclass(frozen=True)
class SignChamber:
    """Characters whose negative set is ``neg_set`` (a ray bitmask)."""

    neg_set: int
    betti: tuple[int, ...]  # reduced Betti numbers in degrees -1 .. n-1

    def inequalities(self, fan: Fan, D: TDivisor) -> list[tuple[tuple[int, ...], int]]:
        """Rows ``(r, b)`` meaning ``r.m <= b``; strict bounds already made integral."""
        rows = []
        for i, (u, a) in enumerate(zip(fan.rays, _integral_coeffs(fan, D))):
            if (self.neg_set >> i) & 1:
                rows.append((tuple(u), -a - 1))
            else:
                rows.append((tuple(-x for x in u), a))
        return rows


def _boundary_rank(faces_hi, faces_lo) -> int:
    """Rank of the simplicial boundary map between two face lists (bitmasks)."""
    if not faces_hi or not faces_lo:
        return 0
    index = {f: k for k, f in enumerate(faces_lo)}
    rows = []
    for f in faces_hi:
        row = [0] * len(faces_lo)
        sign = 1
        bits = f
        while bits:
            low = bits & -bits
            row[index[f ^ low]] = sign
            sign = -sign
            bits ^= low
        rows.append(row)
    return rank(rows)


@lru_cache(maxsize=None)
def reduced_betti(fan: Fan, subset: int) -> tuple[int, ...]:
    """Reduced Betti numbers (degrees -1..n-1) of the full subcomplex on ``subset``."""
    groups = [[f for f in group if f & ~subset == 0] for group in fan.face_masks]
    # groups[k] are (k-1)-simplices; groups[0] is the empty face
    ranks = [_boundary_rank(groups[k], groups[k - 1]) for k in range(1, len(groups))]
    ranks = [0] + ranks + [0]  # ranks[k] = rank of d: C_{k-1} -> C_{k-2}
    return tuple(len(groups[k]) - ranks[k] - ranks[k + 1] for k in range(len(groups)))


@lru_cache(maxsize=None)
def nontrivial_chambers(fan: Fan) -> tuple[SignChamber, ...]:
    """All ray subsets whose full subcomplex has some nonzero reduced Betti number."""
    if fan.n_rays > MAX_RAYS:
        raise ResourceError(f"cohomology supports at most {MAX_RAYS} rays, fan has {fan.n_rays}")
    out = []
    for subset in range(1 << fan.n_rays):
        betti = reduced_betti(fan, subset)
        if any(betti):
            out.append(SignChamber(subset, betti))
    return tuple(out)


@lru_cache(maxsize=None)
def _geometry(fan: Fan) -> ChamberGeometry:
    return ChamberGeometry(fan.rays)


def chamber_point_count(fan: Fan, coeffs: tuple[int, ...], neg_set: int) -> int:
    """Number of characters m with ``Neg(m) = neg_set`` for integral coefficients.

    Raises ConsistencyError if that set is nonempty and unbounded.
    """
    geom = _geometry(fan)
    # <m,u> <= -a-1 on neg_set, <m,u> >= -a elsewhere
    thresholds = [(-a - 1) if (neg_set >> i) & 1 else -a for i, a in enumerate(coeffs)]
    box = geom.vertex_box(thresholds, neg_set)
    if box is None:
        return 0
    if not geom.recession_trivial(neg_set):
        raise ConsistencyError(
            f"unbounded nonempty sign chamber {neg_set:#b} with nonzero cohomology")
    lo, hi = box
    return _kernels.count_chamber(fan.rays, list(coeffs), neg_set, lo, hi)


def _integral_coeffs(fan: Fan, D) -> tuple[int, ...]:
    D = as_divisor(fan, D)
    if len(D) != fan.n_rays:
        raise ContractError("divisor length does not match the fan")
    if not D.is_integral():
        raise ContractError("cohomology needs an integral divisor")
    return tuple(int(a) for a in D.coeffs)


def cohomology_dims(fan: Fan, D: TDivisor | DivisorClass) -> CohomologyTable:
    """``(h^0, ..., h^n)`` of ``O(D)`` for an integral divisor or class."""
    require_smooth_complete(fan)
    coeffs = _integral_coeffs(fan, D)
    n = fan.dim
    dims = [0] * (n + 1)
    for chamber in nontrivial_chambers(fan):
        count = chamber_point_count(fan, coeffs, chamber.neg_set)
        if count:
            for p in range(n + 1):
                dims[p] += chamber.betti[p] * count
    return CohomologyTable(tuple(dims))


def euler_characteristic(fan: Fan, D: TDivisor | DivisorClass) -> int:
    return cohomology_dims(fan, D).euler_characteristic


def hodge_diagonal(fan: Fan) -> tuple[int, ...]:
    """``h^{p,p}`` from the f-vector; equals ``(-1)^p chi(Omega^p)``."""
    require_smooth_complete(fan)
    f = f_vector(fan)
    n = fan.dim
    return tuple(sum((-1) ** (k - p) * comb(k, p) * f[n - k] for k in range(p, n + 1))
                 for p in range(n + 1))


def serre_dual(fan: Fan, D: TDivisor | DivisorClass) -> TDivisor:
    return canonical_divisor(fan) - as_divisor(fan, D)
