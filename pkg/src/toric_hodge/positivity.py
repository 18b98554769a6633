"""Support-function data and nef/ample tests for Q-divisors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .divisors import DivisorClass, TDivisor, as_divisor
from .errors import ContractError
from .exact import inverse
from .fan import Fan, is_complete, is_smooth


@dataclass(frozen=True)
class CartierData:
    """One linear functional ``m_sigma`` per maximal cone (same order as ``fan.max_cones``)."""

    cones: tuple[tuple[int, ...], ...]
    functionals: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, cone):
        return self.functionals[self.cones.index(tuple(cone))]


@lru_cache(maxsize=None)
def _cone_inverses(fan: Fan):
    return tuple(inverse([list(fan.rays[i]) for i in cone]) for cone in fan.max_cones)


def cartier_data(fan: Fan, D: TDivisor | DivisorClass) -> CartierData:
    """Solve ``<m_sigma, u_i> = -a_i`` for ``i`` in each maximal cone."""
    if not is_smooth(fan):
        raise ContractError(f"{fan!r} is not smooth")
    D = as_divisor(fan, D)
    out = []
    for cone, inv in zip(fan.max_cones, _cone_inverses(fan)):
        rhs = [-D.coeffs[i] for i in cone]
        # rows of the block are u_i, so m = B^{-1} rhs
        out.append(tuple(sum(inv[k][j] * rhs[j] for j in range(len(cone)))
                         for k in range(fan.dim)))
    return CartierData(fan.max_cones, tuple(out))


def _slacks(fan: Fan, D: TDivisor):
    """Yield ``(cone, ray, <m_sigma,u_ray> + a_ray)`` for rays outside each cone."""
    data = cartier_data(fan, D)
    for cone, m in zip(fan.max_cones, data.functionals):
        inside = set(cone)
        for i, u in enumerate(fan.rays):
            if i not in inside:
                yield cone, i, sum(x * y for x, y in zip(m, u)) + D.coeffs[i]


def _require_complete(fan: Fan):
    if not is_complete(fan):
        raise ContractError(f"{fan!r} is not complete")


def is_nef(fan: Fan, D: TDivisor | DivisorClass) -> bool:
    _require_complete(fan)
    D = as_divisor(fan, D)
    return all(s >= 0 for _, _, s in _slacks(fan, D))


def is_ample(fan: Fan, D: TDivisor | DivisorClass) -> bool:
    """Strict convexity of the support function across all maximal cones."""
    _require_complete(fan)
    D = as_divisor(fan, D)
    return all(s > 0 for _, _, s in _slacks(fan, D))


def nef_rays(fan: Fan) -> tuple[bool, ...]:
    """Which prime toric divisors are nef."""
    d = fan.n_rays
    return tuple(is_nef(fan, TDivisor.prime(d, i)) for i in range(d))
