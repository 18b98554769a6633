"""Torus-invariant Q-divisors and the Picard group.

Picard basis
------------
For a smooth complete fan the ray generators of any maximal cone form a
lattice basis, so every divisor is linearly equivalent to a unique one
supported off that cone. We pivot on the lexicographically smallest maximal
cone ``sigma``: the classes of the rays *not* in ``sigma``, in increasing
index order, are the Picard basis. Eliminating the ``sigma`` coefficients
uses the integer inverse of the unimodular block, so this is a unimodular
(Hermite-type) normal form of the ray matrix with a fixed pivot choice.

With the standard builders this gives the familiar coordinates: ``H`` on
P^n, ``(H_1, H_2)`` on P^a x P^b and ``(F, E)`` on F_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ContractError, ParameterError
from .exact import as_fraction, format_fraction, inverse, smith_invariants
from .fan import Fan, require_smooth_complete


@dataclass(frozen=True)
class TDivisor:
    """``sum_i coeffs[i] * D_i`` with rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, values: Iterable) -> "TDivisor":
        return cls(tuple(values))

    @classmethod
    def zero(cls, d: int) -> "TDivisor":
        return cls((0,) * d)

    @classmethod
    def prime(cls, d: int, i: int) -> "TDivisor":
        return cls(tuple(int(j == i) for j in range(d)))

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: "TDivisor") -> "TDivisor":
        _same_length(self, other)
        return TDivisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TDivisor") -> "TDivisor":
        _same_length(self, other)
        return TDivisor(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TDivisor(tuple(-a for a in self.coeffs))

    def __mul__(self, c) -> "TDivisor":
        c = as_fraction(c)
        return TDivisor(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    def is_effective(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def is_reduced(self) -> bool:
        return all(a in (0, 1) for a in self.coeffs)

    def to_json(self) -> list:
        return [format_fraction(a) for a in self.coeffs]


def _same_length(a: TDivisor, b: TDivisor):
    if len(a) != len(b):
        raise ParameterError("divisors live on fans with different numbers of rays")


@dataclass(frozen=True)
class DivisorClass:
    """Coordinates of a class in Pic(X) (x) Q, in the fan's Picard basis."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_fraction(c) for c in self.coords))

    @classmethod
    def of(cls, values: Iterable) -> "DivisorClass":
        return cls(tuple(values))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self.coords) != len(other.coords):
            raise ParameterError("classes of different Picard rank")
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, c) -> "DivisorClass":
        c = as_fraction(c)
        return DivisorClass(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def to_json(self) -> list:
        return [format_fraction(a) for a in self.coords]


@dataclass(frozen=True)
class PicardPresentation:
    """``Pic(X) = Z^d / image(M)`` with a fixed basis.

    ``projection`` is the ``rank x d`` integer matrix sending a coefficient
    vector to class coordinates; column ``i`` is the class of ``D_i``.
    """

    rank: int
    pivot_cone: tuple[int, ...]
    basis_rays: tuple[int, ...]
    projection: tuple[tuple[int, ...], ...]

    def classes_of_rays(self) -> list[tuple[int, ...]]:
        return [tuple(row[i] for row in self.projection) for i in range(len(self.projection[0]))]


@lru_cache(maxsize=None)
def picard_group(fan: Fan) -> PicardPresentation:
    require_smooth_complete(fan)
    n, d = fan.dim, fan.n_rays
    # A smooth complete fan's rays span N, so the cokernel is free.
    if smith_invariants([list(r) for r in fan.rays]) != [1] * n:
        raise ContractError("ray matrix does not have trivial elementary divisors")
    sigma = min(fan.max_cones)
    basis = tuple(i for i in range(d) if i not in sigma)
    # dual basis m_j of the cone: <m_j, u_sigma[k]> = delta_jk
    block = [list(fan.rays[i]) for i in sigma]  # rows u_sigma[k]
    dual = inverse(block)  # columns are m_j
    projection = [[0] * d for _ in basis]
    for row, t in enumerate(basis):
        projection[row][t] = 1
    for j, s in enumerate(sigma):
        m_j = [dual[k][j] for k in range(n)]
        for row, t in enumerate(basis):
            val = -sum(a * b for a, b in zip(m_j, fan.rays[t]))
            if val.denominator != 1:
                raise ContractError("pivot cone is not unimodular")
            projection[row][s] = int(val)
    return PicardPresentation(len(basis), tuple(sigma), basis,
                              tuple(tuple(r) for r in projection))


def class_of(fan: Fan, D: TDivisor) -> DivisorClass:
    pres = picard_group(fan)
    if len(D) != fan.n_rays:
        raise ParameterError(f"divisor has {len(D)} coefficients, fan has {fan.n_rays} rays")
    return DivisorClass(tuple(sum(p * a for p, a in zip(row, D.coeffs))
                              for row in pres.projection))


def representative(fan: Fan, cls: DivisorClass) -> TDivisor:
    """The divisor supported on the Picard basis rays with the given class."""
    pres = picard_group(fan)
    if len(cls.coords) != pres.rank:
        raise ParameterError(f"class has {len(cls.coords)} coordinates, Picard rank is {pres.rank}")
    coeffs = [Fraction(0)] * fan.n_rays
    for c, i in zip(cls.coords, pres.basis_rays):
        coeffs[i] = c
    return TDivisor(tuple(coeffs))


def as_divisor(fan: Fan, x: TDivisor | DivisorClass) -> TDivisor:
    return representative(fan, x) if isinstance(x, DivisorClass) else x


def as_class(fan: Fan, x: TDivisor | DivisorClass) -> DivisorClass:
    return x if isinstance(x, DivisorClass) else class_of(fan, x)


def principal_divisor(fan: Fan, m: Sequence[int]) -> TDivisor:
    """``div(chi^m) = sum_i <m, u_i> D_i``."""
    if len(m) != fan.dim:
        raise ParameterError("character has the wrong length")
    return TDivisor(tuple(sum(a * b for a, b in zip(m, u)) for u in fan.rays))


def canonical_divisor(fan: Fan) -> TDivisor:
    return TDivisor((-1,) * fan.n_rays)


def boundary_divisor(fan: Fan) -> TDivisor:
    return TDivisor((1,) * fan.n_rays)


def reduce(D: TDivisor) -> TDivisor:
    """Support of an effective divisor, with coefficient 1 on each component."""
    if not D.is_effective():
        raise ContractError("reduce() needs an effective divisor")
    return TDivisor(tuple(int(a > 0) for a in D.coeffs))


def linearly_equivalent(fan: Fan, a: TDivisor | DivisorClass, b: TDivisor | DivisorClass) -> bool:
    """Equality in Pic(X) (x) Q."""
    return as_class(fan, a) == as_class(fan, b)
