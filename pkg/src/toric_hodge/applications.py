"""Conditions imposed by isolated singular points, and jet separation.

Given a reduced hypersurface D with isolated singular points of
multiplicity >= m, the points impose independent conditions on (resp. the
bundle separates (j-1)-jets along them for)

    O_X((k + 1) D - sum_i D_i) (x) L

whenever L satisfies P_k, with ``k = floor(n/m)`` (resp. ``k = k_mj``).
Only the numerical side is modelled: the value of k, the resulting class
and the P_k status of L.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .divisors import (DivisorClass, TDivisor, as_class, boundary_divisor, class_of,
                       representative)
from .errors import BranchError, ParameterError
from .fan import Fan
from .vanishing import PkReport, QDivisorData, satisfies_pk


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def k_floor(n: int, m: int) -> int:
    if m < 1:
        raise ParameterError("multiplicity must be >= 1")
    return n // m


def k_mj(n: int, m: int, j: int) -> int:
    """Hodge-ideal level needed to separate (j-1)-jets at points of multiplicity m."""
    if m < 3:
        raise ParameterError("k_mj is defined for m >= 3")
    if j < 1:
        raise ParameterError("jet order must be >= 1")
    if j <= m - 1:
        return _ceil_div(j + n - m, m)
    return _ceil_div(j + n - m, m - 2)


@dataclass(frozen=True)
class Containment:
    exponent: int
    branch: str  # "first" | "second"


def mult_containment(n: int, m: int, k: int) -> Containment:
    """Exponent e with ``I_k(D) <= m_x^e`` at an isolated point of multiplicity m.

    First branch ``n/(k+1) < m < n/k``: ``(k+1)m - n``. Second branch
    ``m >= n/k``: ``max(m - 1, (k+1)(m-2) - n - 2)``, kept verbatim.
    """
    if k < 0 or n < 1:
        raise ParameterError("need n >= 1 and k >= 0")
    lower = Fraction(n, k + 1)
    upper = None if k == 0 else Fraction(n, k)
    if lower < m and (upper is None or m < upper):
        return Containment((k + 1) * m - n, "first")
    if upper is not None and m >= upper:
        return Containment(max(m - 1, (k + 1) * (m - 2) - n - 2), "second")
    raise BranchError(f"no containment branch for n={n}, m={m}, k={k}")


@dataclass(frozen=True)
class SystemResult:
    kind: str
    n: int
    m: int
    j: int | None
    k: int
    system_class: DivisorClass
    pk: PkReport
    comparisons: tuple[str, ...] = field(default=())

    @property
    def precondition_met(self) -> bool:
        return self.pk.holds

    def to_json(self) -> dict:
        return {
            "kind": self.kind, "n": self.n, "m": self.m, "j": self.j, "k": self.k,
            "class": self.system_class.to_json(),
            "precondition_met": self.precondition_met,
            "pk": self.pk.to_json(),
            "comparisons": list(self.comparisons),
        }


def _system(fan: Fan, D, k: int, L) -> tuple[DivisorClass, PkReport]:
    D_class = as_class(fan, D)
    L = as_class(fan, L)
    if isinstance(D, TDivisor) and not D.is_reduced():
        raise ParameterError("D must be reduced (pass a class for a general member)")
    qd = QDivisorData(D if isinstance(D, TDivisor) else representative(fan, D_class), 1,
                      D_class, general_member=not isinstance(D, TDivisor))
    pk = satisfies_pk(fan, qd, L, k)
    cls = D_class * (k + 1) - class_of(fan, boundary_divisor(fan)) + L
    return cls, pk


def _comparisons(fan: Fan, D_class: DivisorClass, m: int) -> tuple[str, ...]:
    if fan.family == "P" and fan.params == (3,) and m == 2:
        d = D_class.coords[0]
        return (f"Severi-type bound on P^3: isolated singular points of a degree-{d} surface "
                f"impose independent conditions on hypersurfaces of degree >= {2 * d - 5}",)
    return ()


def independent_conditions_system(fan: Fan, D: TDivisor | DivisorClass, m: int,
                                  L: DivisorClass | TDivisor) -> SystemResult:
    """Class of ``(floor(n/m)+1) D - sum D_i + L`` and the P_k status of L.

    A TDivisor must be reduced; a DivisorClass stands for a general member.
    """
    n = fan.dim
    k = k_floor(n, m)
    cls, pk = _system(fan, D, k, L)
    return SystemResult("conditions", n, m, None, k, cls, pk,
                        _comparisons(fan, as_class(fan, D), m))


def jet_separation_system(fan: Fan, D: TDivisor | DivisorClass, m: int, j: int,
                          L: DivisorClass | TDivisor) -> SystemResult:
    n = fan.dim
    k = k_mj(n, m, j)
    cls, pk = _system(fan, D, k, L)
    return SystemResult("jets", n, m, j, k, cls, pk)
