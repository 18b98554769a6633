"""Property P_k(D), the twisted canonical bundle of the vanishing theorem, and its check.

``L`` satisfies P_k(D) when ``L + D_red - D`` and every
``L + D_t1 + ... + D_tp + D_red - D`` (``1 <= p <= k``, indices may repeat)
are ample; when D and all D_i are ample, ``L ~_Q D - D_red`` is allowed too.
For such L, ``H^i(omega_X((k+1) D_red) (x) L (x) I_k(D)) = 0`` for ``i > 0``.
The check here runs only where ``I_k(D)`` is known to be trivial.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb, lcm

from .cohomology import CohomologyTable, cohomology_dims
from .divisors import (DivisorClass, TDivisor, as_class, canonical_divisor,
                       class_of, reduce, representative)
from .errors import ContractError, ResourceError
from .fan import Fan, require_smooth_complete
from .positivity import is_ample, nef_rays

DEFAULT_BUDGET = 10 ** 6
BUDGET_ENV = "TORIC_HODGE_PK_BUDGET"

SMOOTH_D = "smooth_D"
SNC_K0 = "snc_k0"

VERIFIED = "verified"
PRECONDITION_FAILED = "precondition_failed"
THEOREM_VIOLATION = "THEOREM-VIOLATION"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class QDivisorData:
    """``D = H / ell`` with ``H`` a section of ``M^ell``.

    With ``general_member`` the divisor stands for a general (reduced,
    irreducible) member of the linear system of ``D``, which need not be
    torus-invariant; only its class matters and ``D_red = D``.
    """

    D: TDivisor
    ell: int
    M_class: DivisorClass
    general_member: bool = False

    @classmethod
    def from_divisor(cls, fan: Fan, D: TDivisor, general_member: bool = False) -> "QDivisorData":
        ell = lcm(*(a.denominator for a in D.coeffs)) if len(D) else 1
        qd = cls(D, ell, class_of(fan, D), general_member)
        qd.validate(fan)
        return qd

    @classmethod
    def general(cls, fan: Fan, cls_: DivisorClass) -> "QDivisorData":
        """A general member of an integral class."""
        return cls.from_divisor(fan, representative(fan, cls_), general_member=True)

    def validate(self, fan: Fan) -> None:
        if len(self.D) != fan.n_rays:
            raise ContractError("divisor length does not match the fan")
        if self.ell < 1:
            raise ContractError("ell must be a positive integer")
        H = self.D * self.ell
        if not self.D.is_effective() and not self.general_member:
            raise ContractError("D must be effective")
        if not H.is_integral():
            raise ContractError("ell * D must be integral")
        if not self.M_class.is_integral():
            raise ContractError("M must be an integral class")
        if class_of(fan, H) != self.M_class * self.ell:
            raise ContractError("class of ell * D must equal ell * M")
        if self.general_member and self.ell != 1:
            raise ContractError("a general member must be an integral divisor")

    def reduced(self, fan: Fan) -> TDivisor:
        return self.D if self.general_member else reduce(self.D)

    def is_reduced(self) -> bool:
        return self.general_member or self.D.is_reduced()


@dataclass(frozen=True)
class PkReport:
    holds: bool
    checked_conditions: int
    first_failure: tuple[int, ...] | None = None
    failing_class: DivisorClass | None = None
    used_special_case: bool = False
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "checked_conditions": self.checked_conditions,
            "first_failure": None if self.first_failure is None else list(self.first_failure),
            "failing_class": None if self.failing_class is None else self.failing_class.to_json(),
            "used_special_case": self.used_special_case,
            "notes": list(self.notes),
        }


def _boundary_notes(fan: Fan, qd: QDivisorData, L: DivisorClass, k: int) -> list[str]:
    # On F_r the quick bound a >= k*r is one short of strict ampleness of L + k E'.
    if fan.family != "F" or k < 1 or not qd.is_reduced():
        return []
    r = fan.params[0]
    a, b = L.coords
    if a == k * r and b >= 1:
        return [f"boundary input on F_{r}: L = {a}F + {b}E meets a >= k*r = {k * r}, "
                f"but L + {k}E' = {a - k * r}F + {b + k}E is not ample; ampleness needs "
                f"a >= k*r + 1"]
    return []


def satisfies_pk(fan: Fan, qd: QDivisorData, L: DivisorClass | TDivisor, k: int,
                 budget: int | None = None, full_enumeration: bool = False) -> PkReport:
    """Decide P_k(D) for ``L``.

    Multisets are enumerated only over non-nef rays, since adding a nef
    divisor to an ample one stays ample; ``full_enumeration`` disables that
    shortcut (used by tests to confirm it).
    """
    require_smooth_complete(fan)
    if k < 0:
        raise ContractError("k must be nonnegative")
    qd.validate(fan)
    L = as_class(fan, L)
    d = fan.n_rays
    budget = default_budget() if budget is None else budget
    base = representative(fan, L) + qd.reduced(fan) - qd.D

    nef = nef_rays(fan)
    pool = list(range(d)) if full_enumeration else [i for i in range(d) if not nef[i]]
    total = comb(len(pool) + k, k)
    if total > budget:
        raise ResourceError(f"P_{k} needs {total} ampleness checks, budget is {budget}")

    checked = 0
    failure = None
    for size in range(k + 1):
        for mu in combinations_with_replacement(pool, size):
            checked += 1
            shifted = base + TDivisor(tuple(mu.count(i) for i in range(d)))
            if not is_ample(fan, shifted):
                if failure is None or mu < failure[0]:
                    failure = (mu, class_of(fan, shifted))
    notes = _boundary_notes(fan, qd, L, k)
    if failure is None:
        return PkReport(True, checked, notes=tuple(notes))

    # special allowance: D and every D_i ample, L ~_Q D - D_red
    D_class = class_of(fan, qd.D)
    if (is_ample(fan, qd.D) and all(is_ample(fan, TDivisor.prime(d, i)) for i in range(d))
            and L == D_class - class_of(fan, qd.reduced(fan))):
        return PkReport(True, checked, used_special_case=True, notes=tuple(notes))
    return PkReport(False, checked, failure[0], failure[1], notes=tuple(notes))


def theorem_a_class(fan: Fan, qd: QDivisorData, k: int, L: DivisorClass | TDivisor) -> DivisorClass:
    """Class of ``omega_X((k+1) D_red) (x) L``."""
    return class_of(fan, canonical_divisor(fan) + qd.reduced(fan) * (k + 1)) + as_class(fan, L)


@dataclass(frozen=True)
class VanishingReport:
    status: str
    triviality: str
    k: int
    pk: PkReport
    theorem_class: DivisorClass
    table: CohomologyTable | None
    contract: str

    @property
    def violation(self) -> bool:
        return self.status == THEOREM_VIOLATION

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "triviality": self.triviality,
            "k": self.k,
            "pk": self.pk.to_json(),
            "class": self.theorem_class.to_json(),
            "dims": None if self.table is None else list(self.table.dims),
            "contract": self.contract,
        }


def _triviality_contract(fan: Fan, qd: QDivisorData, k: int, triviality: str) -> str:
    if triviality == SMOOTH_D:
        if qd.ell != 1 or not qd.D.is_integral():
            raise ContractError("smooth_D needs an integral divisor")
        if qd.general_member:
            if fan.family not in ("P", "PxP", "F"):
                raise ContractError("general members are accepted only on P^n, products and F_r")
            if not is_ample(fan, qd.D):
                raise ContractError("general member needs a very ample class")
            return ("I_k(D) = O_X: D is a general member of a very ample class, "
                    "smooth by Bertini (assumed, not checked)")
        if sum(qd.D.coeffs) != 1 or not qd.D.is_reduced():
            raise ContractError("smooth_D needs a single prime toric divisor or a general member")
        return "I_k(D) = O_X: D is a prime toric divisor, hence smooth"
    if triviality == SNC_K0:
        if k != 0:
            raise ContractError("snc_k0 applies only to k = 0")
        if qd.general_member or any(a > 1 for a in qd.D.coeffs):
            raise ContractError("snc_k0 needs a torus-invariant divisor with coefficients <= 1")
        return ("I_0(D) = J((1-eps)D) = O_X: torus-invariant D is simple normal crossings "
                "with coefficients <= 1")
    raise ContractError(f"unknown triviality mode {triviality!r}")


def verify_theorem_a_trivial_ideal(fan: Fan, qd: QDivisorData, k: int,
                                   L: DivisorClass | TDivisor, triviality: str,
                                   budget: int | None = None) -> VanishingReport:
    """Check ``h^i(K + (k+1) D_red + L) = 0`` for ``i > 0`` when I_k(D) is trivial."""
    require_smooth_complete(fan)
    qd.validate(fan)
    contract = _triviality_contract(fan, qd, k, triviality)
    L = as_class(fan, L)
    if not L.is_integral():
        raise ContractError("L must be an integral class")
    pk = satisfies_pk(fan, qd, L, k, budget=budget)
    target = theorem_a_class(fan, qd, k, L)
    if not pk.holds:
        return VanishingReport(PRECONDITION_FAILED, triviality, k, pk, target, None, contract)
    table = cohomology_dims(fan, target)
    status = VERIFIED if table.higher_vanish() else THEOREM_VIOLATION
    return VanishingReport(status, triviality, k, pk, target, table, contract)
