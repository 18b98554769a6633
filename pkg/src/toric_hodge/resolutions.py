"""Terms of the Eagon-Northcott complex and the Koszul-type resolution of Omega^p.

Only terms, ranks and Euler characteristics are produced; differentials
are never built. Term ``j`` of the toric resolution is

    C(d-n+j-1, j) copies of  (+)_{|I| = n-p-j}  omega_X(sum_{i in I} D_i),

where ``I`` runs over subsets of the rays in lexicographic order and the
outer multiplicity is the rank of ``S^j F^dual`` for the trivial bundle
``F`` of rank ``d - n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .cohomology import euler_characteristic, hodge_diagonal
from .divisors import (DivisorClass, TDivisor, canonical_divisor, class_of,
                       picard_group, representative)
from .errors import ParameterError
from .fan import Fan, require_smooth_complete


@dataclass(frozen=True)
class ENTerm:
    position: int
    wedge_degree: int  # exterior power of E
    sym_degree: int  # symmetric power of F^dual
    top_wedge: int  # (wedge^f F)^dual
    rank: int


@dataclass(frozen=True)
class ENTermTable:
    e: int
    f: int
    p: int
    terms: tuple[ENTerm, ...]

    @property
    def alternating_rank(self) -> int:
        return sum((-1) ** t.position * t.rank for t in self.terms)


def en_terms(e: int, f: int, p: int) -> ENTermTable:
    """Terms to the left of ``Omega^p`` in the p-th Eagon-Northcott complex of ``E -> F``."""
    if not f >= 1 or not e > f:
        raise ParameterError(f"need e > f >= 1, got e={e}, f={f}")
    if not 0 <= p <= e - f:
        raise ParameterError(f"need 0 <= p <= e - f, got p={p}")
    terms = tuple(ENTerm(j, p + f + j, j, f, comb(e, p + f + j) * comb(f - 1 + j, j))
                  for j in range(e - f - p + 1))
    return ENTermTable(e, f, p, terms)


@dataclass(frozen=True)
class KoszulTerm:
    position: int
    multiplicity: int
    subsets: tuple[tuple[int, ...], ...]
    summands: tuple[TDivisor, ...]


@dataclass(frozen=True)
class ResolutionTerms:
    n: int
    p: int
    d: int
    terms: tuple[KoszulTerm, ...]

    def to_json(self, fan: Fan) -> dict:
        return {
            "n": self.n, "p": self.p, "d": self.d,
            "ranks": [t.multiplicity * len(t.summands) for t in self.terms],
            "terms": [{
                "j": t.position,
                "multiplicity": t.multiplicity,
                "subsets": [list(s) for s in t.subsets],
                "classes": [class_of(fan, D).to_json() for D in t.summands],
            } for t in self.terms],
        }


def koszul_omega_terms(fan: Fan, p: int) -> ResolutionTerms:
    require_smooth_complete(fan)
    n, d = fan.dim, fan.n_rays
    if not 0 <= p <= n:
        raise ParameterError(f"need 0 <= p <= {n}, got p={p}")
    K = canonical_divisor(fan)
    terms = []
    for j in range(n - p + 1):
        subsets = tuple(combinations(range(d), n - p - j))
        summands = tuple(K + TDivisor(tuple(int(i in s) for i in range(d))) for s in subsets)
        terms.append(KoszulTerm(j, comb(d - n + j - 1, j), subsets, summands))
    return ResolutionTerms(n, p, d, tuple(terms))


def rank_check(terms: ResolutionTerms, n: int, p: int) -> bool:
    """Alternating rank of the resolution equals ``rank Omega^p = C(n, p)``."""
    total = sum((-1) ** t.position * t.multiplicity * len(t.summands) for t in terms.terms)
    return total == comb(n, p)


def bott_dims(n: int, p: int, t: int) -> tuple[int, ...]:
    """``h^q(P^n, Omega^p(t))`` for q = 0..n by Bott's formula."""
    if not 0 <= p <= n:
        raise ParameterError("need 0 <= p <= n")
    dims = [0] * (n + 1)
    if t == 0:
        dims[p] = 1
    if t > p:
        dims[0] = comb(t + n - p, t) * comb(t - 1, p)
    if t < p - n:
        dims[n] = comb(-t + p, -t) * comb(-t - 1, n - p)
    return tuple(dims)


@dataclass(frozen=True)
class EulerReport:
    fan: str
    p: int
    twist: tuple
    oracle: str
    term_chis: tuple[int, ...]  # chi of the whole term j, multiplicity included
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"fan": self.fan, "p": self.p, "twist": list(self.twist), "oracle": self.oracle,
                "term_chis": list(self.term_chis), "lhs": self.lhs, "rhs": self.rhs,
                "passed": self.passed}


def _is_projective_space(fan: Fan) -> bool:
    return fan.n_rays == fan.dim + 1


def euler_check(fan: Fan, p: int, twist: DivisorClass | None = None,
                oracle: str = "hodge_diagonal") -> EulerReport:
    """Compare ``sum_j (-1)^j chi(T_j (x) twist)`` with an independent value of ``chi(Omega^p (x) twist)``.

    ``hodge_diagonal`` needs a zero twist; ``Pn_bott`` needs the fan of P^n.
    """
    pres = picard_group(fan)
    if twist is None:
        twist = DivisorClass((0,) * pres.rank)
    if not twist.is_integral():
        raise ParameterError("twist must be integral")
    resolution = koszul_omega_terms(fan, p)
    if oracle == "hodge_diagonal":
        if not twist.is_zero():
            raise ParameterError("the hodge_diagonal oracle only covers the untwisted case")
        rhs = (-1) ** p * hodge_diagonal(fan)[p]
    elif oracle == "Pn_bott":
        if not _is_projective_space(fan):
            raise ParameterError("the Pn_bott oracle needs the fan of a projective space")
        dims = bott_dims(fan.dim, p, int(twist.coords[0]))
        rhs = sum((-1) ** q * h for q, h in enumerate(dims))
    else:
        raise ParameterError(f"unknown oracle {oracle!r}")
    shift = representative(fan, twist)
    term_chis = []
    for term in resolution.terms:
        chi = sum(euler_characteristic(fan, D + shift) for D in term.summands)
        term_chis.append(term.multiplicity * chi)
    lhs = sum((-1) ** j * c for j, c in enumerate(term_chis))
    return EulerReport(fan.label, p, twist.to_json(), oracle, tuple(term_chis), lhs, rhs)
