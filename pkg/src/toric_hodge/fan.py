"""Simplicial fans of smooth complete toric varieties.

A :class:`Fan` is a list of primitive ray generators in ``Z^n`` and a list
of maximal cones given as sorted tuples of ray indices. The ray order is
the divisor order ``D_0, ..., D_{d-1}`` used by every other module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParameterError, StructuralError
from .exact import gcd_list, int_det, rank, smith_invariants


@dataclass(frozen=True)
class Fan:
    """Immutable simplicial fan, validated on construction.

    ``family``/``params`` record how a standard fan was built; they are
    informational and do not take part in equality or hashing.
    """

    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]
    family: str | None = field(default=None, compare=False)
    params: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        cones = tuple(tuple(int(i) for i in c) for c in self.max_cones)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        self._validate()

    def _validate(self):
        if not self.rays:
            raise StructuralError("fan has no rays")
        n = len(self.rays[0])
        if n < 1 or any(len(r) != n for r in self.rays):
            raise StructuralError("rays must be nonempty and of equal length")
        for r in self.rays:
            if gcd_list(r) != 1:
                raise StructuralError(f"ray {list(r)} is not primitive")
        if len(set(self.rays)) != len(self.rays):
            raise StructuralError("duplicate rays")
        if not self.max_cones:
            raise StructuralError("fan has no cones")
        d = len(self.rays)
        for cone in self.max_cones:
            if not cone:
                raise StructuralError("empty maximal cone")
            if list(cone) != sorted(set(cone)):
                raise StructuralError(f"cone {list(cone)} must be sorted with distinct indices")
            if cone[0] < 0 or cone[-1] >= d:
                raise StructuralError(f"cone {list(cone)} has an index out of range")
            if rank([self.rays[i] for i in cone]) != len(cone):
                raise StructuralError(f"cone {list(cone)} is not simplicial")
        if len(set(self.max_cones)) != len(self.max_cones):
            raise StructuralError("duplicate maximal cones")
        covered = {i for c in self.max_cones for i in c}
        if covered != set(range(d)):
            raise StructuralError("every ray must lie in some cone")

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    def __repr__(self):
        if self.family:
            return f"Fan<{self.label}>"
        return f"Fan(dim={self.dim}, rays={len(self.rays)}, cones={len(self.max_cones)})"

    @property
    def label(self) -> str:
        if self.family is None:
            return "custom"
        return f"{self.family}({','.join(map(str, self.params))})"

    @cached_property
    def faces(self) -> frozenset[tuple[int, ...]]:
        """All cones of the fan (including the origin ``()``) as index tuples."""
        out = set()
        for cone in self.max_cones:
            for k in range(len(cone) + 1):
                out.update(combinations(cone, k))
        return frozenset(out)

    @cached_property
    def face_masks(self) -> tuple[tuple[int, ...], ...]:
        """Faces as bitmasks, grouped by number of rays (index 0 is the origin)."""
        by_size: list[list[int]] = [[] for _ in range(self.dim + 1)]
        for face in self.faces:
            mask = 0
            for i in face:
                mask |= 1 << i
            by_size[len(face)].append(mask)
        return tuple(tuple(sorted(group)) for group in by_size)

    def check_intersections(self) -> None:
        """Raise StructuralError unless every two cones meet in a common face.

        For simplicial cones it suffices that no point of ``cone(s) & cone(t)``
        has a positive coordinate on a ray of ``s`` outside ``t``; that is one
        exact LP feasibility test per pair.
        """
        from .polyhedra import feasible

        n = self.dim
        for s, t in combinations(self.max_cones, 2):
            only_s = [i for i in s if i not in t]
            if not only_s:
                continue
            nv = len(s) + len(t)
            rows, rhs = [], []
            for k in range(n):
                eq = [self.rays[i][k] for i in s] + [-self.rays[i][k] for i in t]
                rows.append(eq)
                rhs.append(0)
                rows.append([-x for x in eq])
                rhs.append(0)
            for v in range(nv):
                rows.append([-int(v == w) for w in range(nv)])
                rhs.append(0)
            rows.append([-int(s[w] in only_s) if w < len(s) else 0 for w in range(nv)])
            rhs.append(-1)
            if feasible(rows, rhs):
                raise StructuralError(f"cones {list(s)} and {list(t)} do not meet in a common face")

    def to_json(self) -> dict:
        return {"dim": self.dim, "rays": [list(r) for r in self.rays],
                "max_cones": [list(c) for c in self.max_cones]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Fan":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            fan = cls(rays=data["rays"], max_cones=data["max_cones"])
        except (KeyError, TypeError) as exc:
            raise StructuralError(f"malformed fan object: {exc}") from exc
        if "dim" in data and int(data["dim"]) != fan.dim:
            raise StructuralError("declared dim does not match ray length")
        return fan


def _sorted_cones(cones: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(c)) for c in cones))


def projective_space(n: int) -> Fan:
    """Rays ``e_1, ..., e_n, -(e_1 + ... + e_n)``; all D_i are hyperplanes."""
    if n < 1:
        raise ParameterError("P^n needs n >= 1")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [tuple(i for i in range(n + 1) if i != skip) for skip in range(n + 1)]
    return Fan(tuple(rays), _sorted_cones(cones), family="P", params=(n,))


def product(a: Fan, b: Fan) -> Fan:
    """Product fan; rays of ``a`` come first, then rays of ``b``."""
    na, nb = a.dim, b.dim
    rays = [tuple(r) + (0,) * nb for r in a.rays] + [(0,) * na + tuple(r) for r in b.rays]
    off = a.n_rays
    cones = [tuple(ca) + tuple(off + i for i in cb) for ca in a.max_cones for cb in b.max_cones]
    return Fan(tuple(rays), _sorted_cones(cones))


def projective_product(n1: int, n2: int) -> Fan:
    """``P^n1 x P^n2``. Divisors 0..n1 are of type (1,0), the rest (0,1)."""
    if n1 < 1 or n2 < 1:
        raise ParameterError("P^n1 x P^n2 needs n1, n2 >= 1")
    f = product(projective_space(n1), projective_space(n2))
    return Fan(f.rays, f.max_cones, family="PxP", params=(n1, n2))


def hirzebruch(r: int) -> Fan:
    """Hirzebruch surface F_r.

    Rays ``(1,0), (0,1), (-1,r), (0,-1)``: D_0 and D_2 are fibres F,
    D_1 is the negative section E' and D_3 is the section E ~ E' + rF.
    """
    if r < 0:
        raise ParameterError("Hirzebruch surface needs r >= 0")
    rays = ((1, 0), (0, 1), (-1, r), (0, -1))
    cones = [(0, 1), (1, 2), (2, 3), (0, 3)]
    return Fan(rays, _sorted_cones(cones), family="F", params=(r,))


def build_standard(family: str, params: Sequence[int]) -> Fan:
    """Build one of ``"Pn"``, ``"PnxPm"``, ``"Hirzebruch"`` from integer params."""
    params = tuple(int(p) for p in params)
    key = family.lower()
    if key in ("pn", "p"):
        if len(params) != 1:
            raise ParameterError("Pn takes one parameter")
        return projective_space(params[0])
    if key in ("pnxpm", "pxp"):
        if len(params) != 2:
            raise ParameterError("PnxPm takes two parameters")
        return projective_product(*params)
    if key in ("hirzebruch", "f"):
        if len(params) != 1:
            raise ParameterError("Hirzebruch takes one parameter")
        return hirzebruch(params[0])
    raise ParameterError(f"unknown fan family {family!r}")


@lru_cache(maxsize=None)
def is_smooth(fan: Fan) -> bool:
    """Every maximal cone is generated by part of a lattice basis."""
    for cone in fan.max_cones:
        gens = [fan.rays[i] for i in cone]
        if len(gens) == fan.dim:
            if abs(int_det(gens)) != 1:
                return False
        elif any(f != 1 for f in smith_invariants(gens)):
            return False
    return True


@lru_cache(maxsize=None)
def is_complete(fan: Fan) -> bool:
    """Pure of full dimension, ridges shared by exactly two cones, connected."""
    n = fan.dim
    if any(len(c) != n for c in fan.max_cones):
        return False
    ridges: dict[tuple[int, ...], list[int]] = {}
    for idx, cone in enumerate(fan.max_cones):
        for ridge in combinations(cone, n - 1):
            ridges.setdefault(ridge, []).append(idx)
    if any(len(owners) != 2 for owners in ridges.values()):
        return False
    adjacency: dict[int, set[int]] = {i: set() for i in range(len(fan.max_cones))}
    for a, b in ridges.values():
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(fan.max_cones)


def f_vector(fan: Fan) -> list[int]:
    """``f[k]`` = number of k-dimensional cones, ``f[0] = 1`` for the origin."""
    return [len(group) for group in fan.face_masks]


def require_smooth_complete(fan: Fan) -> None:
    from .errors import ContractError

    if not is_smooth(fan):
        raise ContractError(f"{fan!r} is not smooth")
    if not is_complete(fan):
        raise ContractError(f"{fan!r} is not complete")
