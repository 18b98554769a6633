"""Exact polyhedral helpers: a rational simplex method and sign-chamber geometry."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor
from typing import Sequence

from .exact import adjugate, int_det, primitive_kernel_vector


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None


def _pivot(T, z, r, c):
    p = T[r][c]
    T[r] = [x / p for x in T[r]]
    row = T[r]
    for i, other in enumerate(T):
        if i != r and other[c] != 0:
            f = other[c]
            T[i] = [x - f * y for x, y in zip(other, row)]
    if z[c] != 0:
        f = z[c]
        z[:] = [x - f * y for x, y in zip(z, row)]


def _run(T, z, basis, allowed):
    """Minimise with Bland's rule. Returns False if unbounded."""
    while True:
        enter = next((j for j in allowed if z[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return False
        leave = best[1]
        _pivot(T, z, leave, enter)
        basis[leave] = enter


def _standard_form(M, r, cost) -> LPResult:
    """min cost.y  s.t.  M y = r, y >= 0, with r >= 0 (two-phase)."""
    m = len(M)
    N = len(cost)
    T = [[Fraction(x) for x in M[i]] + [Fraction(int(i == k)) for k in range(m)] + [Fraction(r[i])]
         for i in range(m)]
    z = [Fraction(0)] * (N + m + 1)
    for j in range(N):
        z[j] = -sum(T[i][j] for i in range(m))
    z[-1] = -sum(T[i][-1] for i in range(m))
    basis = [N + i for i in range(m)]
    _run(T, z, basis, range(N))
    if z[-1] != 0:
        return LPResult("infeasible")
    # drive remaining artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= N:
            col = next((j for j in range(N) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, z, i, col)
            basis[i] = col
        i += 1
    T = [row[:N] + [row[-1]] for row in T]
    c = [Fraction(x) for x in cost]
    z = c + [Fraction(0)]
    for i, b in enumerate(basis):
        if c[b] != 0:
            z = [x - c[b] * y for x, y in zip(z, T[i])]
    if not _run(T, z, basis, range(N)):
        return LPResult("unbounded")
    y = [Fraction(0)] * N
    for i, b in enumerate(basis):
        y[b] = T[i][-1]
    return LPResult("optimal", -z[-1], tuple(y))


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """max c.x subject to A x <= b, x free, solved exactly over Q."""
    n = len(c)
    m = len(A)
    M, r = [], []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        full = row + [-x for x in row] + [Fraction(int(k == i)) for k in range(m)]
        rhs = Fraction(b[i])
        if rhs < 0:
            full = [-x for x in full]
            rhs = -rhs
        M.append(full)
        r.append(rhs)
    cost = [-Fraction(x) for x in c] + [Fraction(x) for x in c] + [Fraction(0)] * m
    res = _standard_form(M, r, cost)
    if res.status != "optimal":
        return res
    y = res.point
    x = tuple(y[k] - y[n + k] for k in range(n))
    return LPResult("optimal", -res.value, x)


def feasible(A: Sequence[Sequence], b: Sequence) -> bool:
    """Whether ``A x <= b`` has a rational solution."""
    if not A:
        return True
    return maximize([0] * len(A[0]), A, b).status != "infeasible"


class ChamberGeometry:
    """Per-fan data for polyhedra ``{m : s_i (<m, u_i> - c_i) <= 0}``.

    The hyperplanes ``<m, u_i> = c_i`` come from the ray generators, so the
    invertible n-subsets (for vertices) and the kernel lines of (n-1)-subsets
    (for extreme rays of recession cones) depend only on the fan and are
    computed once.
    """

    def __init__(self, rays: Sequence[Sequence[int]]):
        self.rays = [tuple(r) for r in rays]
        self.n = len(self.rays[0])
        self.bases = []
        for sub in combinations(range(len(self.rays)), self.n):
            mat = [list(self.rays[i]) for i in sub]
            det = int_det(mat)
            if det:
                self.bases.append((sub, adjugate(mat), det))
        self.lines = []
        for sub in combinations(range(len(self.rays)), self.n - 1):
            if self.n == 1:
                self.lines.append((1,))
                break
            vec = primitive_kernel_vector([self.rays[i] for i in sub])
            if vec is not None:
                self.lines.append(vec)
        self.lines = sorted(set(self.lines))

    def recession_trivial(self, upper: int) -> bool:
        """Recession cone of a chamber is {0}.

        ``upper`` is a bitmask of rays with constraint ``<m,u> <= c``; the
        remaining rays carry ``<m,u> >= c``. The rays span the space, so the
        cone is pointed and is nontrivial exactly when some candidate extreme
        ray satisfies all homogeneous constraints.
        """
        for vec in self.lines:
            for sign in (1, -1):
                ok = True
                for i, u in enumerate(self.rays):
                    v = sign * sum(a * b for a, b in zip(vec, u))
                    if (upper >> i) & 1:
                        if v > 0:
                            ok = False
                            break
                    elif v < 0:
                        ok = False
                        break
                if ok:
                    return False
        return True

    def vertex_box(self, thresholds: Sequence[int], upper: int):
        """Integer bounding box of the chamber's vertices, or None if empty.

        Only meaningful for pointed polyhedra: a nonempty pointed polyhedron
        has a vertex, so "no feasible vertex" means empty.
        """
        lo = hi = None
        rays = self.rays
        for sub, adj, det in self.bases:
            rhs = [thresholds[i] for i in sub]
            num = [sum(a * b for a, b in zip(row, rhs)) for row in adj]
            if det < 0:
                num = [-x for x in num]
                den = -det
            else:
                den = det
            ok = True
            for i, u in enumerate(rays):
                val = sum(a * b for a, b in zip(u, num))
                t = thresholds[i] * den
                if (upper >> i) & 1:
                    if val > t:
                        ok = False
                        break
                elif val < t:
                    ok = False
                    break
            if not ok:
                continue
            if lo is None:
                lo = [Fraction(x, den) for x in num]
                hi = list(lo)
            else:
                for k, x in enumerate(num):
                    q = Fraction(x, den)
                    if q < lo[k]:
                        lo[k] = q
                    elif q > hi[k]:
                        hi[k] = q
        if lo is None:
            return None
        return [ceil(x) for x in lo], [floor(x) for x in hi]
