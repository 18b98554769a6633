"""Exact integer and rational linear algebra on small dense matrices.

Matrices are plain sequences of rows. Nothing here uses floating point;
entries are ``int`` or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import ParameterError

Matrix = Sequence[Sequence[int | Fraction]]


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, bool):
        raise ParameterError(f"not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"not a rational number: {value!r}") from exc
    raise ParameterError(f"not a rational number: {value!r}")


def format_fraction(q: Fraction) -> int | str:
    """JSON-friendly form: ints stay ints, others become ``"p/q"``."""
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def gcd_list(values: Sequence[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, int(v))
    return g


def det(matrix: Matrix) -> Fraction:
    """Determinant by Gaussian elimination over Q."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ParameterError("determinant of a non-square matrix")
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return result


def int_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix (Bareiss, no fractions)."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(matrix: Matrix) -> int:
    """Rank over Q. Integer input is eliminated fraction-free."""
    rows = [list(row) for row in matrix if any(x != 0 for x in row)]
    if not rows:
        return 0
    if all(isinstance(x, int) for row in rows for x in row):
        return _int_rank(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][col]
        for i in range(r + 1, len(a)):
            if a[i][col] != 0:
                f = a[i][col] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def _int_rank(a: list[list[int]]) -> int:
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][col]
        prow = a[r]
        for i in range(r + 1, len(a)):
            q = a[i][col]
            if q:
                row = [p * x - q * y for x, y in zip(a[i], prow)]
                g = gcd_list(row)
                a[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(a):
            break
    return r


def inverse(matrix: Matrix) -> list[list[Fraction]]:
    """Inverse over Q by Gauss-Jordan; raises on singular input."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ParameterError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def adjugate(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer adjugate, so ``adj(A) @ A = det(A) * I``."""
    n = len(matrix)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(map(list, matrix)) if k != i]
            adj[j][i] = (-1) ** (i + j) * int_det(minor)
    return adj


def primitive_kernel_vector(rows: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Generator of the kernel of an (n-1) x n integer matrix of full rank.

    Returns ``None`` if the rows are dependent. The vector is the
    generalized cross product divided by its content.
    """
    rows = [list(map(int, r)) for r in rows]
    n = len(rows) + 1
    if any(len(r) != n for r in rows):
        raise ParameterError(f"expected {n - 1} rows of length {n}")
    vec = []
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows]
        vec.append((-1) ** j * int_det(minor))
    g = gcd_list(vec)
    if g == 0:
        return None
    return tuple(v // g for v in vec)


def smith_invariants(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    a = [list(map(int, row)) for row in matrix]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    invariants = []
    t = 0
    while t < min(m, n):
        # bring the smallest nonzero entry of the trailing block to (t, t)
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                # fold a non-divisible entry into row t and keep reducing
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # a remainder is smaller than the pivot: move it into place
            entries = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
            entries += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            _, i, j = min(entries)
            if j == t:
                a[t], a[i] = a[i], a[t]
            else:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        invariants.append(abs(a[t][t]))
        t += 1
    return invariants
