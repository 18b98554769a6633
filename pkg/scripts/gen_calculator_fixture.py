"""Regenerate the calculator reference table straight from the formulas.

Deliberately does not import toric_hodge: every value is computed here with
math.floor / math.ceil on exact fractions.

    python scripts/gen_calculator_fixture.py > src/toric_hodge/data/calculator_table.json
"""

import json
import math
from fractions import Fraction

N_RANGE = range(2, 7)
M_RANGE = range(3, 7)
J_RANGE = range(1, 7)


def k_floor(n, m):
    return math.floor(Fraction(n, m))


def k_mj(n, m, j):
    if j <= m - 1:
        return math.ceil(Fraction(j + n - m, m))
    return math.ceil(Fraction(j + n - m, m - 2))


def containment(n, m, k):
    lo = Fraction(n, k + 1)
    first = lo < m and (k == 0 or m < Fraction(n, k))
    second = k > 0 and m >= Fraction(n, k)
    if first:
        return {"branch": "first", "exponent": (k + 1) * m - n}
    if second:
        return {"branch": "second", "exponent": max(m - 1, (k + 1) * (m - 2) - n - 2)}
    return {"branch": "error", "exponent": None}


rows = []
for n in N_RANGE:
    for m in M_RANGE:
        rows.append({
            "n": n, "m": m,
            "k_floor": k_floor(n, m),
            "k_mj": {str(j): k_mj(n, m, j) for j in J_RANGE},
            "containment": {str(k): containment(n, m, k) for k in range(0, n + 1)},
        })

print(json.dumps({"n_range": [2, 6], "m_range": [3, 6], "j_range": [1, 6], "rows": rows}, indent=1))
