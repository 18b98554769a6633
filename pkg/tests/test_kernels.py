import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_hodge import _kernels
from toric_hodge.cohomology import cohomology_dims
from toric_hodge.divisors import TDivisor
from toric_hodge.fan import hirzebruch, projective_product

needs_compiled = pytest.mark.skipif(_kernels.compiled_backend is None,
                                    reason="Cython kernels not built")


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=5, max_size=5), st.integers(0, 31),
       st.lists(st.integers(-4, 0), min_size=3, max_size=3),
       st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_backends_agree_raw(coeffs, mask, lo, hi):
    rays = projective_product(2, 1).rays
    args = (rays, coeffs, mask, lo, hi)
    assert _kernels.compiled_backend.count_chamber(*args) == \
        _kernels.python_backend.count_chamber(*args)


@pytest.mark.parametrize("backend", ["python", "compiled"])
def test_backend_cohomology(monkeypatch, backend):
    module = _kernels.python_backend if backend == "python" else _kernels.compiled_backend
    if module is None:
        pytest.skip("Cython kernels not built")
    rng = random.Random(3)
    fans = [hirzebruch(2), projective_product(2, 1)]
    cases = [(f, TDivisor.of([rng.randint(-4, 4) for _ in range(f.n_rays)]))
             for f in fans for _ in range(15)]
    expected = [cohomology_dims(f, D) for f, D in cases]
    monkeypatch.setattr(_kernels, "count_chamber", module.count_chamber)
    assert [cohomology_dims(f, D) for f, D in cases] == expected


def test_empty_box():
    rays = hirzebruch(1).rays
    assert _kernels.count_chamber(rays, [0, 0, 0, 0], 0, [1, 0], [0, 0]) == 0


def test_pure_python_switch():
    env = dict(os.environ, TORIC_HODGE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from toric_hodge import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
