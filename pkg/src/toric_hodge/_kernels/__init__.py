"""Hot loops of the cohomology engine.

The Cython build (``_ckernels``) is used when it was compiled and imports;
otherwise the pure-Python module is used. Set ``TORIC_HODGE_PURE_PYTHON=1``
to force the fallback.
"""

import os

from . import _pykernels

python_backend = _pykernels
compiled_backend = None

if not os.environ.get("TORIC_HODGE_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

_active = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None and _active is compiled_backend else "python"

count_chamber = _active.count_chamber

__all__ = ["BACKEND", "count_chamber", "python_backend", "compiled_backend"]
