"""Hot counting kernels, compiled when available.

The Cython build of ``_ckernels`` is used if it imports; otherwise, or when
``WCOPRIME_PURE_PYTHON`` is set to a non-empty value other than ``0``, the
pure-Python kernel is used.  ``BACKEND`` names the active one.
"""

import os

from . import _pykernels

_force_py = os.environ.get("WCOPRIME_PURE_PYTHON", "") not in ("", "0")

try:
    if _force_py:
        raise ImportError("pure Python forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

if _ckernels is not None:
    count_disjoint_tuples = _ckernels.count_disjoint_tuples
    BACKEND = "cython"
else:
    count_disjoint_tuples = _pykernels.count_disjoint_tuples
    BACKEND = "python"

__all__ = ["count_disjoint_tuples", "BACKEND"]
