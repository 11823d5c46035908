import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from wcoprime import divisors, genus0  # noqa: E402
from wcoprime.kernels import _ckernels, _pykernels  # noqa: E402
from wcoprime.zeta import E2_SUPERSINGULAR, SSpec, rational_curve  # noqa: E402

BACKENDS = {"python": _pykernels.count_disjoint_tuples}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels.count_disjoint_tuples

# curve/S pairs shipped with the presets and used across the suites
CURVE_S_PAIRS = [
    (rational_curve(2), SSpec((1,))),
    (rational_curve(3), SSpec((1,))),
    (E2_SUPERSINGULAR, SSpec((1,))),
    (rational_curve(2), SSpec((1, 2))),
    (E2_SUPERSINGULAR, SSpec((1, 1))),
    (E2_SUPERSINGULAR, SSpec((2,))),
]


def pair_id(pair):
    c, s = pair
    return f"{c.label}-q{c.q}-S{list(s.place_degrees)}"


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Route brute_V and brute_Q through one kernel backend."""
    fn = BACKENDS[request.param]
    monkeypatch.setattr(genus0, "count_disjoint_tuples", fn)
    monkeypatch.setattr(divisors, "count_disjoint_tuples", fn)
    return request.param
