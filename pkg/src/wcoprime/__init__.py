"""Exact counting of w-coprime S-integers and S-integral ideals over F_q.

The building blocks live in submodules:

``finite_field``  arithmetic in F_q and F_q[X]
``zeta``          Weil polynomials, zeta series, exact zeta values
``divisors``      effective divisors outside S, Moebius function, ideal oracle
``genus0``        F_q(X): Riemann-Roch spaces and element counting
``theorems``      exact counts against asymptotic main terms
``cli``           the ``wcoprime`` command
"""

__version__ = "0.1.0"

from .kernels import BACKEND as KERNEL_BACKEND  # noqa: E402
from .zeta import (  # noqa: E402
    E2_SUPERSINGULAR,
    CurveSpec,
    SSpec,
    j_S,
    leading_constant,
    mobius_coeffs,
    preset,
    rational_curve,
    zeta_S_value,
)

__all__ = [
    "KERNEL_BACKEND", "CurveSpec", "SSpec", "E2_SUPERSINGULAR", "rational_curve",
    "preset", "j_S", "leading_constant", "mobius_coeffs", "zeta_S_value",
]
