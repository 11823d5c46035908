"""Exact counts versus asymptotic main terms.

Every quantity here is an exact integer or ``Fraction``.  The main terms for
ideal counting use the residue constant ``leading_constant`` and every
ideal-count row also carries its ratio to ``class_number_constant`` (always
``q``), so both constants stay visible in the output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .genus0 import fast_V_from_degrees
from .zeta import (
    CurveSpec,
    SSpec,
    class_number_constant,
    default_truncation,
    j_S_table,
    leading_constant,
    mobius_coeffs,
    residue_at_one,
    stabilization_index,
    zeta_S_value,
)

BOUND_N_OVER_W = "q^{N/w}"
BOUND_n_OVER_W = "q^{n/w}"
BOUND_N_Q_N = "n*q^n"
BOUND_Q_N_M1 = "q^{n(m-1)}"


@dataclass
class CountReport:
    """One verification row: exact count against its asymptotic main term.

    ``bound`` is the integer value of the error class used for ``ratio``.
    For the classes q^{N/w} and q^{n/w} it is q to the floor of the exponent,
    which keeps the ratio an exact rational and can only overstate it.
    """

    kind: str
    curve: str
    q: int
    S: str
    m: int
    w: int
    size_name: str
    size: int
    exact_count: Optional[int]
    main_term: Fraction
    error: Optional[Fraction]
    error_bound_class: str
    bound: int
    ratio: Optional[Fraction]
    density: Optional[Fraction] = None
    density_limit: Optional[Fraction] = None
    constant_ratio: Optional[Fraction] = None
    notes: list[str] = field(default_factory=list)

    @property
    def params(self) -> dict:
        return {"curve": self.curve, "q": self.q, "S": self.S, "m": self.m,
                "w": self.w, self.size_name: self.size}


def describe_S(s: SSpec) -> str:
    return "[" + ",".join(map(str, s.place_degrees)) + "]"


def _ratio(error: Optional[Fraction], bound: int) -> Optional[Fraction]:
    if error is None:
        return None
    return abs(error) / bound


# --------------------------------------------------------------------------
# tuples of S-integers
# --------------------------------------------------------------------------


def thm1_main(c: CurveSpec, s: SSpec, m: int, w: int, N: int) -> Fraction:
    """q^{m(N+1-g)} / zeta_S(wm)."""
    if w * m < 2:
        raise ValueError("the main term needs wm >= 2 (wm = 1 counts units)")
    if N <= 0:
        raise ValueError("N must be positive")
    return Fraction(c.q) ** (m * (N + 1 - c.genus)) / zeta_S_value(c, s, w * m)


def thm1_report(c: CurveSpec, s: SSpec, m: int, w: int,
                N_range: Iterable[int]) -> list[CountReport]:
    """Rows for each N in range that is a degree of some D(N) on S.

    Exact counts exist only at genus 0; at higher genus rows carry the main
    term alone and are flagged.
    """
    Ns = [N for N in N_range if N > 0 and N % math.gcd(*s.place_degrees) == 0]
    zeta = zeta_S_value(c, s, w * m) if w * m >= 2 else None
    if zeta is None:
        raise ValueError("the main term needs wm >= 2 (wm = 1 counts units)")
    mu = None
    if c.genus == 0 and Ns:
        mu = mobius_coeffs(c, s, default_truncation(max(Ns) // w))
    rows = []
    for N in Ns:
        main = thm1_main(c, s, m, w, N)
        bound = c.q ** (N // w)
        row = CountReport(
            kind="thm1", curve=c.label, q=c.q, S=describe_S(s), m=m, w=w,
            size_name="N", size=N, exact_count=None, main_term=main, error=None,
            error_bound_class=BOUND_N_OVER_W, bound=bound, ratio=None,
            density_limit=1 / zeta)
        if mu is not None:
            V = fast_V_from_degrees(c.q, s, N, m, w, mu)
            row.exact_count = V
            row.error = V - main
            row.ratio = _ratio(row.error, bound)
            row.density = Fraction(V, c.q ** (m * (N + 1)))
        else:
            row.notes.append("exact count unavailable at genus >= 1")
        rows.append(row)
    return rows


# --------------------------------------------------------------------------
# tuples of integral ideals
# --------------------------------------------------------------------------


def thm2_Q_exact(c: CurveSpec, s: SSpec, n: int, m: int, w: int) -> int:
    """sum_{k <= n/w} mu_{S,k} j_S(n - wk)^m, exact at any genus."""
    if m < 1 or w < 1:
        raise ValueError("m and w must be >= 1")
    if n < 0:
        return 0
    mu = mobius_coeffs(c, s, default_truncation(n, c.genus))
    J = j_S_table(c, s, n)
    return sum(mu[k] * J[n - w * k] ** m for k in range(n // w + 1))


def thm2_bound(q: int, n: int, m: int, w: int) -> tuple[str, int]:
    if m == 1:
        return BOUND_n_OVER_W, q ** (n // w)
    if m == 2 and w == 1:
        return BOUND_N_Q_N, max(n, 1) * q**n
    return BOUND_Q_N_M1, q ** (n * (m - 1))


def thm2_main(c: CurveSpec, s: SSpec, m: int, w: int, n: int) -> Fraction:
    """c_S^m q^{mn} / zeta_S(wm) with the residue constant c_S."""
    if w * m < 2:
        raise ValueError("the main term needs wm >= 2 (wm = 1 counts only O_S)")
    return leading_constant(c, s) ** m * Fraction(c.q) ** (m * n) / zeta_S_value(c, s, w * m)


def thm2_report(c: CurveSpec, s: SSpec, m: int, w: int,
                n_range: Iterable[int]) -> list[CountReport]:
    ns = [n for n in n_range if n >= 0]
    if w * m < 2:
        raise ValueError("the main term needs wm >= 2 (wm = 1 counts only O_S)")
    if not ns:
        return []
    top = max(ns)
    mu = mobius_coeffs(c, s, default_truncation(top, c.genus))
    J = j_S_table(c, s, top)
    zeta = zeta_S_value(c, s, w * m)
    cS = leading_constant(c, s)
    const_ratio = cS / class_number_constant(c, s)
    rows = []
    for n in ns:
        Q = sum(mu[k] * J[n - w * k] ** m for k in range(n // w + 1))
        main = cS**m * Fraction(c.q) ** (m * n) / zeta
        cls, bound = thm2_bound(c.q, n, m, w)
        err = Q - main
        rows.append(CountReport(
            kind="thm2", curve=c.label, q=c.q, S=describe_S(s), m=m, w=w,
            size_name="n", size=n, exact_count=Q, main_term=main, error=err,
            error_bound_class=cls, bound=bound, ratio=_ratio(err, bound),
            density=Fraction(Q, J[n] ** m), density_limit=1 / zeta,
            constant_ratio=const_ratio))
    return rows


def implied_constant(rows: Iterable[CountReport]) -> Optional[Fraction]:
    """Largest |error| / bound over rows that carry an exact count."""
    ratios = [r.ratio for r in rows if r.ratio is not None]
    return max(ratios) if ratios else None


# --------------------------------------------------------------------------
# partial sums of ideal counts
# --------------------------------------------------------------------------


@dataclass
class Lemma4Row:
    curve: str
    S: str
    n: int
    j: int
    main: Fraction
    difference: Fraction
    predicted: Fraction
    stable: bool


def lemma4_report(c: CurveSpec, s: SSpec, n_range: Iterable[int]) -> list[Lemma4Row]:
    """Rows (n, j_S(n), c_S q^n, difference).

    ``predicted`` is the eventual difference: ``-h_K d/(q-1)`` when S is one
    place of degree d, 0 otherwise.  ``stable`` marks rows past the point
    where the difference has reached it.
    """
    ns = [n for n in n_range if n >= 0]
    if not ns:
        return []
    J = j_S_table(c, s, max(ns))
    cS = leading_constant(c, s)
    pred = residue_at_one(c, s)
    start = stabilization_index(c, s)
    rows = []
    for n in ns:
        main = cS * c.q**n
        diff = J[n] - main
        rows.append(Lemma4Row(c.label, describe_S(s), n, J[n], main, diff, pred,
                              n >= start and diff == pred))
    return rows


def lemma4_stabilizes(rows: Iterable[Lemma4Row], n_from: int = 1) -> bool:
    """True if the difference is the same for every row with n >= n_from."""
    diffs = {r.difference for r in rows if r.n >= n_from}
    return len(diffs) <= 1
