"""The rational function field K = F_q(X) with a concrete set S of places.

Places are the monic irreducibles of F_q[X] plus the place at infinity.
Riemann-Roch spaces of divisors supported on S are enumerated directly, and
w-coprime tuples from them are counted both by brute force and by the exact
Moebius sum over divisors of O_S.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .budget import charge
from .finite_field import FieldSpec, Poly, all_polys, factor, is_irreducible, poly_gcd
from .kernels import count_disjoint_tuples
from .zeta import SSpec, TruncatedIntSeries, mobius_coeffs, rational_curve


@dataclass(frozen=True)
class RationalPlace:
    """A place of F_q(X): ``poly is None`` means the place at infinity."""

    poly: Optional[Poly] = None

    @classmethod
    def infinity(cls) -> "RationalPlace":
        return cls(None)

    @classmethod
    def finite(cls, poly: Poly) -> "RationalPlace":
        if not poly.is_monic or not is_irreducible(poly):
            raise ValueError(f"{poly!r} is not a monic irreducible polynomial")
        return cls(poly)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        return (0, ()) if self.poly is None else (1,) + self.poly.sort_key()

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_config(self):
        return "inf" if self.poly is None else list(self.poly.coeffs)

    def __repr__(self):
        return "inf" if self.poly is None else f"({self.poly!r})"


def parse_place(f: FieldSpec, raw) -> RationalPlace:
    """``"inf"`` or a coefficient list (constant term first) of a monic irreducible."""
    if isinstance(raw, str):
        if raw.strip().lower() in ("inf", "infinity"):
            return RationalPlace.infinity()
        raise ValueError(f"unknown place {raw!r}; use 'inf' or a coefficient list")
    coeffs = [int(c) for c in raw]
    poly = Poly(f, coeffs)
    if len(poly.coeffs) != len(coeffs):
        raise ValueError(f"coefficient list {coeffs} has trailing zeros")
    return RationalPlace.finite(poly)


@dataclass(frozen=True)
class SDivisorSpec:
    """The divisor D(N) = sum N_j p_j on the places of S."""

    field: FieldSpec
    entries: tuple[tuple[RationalPlace, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("S must be nonempty")
        places = [p for p, _ in self.entries]
        if len(set(places)) != len(places):
            raise ValueError("places of S must be pairwise distinct")
        for p in places:
            if p.poly is not None and p.poly.field != self.field:
                raise ValueError("place defined over a different field")

    @classmethod
    def make(cls, f: FieldSpec, places: Sequence[RationalPlace], N_vec: Sequence[int]):
        if len(places) != len(N_vec):
            raise ValueError("N_vec length differs from the number of places in S")
        return cls(f, tuple(zip(places, (int(n) for n in N_vec))))

    @property
    def places(self) -> tuple[RationalPlace, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def N_vec(self) -> tuple[int, ...]:
        return tuple(n for _, n in self.entries)

    @property
    def N(self) -> int:
        return sum(p.degree * n for p, n in self.entries)

    @property
    def q(self) -> int:
        return self.field.q

    def s_spec(self) -> SSpec:
        return SSpec(tuple(p.degree for p in self.places))


@dataclass(frozen=True)
class RationalElement:
    """num/den in lowest terms with den monic; zero is 0/1."""

    num: Poly
    den: Poly

    @classmethod
    def make(cls, num: Poly, den: Poly) -> "RationalElement":
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        f = num.field
        if num.is_zero:
            return cls(Poly(f), Poly.const(f, 1))
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        lead = den.lead
        if lead != 1:
            inv = f.inv(lead)
            num, den = num.scale(inv), den.scale(inv)
        return cls(num, den)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __repr__(self):
        if self.den.degree == 0:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def principal_divisor(a: RationalElement) -> dict[RationalPlace, int]:
    """Nonzero valuations of ``a`` at all places of F_q(X)."""
    if a.is_zero:
        raise ValueError("the divisor of 0 is not a finite divisor")
    out: dict[RationalPlace, int] = {}
    for g, e in factor(a.num):
        out[RationalPlace(g)] = e
    for g, e in factor(a.den):
        out[RationalPlace(g)] = out.get(RationalPlace(g), 0) - e
    v_inf = a.den.degree - a.num.degree
    if v_inf:
        out[RationalPlace.infinity()] = v_inf
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))


def valuation(a: RationalElement, place: RationalPlace) -> float:
    """v_p(a), with +inf for a = 0."""
    if a.is_zero:
        return float("inf")
    if place.is_infinite:
        return a.den.degree - a.num.degree
    v = 0
    for poly, sign in ((a.num, 1), (a.den, -1)):
        while place.poly.divides(poly):
            poly = poly // place.poly
            v += sign
    return v


def rr_space_enumerate(spec: SDivisorSpec, budget=None) -> list[RationalElement]:
    """Elements a with v_{p_j}(a) >= -N_j on S and v_p(a) >= 0 off S.

    Written as a = g / H with H the product of P_j^{N_j} over finite places of
    S with N_j > 0; g runs over multiples of prod P_j^{-N_j} (N_j < 0) with
    deg g <= deg H + N_inf (N_inf = 0 when infinity is not in S).
    """
    f = spec.field
    one = Poly.const(f, 1)
    H, M = one, one
    top = 0
    for place, n in spec.entries:
        if place.is_infinite:
            top += n
        elif n > 0:
            H = H * place.poly ** n
        elif n < 0:
            M = M * place.poly ** (-n)
    top += H.degree
    free = top - M.degree
    if free < 0:
        return [RationalElement.make(Poly(f), one)]
    charge(f.q ** (free + 1), budget, f"Riemann-Roch space of size q^{free + 1}")
    return [RationalElement.make(M * h, H) for h in all_polys(f, free)]


def _element_mask(a: RationalElement, s_places, w: int, bit: dict, full: int) -> int:
    if a.is_zero:
        return full
    mask = 0
    for place, v in principal_divisor(a).items():
        if v >= w and place not in s_places:
            mask |= 1 << bit.setdefault(place, len(bit) + 1)
    return mask


def brute_V(spec: SDivisorSpec, m: int, w: int, budget=None) -> int:
    """Number of w-coprime m-tuples from L(D(N)), by testing every tuple.

    A tuple fails at a place p outside S when every entry has v_p >= w.  The
    zero element lies in every ideal, so it carries all places at once and
    the all-zero tuple is never w-coprime.
    """
    if m < 1 or w < 1:
        raise ValueError("m and w must be >= 1")
    elems = rr_space_enumerate(spec, budget)
    charge(len(elems) ** m, budget, f"brute_V over {len(elems)}^{m} tuples")
    s_places = set(spec.places)
    bit: dict = {}
    nonzero = [a for a in elems if not a.is_zero]
    masks = [_element_mask(a, s_places, w, bit, 0) for a in nonzero]
    # bit 0 is reserved so zero's mask stays nonzero even with no bad places
    full = (1 << (len(bit) + 1)) - 1
    hist = Counter(masks)
    hist[full] += len(elems) - len(nonzero)
    keys = sorted(hist)
    return count_disjoint_tuples(keys, [hist[k] for k in keys], m)


def fast_V_from_degrees(q: int, s: SSpec, N: int, m: int, w: int,
                        series: TruncatedIntSeries | None = None) -> int:
    """sum_{k <= N/w} mu_{S,k} (q^{m(N - wk + 1)} - 1) at genus 0."""
    if N <= 0:
        raise ValueError("N must be positive")
    if m < 1 or w < 1:
        raise ValueError("m and w must be >= 1")
    kmax = N // w
    if series is None:
        series = mobius_coeffs(rational_curve(q), s, max(kmax, 1))
    return sum(series[k] * (q ** (m * (N - w * k + 1)) - 1) for k in range(kmax + 1))


def fast_V_genus0(spec: SDivisorSpec, m: int, w: int,
                  series: TruncatedIntSeries | None = None) -> int:
    """Exact number of w-coprime m-tuples from L(D(N)) via the Moebius series."""
    return fast_V_from_degrees(spec.q, spec.s_spec(), spec.N, m, w, series)


def iter_nonzero_elements(f: FieldSpec, max_degree: int) -> Iterator[RationalElement]:
    """Every nonzero num/den with deg num, deg den <= max_degree, once each."""
    seen = set()
    dens = [d for d in all_polys(f, max_degree) if d.is_monic]
    for den in dens:
        for num in all_polys(f, max_degree):
            if num.is_zero:
                continue
            a = RationalElement.make(num, den)
            key = (a.num.coeffs, a.den.coeffs)
            if key not in seen:
                seen.add(key)
                yield a
