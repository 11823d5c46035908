"""Weil-polynomial machinery and generating-function arithmetic.

A curve is described only by ``q``, its genus and the integer coefficients
of its Weil polynomial ``P(u) = 1 + a_1 u + ... + a_{2g} u^{2g}``.  Everything
else (place counts, divisor counts, the Moebius series, partial sums of ideal
counts, exact zeta values) is derived from that data with exact integer and
rational arithmetic.

With ``z = q^{-s}`` the zeta function of the curve is

    Z_K(z) = P(z) / ((1 - z)(1 - q z)),

and removing a finite set S of places with degrees ``d_1..d_r`` multiplies
it by ``G_S(z) = prod (1 - z^{d_j})``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import IncompatibleSError, InvalidCurveError, TruncationError
from .finite_field import prime_power

DEFAULT_TRUNCATION = 50


@lru_cache(maxsize=None)
def mobius_int(n: int) -> int:
    """Classical Moebius function of a positive integer."""
    if n < 1:
        raise ValueError("mobius_int needs n >= 1")
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def default_truncation(n: int = 0, genus: int = 0) -> int:
    return max(DEFAULT_TRUNCATION, 2 * n + 2 * genus)


# --------------------------------------------------------------------------
# truncated integer power series
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedIntSeries:
    """Integer power series known exactly through ``z^T``.

    Reading a coefficient past ``T`` raises ``TruncationError``; there are no
    silent zeros beyond the truncation order.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_poly(cls, coeffs: Sequence[int], T: int) -> "TruncatedIntSeries":
        cs = list(coeffs[: T + 1])
        cs += [0] * (T + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def geometric(cls, ratio: int, T: int) -> "TruncatedIntSeries":
        """Expansion of 1 / (1 - ratio*z)."""
        return cls(tuple(ratio**k for k in range(T + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if not isinstance(k, int):
            raise TypeError("series index must be an int")
        if k < 0 or k > self.order:
            raise TruncationError(f"coefficient z^{k} outside 0..{self.order}")
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "TruncatedIntSeries") -> "TruncatedIntSeries":
        T = min(self.order, other.order)
        return TruncatedIntSeries(tuple(a + b for a, b in zip(self.coeffs[: T + 1], other.coeffs)))

    def __neg__(self):
        return TruncatedIntSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "TruncatedIntSeries") -> "TruncatedIntSeries":
        T = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (T + 1)
        for i in range(T + 1):
            ai = a[i]
            if ai:
                for j in range(T + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedIntSeries(tuple(out))

    def inverse(self) -> "TruncatedIntSeries":
        """Multiplicative inverse; needs a unit constant term (+1 or -1)."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("only series with constant term +-1 invert over Z")
        T = self.order
        a = self.coeffs
        inv = [0] * (T + 1)
        inv[0] = c0
        for k in range(1, T + 1):
            acc = sum(a[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -acc * c0
        return TruncatedIntSeries(tuple(inv))

    def partial_sums(self) -> "TruncatedIntSeries":
        out, acc = [], 0
        for c in self.coeffs:
            acc += c
            out.append(acc)
        return TruncatedIntSeries(tuple(out))

    def truncate(self, T: int) -> "TruncatedIntSeries":
        if T > self.order:
            raise TruncationError(f"cannot extend series from order {self.order} to {T}")
        return TruncatedIntSeries(self.coeffs[: T + 1])


# --------------------------------------------------------------------------
# curve data
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveSpec:
    """Function field over F_q given by genus and Weil polynomial coefficients."""

    q: int
    genus: int
    weil_coeffs: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "weil_coeffs", tuple(int(c) for c in self.weil_coeffs))

    @property
    def class_number(self) -> int:
        return sum(self.weil_coeffs)

    def weil_at(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.weil_coeffs):
            acc = acc * x + c
        return acc

    @property
    def label(self) -> str:
        return self.name or f"q{self.q}-g{self.genus}-" + ",".join(map(str, self.weil_coeffs))


def rational_curve(q: int) -> CurveSpec:
    """The projective line over F_q (rational function field)."""
    prime_power(q)
    return CurveSpec(q, 0, (1,), name="rational")


# y^2 + y = x^3 over F_2; N_1 = 3, N_2 = 9 by direct point count
E2_SUPERSINGULAR = CurveSpec(2, 1, (1, 0, 2), name="e2-supersingular")

PRESETS = ("rational", "e2-supersingular")


def preset(name: str, q: int | None = None) -> CurveSpec:
    if name == "rational":
        if q is None:
            raise ValueError("the rational preset needs q")
        return rational_curve(q)
    if name == "e2-supersingular":
        if q not in (None, 2):
            raise ValueError("e2-supersingular is defined over F_2 only")
        return E2_SUPERSINGULAR
    raise ValueError(f"unknown curve preset {name!r}; known: {', '.join(PRESETS)}")


@dataclass(frozen=True)
class SSpec:
    """Degrees of the places in the finite nonempty set S."""

    place_degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(int(d) for d in self.place_degrees)
        if not degs:
            raise ValueError("S must be nonempty")
        if any(d < 1 for d in degs):
            raise ValueError("place degrees must be >= 1")
        object.__setattr__(self, "place_degrees", tuple(sorted(degs)))

    def count_of_degree(self, d: int) -> int:
        return self.place_degrees.count(d)

    def G_coeffs(self) -> list[int]:
        """Coefficients of G_S(z) = prod (1 - z^d)."""
        poly = [1]
        for d in self.place_degrees:
            nxt = poly + [0] * d
            for i, c in enumerate(poly):
                nxt[i + d] -= c
            poly = nxt
        return poly

    def G_at(self, x) -> Fraction:
        acc = Fraction(1)
        for d in self.place_degrees:
            acc *= 1 - Fraction(x) ** d
        return acc


# --------------------------------------------------------------------------
# Weil polynomial operations
# --------------------------------------------------------------------------


@dataclass
class WeilReport:
    valid: bool
    violations: list[str]
    class_number: int


def power_sums(c: CurveSpec, n_max: int) -> list[int]:
    """``[s_1, ..., s_{n_max}]`` with ``s_n = sum_j pi_j^n`` over the inverse
    roots of P, by Newton's identities on its coefficients."""
    a = c.weil_coeffs
    deg = len(a) - 1
    s: list[int] = []
    for n in range(1, n_max + 1):
        an = a[n] if n <= deg else 0
        acc = -n * an
        for i in range(1, min(n - 1, deg) + 1):
            acc -= a[i] * s[n - i - 1]
        s.append(acc)
    return s


def point_counts(c: CurveSpec, n_max: int) -> list[int]:
    """``[N_1, ..., N_{n_max}]``, rational points over F_{q^n}."""
    return [c.q**n + 1 - s for n, s in enumerate(power_sums(c, n_max), start=1)]


def place_counts(c: CurveSpec, d_max: int) -> list[int]:
    """``[a_1, ..., a_{d_max}]``, number of places of each degree.

    Raises ``InvalidCurveError`` when some count is negative or non-integral.
    """
    N = point_counts(c, d_max)
    out = []
    for d in range(1, d_max + 1):
        total = sum(mobius_int(e) * N[d // e - 1] for e in range(1, d + 1) if d % e == 0)
        count, rem = divmod(total, d)
        if rem:
            raise InvalidCurveError(f"place count a_{d} = {total}/{d} is not an integer")
        if count < 0:
            raise InvalidCurveError(f"place count a_{d} = {count} is negative")
        out.append(count)
    return out


def validate_weil(c: CurveSpec, T: int = DEFAULT_TRUNCATION) -> WeilReport:
    """Check the necessary conditions on Weil data; never raises."""
    bad = []
    try:
        prime_power(c.q)
    except ValueError:
        bad.append(f"q = {c.q} is not a prime power")
    g, a = c.genus, c.weil_coeffs
    if g < 0:
        bad.append(f"genus {g} is negative")
    if not a or a[0] != 1:
        bad.append("constant coefficient a_0 must be 1")
    if len(a) != 2 * g + 1:
        bad.append(f"degree {len(a) - 1} differs from 2*genus = {2 * g}")
    elif g >= 0:
        for i in range(2 * g + 1):
            want = c.q ** (g - i) * a[i] if i <= g else None
            if i <= g and a[2 * g - i] != want:
                bad.append(f"a_{2 * g - i} must equal q^{g - i}*a_{i} = {want}")
    h = c.class_number
    if h < 1:
        bad.append(f"class number P(1) = {h} must be >= 1")
    if not bad:
        N = point_counts(c, T)
        neg = [n for n, v in enumerate(N, start=1) if v < 0]
        if neg:
            bad.append(f"negative point count N_{neg[0]}")
        try:
            place_counts(c, T)
        except InvalidCurveError as exc:
            bad.append(str(exc))
    return WeilReport(valid=not bad, violations=bad, class_number=h)


def require_valid(c: CurveSpec) -> None:
    report = validate_weil(c)
    if not report.valid:
        raise InvalidCurveError("; ".join(report.violations))


def check_compatible(c: CurveSpec, s: SSpec) -> list[int]:
    """Return the place counts up to the largest degree in S, or raise
    ``IncompatibleSError`` if S wants more places than exist."""
    d_max = max(s.place_degrees)
    counts = place_counts(c, d_max)
    for d in sorted(set(s.place_degrees)):
        want = s.count_of_degree(d)
        if want > counts[d - 1]:
            if counts[d - 1] == 0:
                raise IncompatibleSError(f"no available place of degree {d}")
            raise IncompatibleSError(
                f"S asks for {want} places of degree {d}, the curve has {counts[d - 1]}")
    return counts


# --------------------------------------------------------------------------
# zeta series
# --------------------------------------------------------------------------


def zeta_series_K(c: CurveSpec, T: int = DEFAULT_TRUNCATION) -> TruncatedIntSeries:
    """b_k = number of effective divisors of degree k, for k <= T."""
    P = TruncatedIntSeries.from_poly(c.weil_coeffs, T)
    return P * TruncatedIntSeries.geometric(1, T) * TruncatedIntSeries.geometric(c.q, T)


def zeta_series_S(c: CurveSpec, s: SSpec, T: int = DEFAULT_TRUNCATION) -> TruncatedIntSeries:
    """b_{S,k} = number of integral ideals of O_S of degree k."""
    check_compatible(c, s)
    return zeta_series_K(c, T) * TruncatedIntSeries.from_poly(s.G_coeffs(), T)


def mobius_coeffs(c: CurveSpec, s: SSpec, T: int = DEFAULT_TRUNCATION) -> TruncatedIntSeries:
    """mu_{S,k}: coefficients of 1/Z_S, i.e. sums of mu_S over degree-k divisors."""
    return zeta_series_S(c, s, T).inverse()


def j_S(c: CurveSpec, s: SSpec, n: int, T: int | None = None) -> int:
    """Number of integral ideals of O_S of degree <= n (0 for n < 0)."""
    if n < 0:
        return 0
    if T is None:
        T = default_truncation(n, c.genus)
    series = zeta_series_S(c, s, T)
    return sum(series[k] for k in range(n + 1))


def j_S_table(c: CurveSpec, s: SSpec, n_max: int) -> list[int]:
    """``[j_S(0), ..., j_S(n_max)]`` from a single series expansion."""
    if n_max < 0:
        return []
    T = default_truncation(n_max, c.genus)
    return list(zeta_series_S(c, s, T).partial_sums().coeffs[: n_max + 1])


def zeta_S_value(c: CurveSpec, s: SSpec, t: int) -> Fraction:
    """Exact zeta_S(t) = Z_S(q^{-t}) for an integer t >= 2."""
    if t <= 1:
        raise ValueError(f"zeta_S is evaluated only at integers t >= 2, got {t}")
    check_compatible(c, s)
    x = Fraction(1, c.q**t)
    return c.weil_at(x) * s.G_at(x) / ((1 - x) * (1 - c.q * x))


def leading_constant(c: CurveSpec, s: SSpec) -> Fraction:
    """The constant c_S with j_S(n) - c_S q^n bounded.

    Comes from the residue of Z_S(z) / (1 - z) at the simple pole z = 1/q:
    ``c_S = q^2 P(1/q) G_S(1/q) / (q - 1)^2``.
    """
    check_compatible(c, s)
    q = c.q
    x = Fraction(1, q)
    return q * q * c.weil_at(x) * s.G_at(x) / (q - 1) ** 2


def class_number_constant(c: CurveSpec, s: SSpec) -> Fraction:
    """``h_K q^{1-g} G_S(1/q) / (q-1)^2``, the constant written via the class
    number.  It is ``leading_constant / q`` on every curve."""
    q, g = c.q, c.genus
    return c.class_number * Fraction(q) ** (1 - g) * s.G_at(Fraction(1, q)) / (q - 1) ** 2


def residue_at_one(c: CurveSpec, s: SSpec) -> Fraction:
    """Eventual value of j_S(n) - c_S q^n.

    When S is a single place of degree d the partial-sum generating function
    has a simple pole at z = 1 contributing ``-h_K d / (q - 1)``; with two or
    more places G_S kills the pole and the difference is eventually 0.
    """
    if len(s.place_degrees) == 1:
        return Fraction(-c.class_number * s.place_degrees[0], c.q - 1)
    return Fraction(0)


def stabilization_index(c: CurveSpec, s: SSpec) -> int:
    """Smallest n from which j_S(n) - c_S q^n equals ``residue_at_one``."""
    # the polynomial part of P G / ((1-z)^2 (1-qz)) has degree 2g + sum(d) - 3
    return max(0, 2 * c.genus + sum(s.place_degrees) - 2)


def eq3_bound(c: CurveSpec, n: int) -> Fraction:
    """Upper bound h_K (q^{n-g+1} - 1)/(q - 1) on effective divisors of degree n,
    valid for n > 2g - 2."""
    q, g = c.q, c.genus
    return Fraction(c.class_number) * (Fraction(q) ** (n - g + 1) - 1) / (q - 1)


def euler_product_truncated(c: CurveSpec, s: SSpec, t: int, D: int) -> Fraction:
    """prod over places outside S of degree <= D of (1 - q^{-t d})^{-1}."""
    counts = place_counts(c, D)
    x = Fraction(1, c.q**t)
    acc = Fraction(1)
    for d in range(1, D + 1):
        a_sd = counts[d - 1] - s.count_of_degree(d)
        acc /= (1 - x**d) ** a_sd
    return acc


def euler_tail_bound(c: CurveSpec, t: int, D: int) -> Fraction:
    """Bound y with zeta_S(t) / truncated product <= 1/(1 - y) when y < 1.

    Uses a_{S,d} <= b_{S,d} <= B q^d with B = h_K q^{1-g}/(q-1) for d > 2g-2,
    and -log(1 - x^d) <= x^d / (1 - x^d); needs D >= 2g - 2 and t >= 2.
    """
    if D < 2 * c.genus - 2:
        raise ValueError("tail bound needs D >= 2g - 2")
    q = c.q
    B = Fraction(c.class_number) * Fraction(q) ** (1 - c.genus) / (q - 1)
    r = Fraction(1, q ** (t - 1))
    x_next = Fraction(1, q ** (t * (D + 1)))
    return B * r ** (D + 1) / (1 - r) / (1 - x_next)


def series_inverse_defect(b: Iterable[int], mu: Iterable[int]) -> list[int]:
    """``[sum_{j<=k} mu_j b_{k-j} - delta_{k,0}]`` for every k in range."""
    b, mu = list(b), list(mu)
    T = min(len(b), len(mu)) - 1
    return [sum(mu[j] * b[k - j] for j in range(k + 1)) - (1 if k == 0 else 0)
            for k in range(T + 1)]
