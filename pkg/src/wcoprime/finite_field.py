"""Arithmetic in F_q and in the polynomial ring F_q[X].

Elements of F_q (q = p^kappa) are stored as integer codes in [0, q): the
base-p digits of a code are the coefficients of its residue polynomial
modulo the field's defining modulus, constant term first.  Polynomials over
F_q are immutable coefficient tuples of such codes, constant term first,
with no trailing zeros.  The zero polynomial has degree ``NEG_INF``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .budget import charge

NEG_INF = float("-inf")
MAX_Q = 2**16

# monic irreducible moduli over F_p, constant term first
BUILTIN_MODULI = {
    4: (1, 1, 1),     # X^2 + X + 1 over F_2
    8: (1, 1, 0, 1),  # X^3 + X + 1 over F_2
    9: (1, 0, 1),     # X^2 + 1 over F_3
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, kappa)`` with ``q == p**kappa``; ``ValueError`` otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    if not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    kappa, r = 0, q
    while r % p == 0:
        r //= p
        kappa += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, kappa


def _prime_poly_irreducible(p: int, coeffs: Sequence[int]) -> bool:
    # trial division over F_p by every monic polynomial of degree <= deg/2
    base = FieldSpec(p)
    f = Poly(base, coeffs)
    d = f.degree
    for k in range(1, d // 2 + 1):
        for g in monic_polys(base, k):
            if (f % g).is_zero:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_q, q = p^kappa, given by a modulus over F_p."""

    p: int
    kappa: int = 1
    modulus: Optional[tuple[int, ...]] = None
    _tables: dict = field(default_factory=dict, init=False, repr=False,
                          compare=False, hash=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.kappa < 1:
            raise ValueError("kappa must be >= 1")
        if self.q > MAX_Q:
            raise ValueError(f"q = {self.q} exceeds the supported maximum {MAX_Q}")
        if self.kappa == 1:
            if self.modulus is not None:
                raise ValueError("a prime field takes no modulus")
            return
        mod = self.modulus
        if mod is None:
            mod = BUILTIN_MODULI.get(self.q) or _first_irreducible(self.p, self.kappa)
            object.__setattr__(self, "modulus", tuple(mod))
        else:
            mod = tuple(int(c) for c in mod)
            object.__setattr__(self, "modulus", mod)
            if len(mod) != self.kappa + 1 or mod[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {self.kappa}")
            if any(not 0 <= c < self.p for c in mod):
                raise ValueError(f"modulus coefficients must lie in [0, {self.p})")
            if not _prime_poly_irreducible(self.p, mod):
                raise ValueError("modulus is reducible over F_p")

    @classmethod
    def of_order(cls, q: int, modulus=None) -> "FieldSpec":
        p, kappa = prime_power(q)
        return cls(p, kappa, None if kappa == 1 else modulus)

    @property
    def q(self) -> int:
        return self.p ** self.kappa

    def __repr__(self):
        if self.kappa == 1:
            return f"F_{self.p}"
        return f"F_{self.q}[mod {self.modulus}]"

    # -- element arithmetic on codes ---------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.kappa):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        code = 0
        for d in reversed(ds):
            code = code * self.p + d
        return code

    def add(self, a: int, b: int) -> int:
        if self.kappa == 1:
            return (a + b) % self.p
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.kappa == 1:
            return -a % self.p
        p = self.p
        return self.from_digits([-x % p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.kappa == 1:
            return a * b % self.p
        table = self._mul_table()
        if table is not None:
            return table[a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self.kappa == 1:
            return pow(a, self.p - 2, self.p)
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _mul_slow(self, a: int, b: int) -> int:
        p, k, mod = self.p, self.kappa, self.modulus
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top]
            if c:
                for i in range(k + 1):
                    prod[top - k + i] = (prod[top - k + i] - c * mod[i]) % p
        return self.from_digits(prod[:k])

    def _mul_table(self):
        if self.q > 256:
            return None
        table = self._tables.get("mul")
        if table is None:
            q = self.q
            table = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
            self._tables["mul"] = table
        return table

    def elements(self) -> range:
        return range(self.q)


@functools.lru_cache(maxsize=None)
def _first_irreducible(p: int, kappa: int) -> tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=kappa):
        cand = tail + (1,)
        if cand[0] != 0 and _prime_poly_irreducible(p, cand):
            return cand
    raise AssertionError("an irreducible polynomial always exists")


@dataclass(frozen=True)
class FqElem:
    """A single element of F_q; thin wrapper over its integer code."""

    field: FieldSpec
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.q:
            raise ValueError(f"code {self.code} out of range for {self.field}")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.code))

    def __add__(self, other):
        return FqElem(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        return FqElem(self.field, self.field.sub(self.code, other.code))

    def __mul__(self, other):
        return FqElem(self.field, self.field.mul(self.code, other.code))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.code))

    def inverse(self):
        return FqElem(self.field, self.field.inv(self.code))

    def __bool__(self):
        return self.code != 0


class Poly:
    """Immutable polynomial over F_q, coefficients constant term first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Sequence[int] = ()):
        cs = list(coeffs)
        q = field.q
        for c in cs:
            if not 0 <= c < q:
                raise ValueError(f"coefficient {c} out of range for {field}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def const(cls, field: FieldSpec, c: int) -> "Poly":
        return cls(field, (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> "Poly":
        if self.is_zero or self.lead == 1:
            return self
        inv = self.field.inv(self.lead)
        return self.scale(inv)

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(a, c) for a in self.coeffs])

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(f)
        out = [0] * (len(a) + len(b) - 1)
        if f.kappa == 1:
            p = f.p
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return Poly(f, [c % p for c in out])
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly(f, out)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(self.field, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Poly(f), self
        inv_lead = f.inv(other.lead)
        quot = [0] * (len(rem) - db)
        bc = other.coeffs
        for top in range(len(rem) - 1, db - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            t = f.mul(c, inv_lead)
            quot[top - db] = t
            for i, y in enumerate(bc):
                rem[top - db + i] = f.sub(rem[top - db + i], f.mul(t, y))
        return Poly(f, quot), Poly(f, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field.p, self.field.kappa, self.coeffs))

    def sort_key(self):
        return (len(self.coeffs), self.coeffs)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def all_polys(f: FieldSpec, max_degree: int) -> Iterator[Poly]:
    """Every polynomial of degree <= max_degree, zero first, lexicographic
    on the coefficient vector read from the top coefficient down."""
    if max_degree < 0:
        yield Poly(f)
        return
    for cs in itertools.product(range(f.q), repeat=max_degree + 1):
        yield Poly(f, cs[::-1])


def monic_polys(f: FieldSpec, d: int) -> Iterator[Poly]:
    """Monic polynomials of exact degree d, lexicographic on coefficients."""
    for tail in itertools.product(range(f.q), repeat=d):
        yield Poly(f, tail + (1,))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of ``a`` and ``b`` by the Euclidean algorithm."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


@functools.lru_cache(maxsize=None)
def _irreducibles_cached(f: FieldSpec, d: int) -> tuple[Poly, ...]:
    smaller = [g for k in range(1, d // 2 + 1) for g in _irreducibles_cached(f, k)]
    out = []
    for cand in monic_polys(f, d):
        if all(not (cand % g).is_zero for g in smaller):
            out.append(cand)
    out.sort(key=lambda g: g.coeffs)
    return tuple(out)


def irreducibles_of_degree(f: FieldSpec, d: int, budget=None) -> list[Poly]:
    """All monic irreducibles of degree ``d`` over ``f``, sorted by coefficient
    vector (constant term first)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    charge(f.q ** d, budget, f"irreducible enumeration over {f} in degree {d}")
    return list(_irreducibles_cached(f, d))


def is_irreducible(a: Poly) -> bool:
    if a.is_zero or a.degree < 1:
        return False
    fs = factor(a)
    return len(fs) == 1 and fs[0][1] == 1


def factor(a: Poly, budget=None) -> list[tuple[Poly, int]]:
    """Monic irreducible factorization of a nonzero polynomial by trial
    division.  Returns ``[(factor, multiplicity), ...]`` sorted by degree then
    coefficients; the leading coefficient of ``a`` is dropped."""
    if a.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    f = a.field
    rem = a.monic()
    out = []
    d = 1
    while rem.degree >= 2 * d:
        for g in irreducibles_of_degree(f, d, budget):
            mult = 0
            while True:
                quo, r = divmod(rem, g)
                if not r.is_zero:
                    break
                rem = quo
                mult += 1
            if mult:
                out.append((g, mult))
            if rem.degree < 2 * d:
                break
        d += 1
    if rem.degree >= 1:
        # no factor of degree <= deg/2 left, so the cofactor is irreducible
        out.append((rem, 1))
        out.sort(key=lambda t: t[0].sort_key())
    return out
