"""Effective divisors supported outside S, modelled by place degrees only.

Nonzero integral ideals of O_S correspond to effective divisors built from
the places outside S.  Ideal-level counting only sees the degrees of those
places, so a place is an abstract token ``(degree, index)`` and a
``PlaceTable`` records how many places of each degree exist outside S.
This works at any genus without a model of the curve.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .budget import charge
from .kernels import count_disjoint_tuples
from .zeta import CurveSpec, SSpec, check_compatible, place_counts


@dataclass(frozen=True, order=True)
class AbstractPlace:
    degree: int
    index: int

    def __repr__(self):
        return f"P{self.degree}.{self.index}"


@dataclass(frozen=True)
class PlaceTable:
    """``counts[d - 1]`` places of degree d outside S, for d <= d_max."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("place counts must be nonnegative")

    @classmethod
    def from_curve(cls, c: CurveSpec, s: SSpec, d_max: int) -> "PlaceTable":
        check_compatible(c, s)
        a = place_counts(c, max(d_max, max(s.place_degrees)))
        return cls(tuple(a[d - 1] - s.count_of_degree(d) for d in range(1, d_max + 1)))

    @property
    def d_max(self) -> int:
        return len(self.counts)

    def places(self, max_degree: int | None = None) -> list[AbstractPlace]:
        top = self.d_max if max_degree is None else min(max_degree, self.d_max)
        return [AbstractPlace(d, i) for d in range(1, top + 1) for i in range(self.counts[d - 1])]

    def __contains__(self, place: AbstractPlace) -> bool:
        return (1 <= place.degree <= self.d_max
                and 0 <= place.index < self.counts[place.degree - 1])


@dataclass(frozen=True)
class Divisor:
    """Effective divisor: sorted ``(place, coefficient)`` entries, all > 0."""

    entries: tuple[tuple[AbstractPlace, int], ...] = ()

    def __post_init__(self):
        merged: dict[AbstractPlace, int] = {}
        for place, c in self.entries:
            merged[place] = merged.get(place, 0) + int(c)
        if any(c < 0 for c in merged.values()):
            raise ValueError("only effective divisors are modelled")
        object.__setattr__(self, "entries",
                           tuple(sorted((p, c) for p, c in merged.items() if c)))

    @classmethod
    def of(cls, coeffs: Mapping[AbstractPlace, int]) -> "Divisor":
        return cls(tuple(coeffs.items()))

    @classmethod
    def zero(cls) -> "Divisor":
        return cls(())

    @property
    def degree(self) -> int:
        return sum(p.degree * c for p, c in self.entries)

    @property
    def support(self) -> tuple[AbstractPlace, ...]:
        return tuple(p for p, _ in self.entries)

    def coeff(self, place: AbstractPlace) -> int:
        for p, c in self.entries:
            if p == place:
                return c
        return 0

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(self.entries + other.entries)

    def __le__(self, other: "Divisor") -> bool:
        return all(c <= other.coeff(p) for p, c in self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def sort_key(self):
        return (self.degree, tuple((p.degree, p.index, c) for p, c in self.entries))

    def __repr__(self):
        if not self.entries:
            return "0"
        return " + ".join(repr(p) if c == 1 else f"{c}*{p!r}" for p, c in self.entries)


def mobius(d: Divisor) -> int:
    """mu_S(D): 1 for D = 0, (-1)^t for squarefree D with t places, else 0."""
    if any(c > 1 for _, c in d.entries):
        return 0
    return -1 if len(d.entries) % 2 else 1


def _effective_of_degree(places: Sequence[AbstractPlace], k: int, start: int = 0):
    # DFS over places in order with ascending coefficients gives lexicographic
    # order on the (degree, index, coefficient) entry lists
    if k == 0:
        yield ()
        return
    for i in range(start, len(places)):
        p = places[i]
        if p.degree > k:
            break
        for c in range(1, k // p.degree + 1):
            for rest in _effective_of_degree(places, k - c * p.degree, i + 1):
                yield ((p, c),) + rest


def effective_of_degree(t: PlaceTable, k: int) -> Iterator[Divisor]:
    if k > t.d_max:
        raise ValueError(f"place table of depth {t.d_max} cannot enumerate degree {k}")
    places = t.places(k)
    for entries in _effective_of_degree(places, k):
        yield Divisor(entries)


def enumerate_effective(t: PlaceTable, n: int) -> Iterator[Divisor]:
    """Every effective divisor of degree <= n once, by degree then entries."""
    if n < 0:
        return
    if n > t.d_max:
        raise ValueError(f"place table of depth {t.d_max} cannot enumerate degree {n}")
    for k in range(n + 1):
        yield from effective_of_degree(t, k)


def is_w_coprime(ds: Sequence[Divisor], w: int) -> bool:
    """False iff some place has coefficient >= w in every divisor of the tuple."""
    if not ds:
        raise ValueError("need a nonempty tuple of divisors")
    if w < 1:
        raise ValueError("w must be >= 1")
    common = set(ds[0].support)
    for d in ds[1:]:
        common &= set(d.support)
    return not any(all(d.coeff(p) >= w for d in ds) for p in common)


def _bad_mask(d: Divisor, w: int, bit: dict) -> int:
    mask = 0
    for p, c in d.entries:
        if c >= w:
            mask |= 1 << bit.setdefault(p, len(bit))
    return mask


def brute_Q(t: PlaceTable, n: int, m: int, w: int, budget=None) -> int:
    """Number of m-tuples of effective divisors of degree <= n that are
    w-coprime, by enumerating ideals and testing every tuple."""
    if m < 1 or w < 1:
        raise ValueError("m and w must be >= 1")
    if n < 0:
        return 0
    ideals = list(enumerate_effective(t, n))
    charge(len(ideals) ** m, budget, f"brute_Q over {len(ideals)}^{m} tuples")
    bit: dict = {}
    hist = Counter(_bad_mask(d, w, bit) for d in ideals)
    masks = sorted(hist)
    return count_disjoint_tuples(masks, [hist[k] for k in masks], m)


def sub_divisors(d: Divisor) -> Iterator[Divisor]:
    """All D' with 0 <= D' <= d."""
    places = [p for p, _ in d.entries]
    ranges = [range(c + 1) for _, c in d.entries]
    for cs in itertools.product(*ranges):
        yield Divisor(tuple(zip(places, cs)))


def mobius_inversion_check(d: Divisor) -> bool:
    """sum_{0 <= D' <= d} mu_S(D') == (1 if d == 0 else 0)."""
    total = sum(mobius(e) for e in sub_divisors(d))
    return total == (1 if d.is_zero() else 0)


@dataclass(frozen=True)
class IEInstance:
    """A finite set {0, ..., size-1} with properties attached to distinct places.

    ``properties[j]`` is ``(place, frozenset of elements having property j)``.
    """

    size: int
    properties: tuple[tuple[AbstractPlace, frozenset], ...]

    def __post_init__(self):
        places = [p for p, _ in self.properties]
        if len(set(places)) != len(places):
            raise ValueError("properties must be attached to distinct places")
        for _, members in self.properties:
            if any(not 0 <= a < self.size for a in members):
                raise ValueError("property members outside the base set")


def inclusion_exclusion_sides(inst: IEInstance) -> tuple[int, int]:
    """``(direct, sieve)`` where ``direct`` counts elements with no property and
    ``sieve`` is sum over subsets I of mu_S(D_I) * A(I)."""
    if len(inst.properties) > 12:
        raise ValueError("at most 12 properties")
    direct = sum(1 for a in range(inst.size)
                 if not any(a in members for _, members in inst.properties))
    sieve = 0
    k = len(inst.properties)
    for r in range(k + 1):
        for I in itertools.combinations(range(k), r):
            D_I = Divisor(tuple((inst.properties[j][0], 1) for j in I))
            both = set(range(inst.size))
            for j in I:
                both &= inst.properties[j][1]
            sieve += mobius(D_I) * len(both)
    return direct, sieve


def inclusion_exclusion_check(inst: IEInstance) -> bool:
    direct, sieve = inclusion_exclusion_sides(inst)
    return direct == sieve


def divisor_counts(t: PlaceTable, k_max: int) -> tuple[list[int], list[int]]:
    """Per-degree ``(count, mobius sum)`` of effective divisors by enumeration."""
    counts, mus = [], []
    for k in range(k_max + 1):
        n = s = 0
        for d in effective_of_degree(t, k):
            n += 1
            s += mobius(d)
        counts.append(n)
        mus.append(s)
    return counts, mus

