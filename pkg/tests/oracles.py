"""Independent brute-force oracles used to freeze expected values.

Nothing here goes through the zeta series, the Moebius series or the tuple
kernels: each oracle counts its objects directly.
"""

import itertools
from fractions import Fraction

from wcoprime.finite_field import FieldSpec, Poly, all_polys, monic_polys


def affine_points_y2_plus_y_eq_x3(f: FieldSpec) -> int:
    """Solutions of y^2 + y = x^3 over the field ``f`` (characteristic 2)."""
    count = 0
    for x in f.elements():
        x3 = f.mul(x, f.mul(x, x))
        for y in f.elements():
            if f.add(f.mul(y, y), y) == x3:
                count += 1
    return count


def weierstrass_point_count(f: FieldSpec, a: tuple) -> int:
    """Projective points of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over ``f``.

    Coefficients are integers in F_p and embed as constants of ``f``.
    """
    a1, a2, a3, a4, a6 = (c % f.p for c in a)
    count = 1
    for x in f.elements():
        x2 = f.mul(x, x)
        rhs = f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.add(f.mul(a4, x), a6))
        for y in f.elements():
            lhs = f.add(f.mul(y, y), f.add(f.mul(f.mul(a1, x), y), f.mul(a3, y)))
            if lhs == rhs:
                count += 1
    return count


def e2_point_counts(n_max: int) -> list[int]:
    """N_n for the projective curve y^2 + y = x^3 over F_{2^n} (one point at infinity)."""
    return [affine_points_y2_plus_y_eq_x3(FieldSpec(2, n)) + 1 for n in range(1, n_max + 1)]


def reducible_monics(f: FieldSpec, d: int) -> set:
    """Products of two monic polynomials of positive degree, total degree d."""
    out = set()
    for i in range(1, d // 2 + 1):
        for a in monic_polys(f, i):
            for b in monic_polys(f, d - i):
                out.add((a * b).coeffs)
    return out


def irreducible_count_by_sieve(f: FieldSpec, d: int) -> int:
    red = reducible_monics(f, d)
    return sum(1 for g in monic_polys(f, d) if g.coeffs not in red)


def necklace(q: int, d: int) -> int:
    def mu(n):
        res, k = 1, 2
        while k * k <= n:
            if n % k == 0:
                n //= k
                if n % k == 0:
                    return 0
                res = -res
            k += 1
        return -res if n > 1 else res
    return sum(mu(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0) // d


def monic_count_coprime_to(f: FieldSpec, d: int, avoid) -> int:
    """Monic polynomials of degree d not divisible by any polynomial in ``avoid``."""
    return sum(1 for g in monic_polys(f, d)
               if all(not (g % a).is_zero for a in avoid))


def squarefree_monic_count(f: FieldSpec, max_degree: int) -> int:
    """Monic squarefree polynomials of degree <= max_degree (trial by squares)."""
    count = 0
    for d in range(max_degree + 1):
        for g in monic_polys(f, d):
            ok = True
            for k in range(1, d // 2 + 1):
                for h in monic_polys(f, k):
                    if (g % (h * h)).is_zero:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                count += 1
    return count


def monic_tuples_w_free_gcd(f: FieldSpec, n: int, m: int, w: int) -> int:
    """m-tuples of monic polynomials of degree <= n whose gcd has no w-th power
    of a nonconstant polynomial as a factor (ideals of F_q[X], S = {inf})."""
    from wcoprime.finite_field import poly_gcd
    monics = [g for d in range(n + 1) for g in monic_polys(f, d)]
    powers = [h ** w for d in range(1, n // w + 1) for h in monic_polys(f, d)]
    count = 0
    for tup in itertools.product(monics, repeat=m):
        g = tup[0]
        for h in tup[1:]:
            g = poly_gcd(g, h)
        if all(not (g % pw).is_zero for pw in powers if pw.degree <= g.degree):
            count += 1
    return count


def naive_gcd_check(a: Poly, b: Poly, g: Poly) -> bool:
    """g divides a and b and every monic common divisor of degree <= min divides g."""
    if not (a % g).is_zero or not (b % g).is_zero:
        return False
    top = min(d for d in (a.degree, b.degree) if d != float("-inf"))
    for d in range(1, int(top) + 1):
        for h in monic_polys(a.field, d):
            if (a % h).is_zero and (b % h).is_zero and not (g % h).is_zero:
                return False
    return True


def partial_sum_closed_form_rational(q: int, n: int) -> int:
    """Monic polynomials of degree <= n over F_q: (q^{n+1} - 1)/(q - 1)."""
    return (q ** (n + 1) - 1) // (q - 1)


def geometric_zeta_value(q: int, t: int) -> Fraction:
    """zeta of F_q[X] at t: 1/(1 - q^{1-t})."""
    return 1 / (1 - Fraction(q) ** (1 - t))


def all_tuples(items, m):
    return itertools.product(items, repeat=m)


__all__ = [
    "affine_points_y2_plus_y_eq_x3", "weierstrass_point_count", "e2_point_counts", "irreducible_count_by_sieve",
    "necklace", "monic_count_coprime_to", "squarefree_monic_count",
    "naive_gcd_check", "monic_tuples_w_free_gcd", "partial_sum_closed_form_rational", "geometric_zeta_value",
    "all_tuples", "all_polys",
]
