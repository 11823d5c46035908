import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import irreducible_count_by_sieve, naive_gcd_check, necklace
from wcoprime.errors import BudgetExceeded
from wcoprime.finite_field import (
    BUILTIN_MODULI,
    NEG_INF,
    FieldSpec,
    Poly,
    all_polys,
    factor,
    irreducibles_of_degree,
    is_irreducible,
    monic_polys,
    poly_gcd,
    prime_power,
)

F2 = FieldSpec(2)
F3 = FieldSpec(3)


def P(f, *coeffs):
    return Poly(f, coeffs)


X2 = P(F2, 0, 1)
ONE2 = P(F2, 1)


class TestField:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
    def test_field_axioms(self, q):
        f = FieldSpec.of_order(q)
        els = list(f.elements())
        assert len(els) == q
        for a in els:
            assert f.add(a, f.neg(a)) == 0
            if a:
                assert f.mul(a, f.inv(a)) == 1
        for a, b, c in itertools.islice(itertools.product(els, repeat=3), 2000):
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))

    @pytest.mark.parametrize("q", sorted(BUILTIN_MODULI))
    def test_builtin_moduli_irreducible(self, q):
        p, kappa = prime_power(q)
        mod = P(FieldSpec(p), *BUILTIN_MODULI[q])
        assert mod.degree == kappa and mod.is_monic and is_irreducible(mod)

    def test_multiplicative_group_cyclic_order(self):
        f = FieldSpec.of_order(9)
        for a in range(1, 9):
            x = 1
            for _ in range(8):
                x = f.mul(x, a)
            assert x == 1

    @pytest.mark.parametrize("q", [1, 6, 12, 2**17])
    def test_rejects_bad_orders(self, q):
        with pytest.raises(ValueError):
            FieldSpec.of_order(q)

    def test_rejects_reducible_modulus(self):
        with pytest.raises(ValueError):
            FieldSpec.of_order(4, [1, 0, 1])


class TestPoly:
    def test_zero_degree_marker(self):
        assert Poly(F2).degree == NEG_INF
        assert Poly(F2, (0, 0)).is_zero

    def test_normalized(self):
        assert P(F2, 1, 1, 0, 0).coeffs == (1, 1)

    def test_repr(self):
        assert repr(P(F2, 1, 1, 1)) == "X^2 + X + 1"

    def test_divmod_reconstructs(self):
        for a in all_polys(F3, 3):
            for b in all_polys(F3, 2):
                if b.is_zero:
                    continue
                qu, r = divmod(a, b)
                assert qu * b + r == a
                assert r.degree < b.degree


class TestGcd:
    def test_examples(self):
        assert poly_gcd(X2, X2 + ONE2) == ONE2
        a = P(F2, 0, 1, 1)
        assert poly_gcd(a, Poly(F2)) == a
        assert poly_gcd(P(F2, 1, 0, 1), P(F2, 1, 1)) == P(F2, 1, 1)

    def test_made_monic(self):
        assert poly_gcd(P(F3, 0, 2), Poly(F3)) == P(F3, 0, 1)

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            poly_gcd(Poly(F2), Poly(F2))

    @pytest.mark.parametrize("f,deg", [(F2, 4), (F3, 2)])
    def test_exhaustive_grid(self, f, deg):
        nonzero = [a for a in all_polys(f, deg) if not a.is_zero]
        for a in nonzero:
            for b in nonzero:
                g = poly_gcd(a, b)
                assert g.is_monic
                assert naive_gcd_check(a, b, g)

    def test_q3_degree4_sample(self):
        polys = [a for a in all_polys(F3, 4) if not a.is_zero][::7]
        for a, b in zip(polys, polys[1:] + polys[:1]):
            assert naive_gcd_check(a, b, poly_gcd(a, b))


class TestIrreducibles:
    def test_examples(self):
        assert irreducibles_of_degree(F2, 1) == [X2, X2 + ONE2]
        assert irreducibles_of_degree(F2, 2) == [P(F2, 1, 1, 1)]
        assert len(irreducibles_of_degree(F2, 3)) == 2

    @pytest.mark.parametrize("q", [2, 3, 4])
    @pytest.mark.parametrize("d", range(1, 7))
    def test_necklace_count(self, q, d):
        assert len(irreducibles_of_degree(FieldSpec.of_order(q), d)) == necklace(q, d)

    @pytest.mark.parametrize("q,d", [(2, 4), (2, 5), (3, 3), (4, 3)])
    def test_matches_sieve(self, q, d):
        f = FieldSpec.of_order(q)
        assert len(irreducibles_of_degree(f, d)) == irreducible_count_by_sieve(f, d)

    def test_sorted_lexicographically(self):
        irr = irreducibles_of_degree(F3, 3)
        assert [p.coeffs for p in irr] == sorted(p.coeffs for p in irr)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            irreducibles_of_degree(FieldSpec(3), 7, budget=100)


class TestFactor:
    def test_examples(self):
        assert factor(P(F2, 1, 0, 1)) == [(P(F2, 1, 1), 2)]
        assert factor(ONE2) == []
        assert factor(P(F2, 0, 1, 0, 1)) == [(X2, 1), (P(F2, 1, 1), 2)]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor(Poly(F2))

    @pytest.mark.parametrize("f,deg", [(F2, 5), (F3, 4)])
    def test_reconstruction_exhaustive(self, f, deg):
        for a in all_polys(f, deg):
            if a.is_zero:
                continue
            prod = Poly.const(f, a.lead)
            for g, e in factor(a):
                assert g.is_monic and is_irreducible(g) and e >= 1
                prod = prod * g ** e
            assert prod == a

    def test_q3_degree5_reconstruction(self):
        for a in itertools.islice(monic_polys(F3, 5), 0, None, 3):
            prod = Poly.const(F3, 1)
            for g, e in factor(a):
                prod = prod * g ** e
            assert prod == a


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=6), st.lists(st.integers(0, 2), max_size=6),
       st.lists(st.integers(0, 2), max_size=4))
def test_gcd_of_multiples_contains_common_factor(a, b, c):
    pa, pb, pc = Poly(F3, a), Poly(F3, b), Poly(F3, c)
    if pc.is_zero or (pa.is_zero and pb.is_zero):
        return
    g = poly_gcd(pa * pc, pb * pc)
    assert (g % pc.monic()).is_zero
