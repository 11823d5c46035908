import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CURVE_S_PAIRS, pair_id
from oracles import monic_tuples_w_free_gcd
from wcoprime.divisors import (
    AbstractPlace,
    Divisor,
    IEInstance,
    PlaceTable,
    brute_Q,
    divisor_counts,
    effective_of_degree,
    enumerate_effective,
    inclusion_exclusion_check,
    inclusion_exclusion_sides,
    is_w_coprime,
    mobius,
    mobius_inversion_check,
)
from wcoprime.errors import BudgetExceeded
from wcoprime.finite_field import FieldSpec
from wcoprime.zeta import E2_SUPERSINGULAR, SSpec, mobius_coeffs, rational_curve, zeta_series_S

p, q, r = AbstractPlace(1, 0), AbstractPlace(1, 1), AbstractPlace(2, 0)
F2_MODEL = PlaceTable((2, 1, 2))
E2_MODEL = PlaceTable((2, 3))


def D(*entries):
    return Divisor(tuple(entries))


def naive_Q(t, n, m, w):
    ideals = list(enumerate_effective(t, n))
    return sum(is_w_coprime(tup, w) for tup in itertools.product(ideals, repeat=m))


class TestDivisor:
    def test_merges_and_drops_zeros(self):
        d = D((p, 1), (q, 0), (p, 2))
        assert d.entries == ((p, 3),)
        assert d.degree == 3

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            D((p, -1))

    def test_order_and_add(self):
        assert D((p, 1)) <= D((p, 2), (q, 1))
        assert not D((r, 1)) <= D((p, 2))
        assert D((p, 1)) + D((r, 1)) == D((r, 1), (p, 1))

    def test_repr(self):
        assert repr(D((p, 2), (r, 1))) == "2*P1.0 + P2.0"
        assert repr(Divisor.zero()) == "0"


class TestMobius:
    def test_examples(self):
        assert mobius(Divisor.zero()) == 1
        assert mobius(D((p, 1), (q, 1))) == 1
        assert mobius(D((p, 2))) == 0
        assert mobius(D((r, 1))) == -1

    @pytest.mark.parametrize("table", [F2_MODEL, E2_MODEL], ids=["F2", "E2"])
    def test_multiplicative_exhaustive(self, table):
        divs = list(enumerate_effective(table, min(4, table.d_max)))
        for a in divs:
            for b in divs:
                if set(a.support) & set(b.support):
                    continue
                assert mobius(a + b) == mobius(a) * mobius(b)

    def test_inversion_examples(self):
        assert mobius_inversion_check(Divisor.zero())
        assert mobius_inversion_check(D((p, 2)))
        assert mobius_inversion_check(D((p, 1), (q, 1)))

    @pytest.mark.parametrize("table", [F2_MODEL, E2_MODEL], ids=["F2", "E2"])
    def test_inversion_exhaustive(self, table):
        assert all(mobius_inversion_check(d)
                   for d in enumerate_effective(table, table.d_max))


class TestEnumeration:
    def test_examples(self):
        assert len(list(enumerate_effective(F2_MODEL, 2))) == 7
        assert list(enumerate_effective(F2_MODEL, 0)) == [Divisor.zero()]
        assert len(list(enumerate_effective(E2_MODEL, 2))) == 9

    def test_too_shallow(self):
        with pytest.raises(ValueError):
            list(enumerate_effective(E2_MODEL, 3))

    def test_each_once_and_ordered(self):
        t = PlaceTable((2, 1, 2, 3))
        divs = list(enumerate_effective(t, 4))
        assert len(set(divs)) == len(divs)
        assert divs == sorted(divs, key=Divisor.sort_key)
        for d in divs:
            assert all(pl in t for pl in d.support)

    @pytest.mark.parametrize("pair", CURVE_S_PAIRS, ids=pair_id)
    def test_counts_match_series(self, pair):
        c, s = pair
        counts, mus = divisor_counts(PlaceTable.from_curve(c, s, 8), 8)
        b, mu = zeta_series_S(c, s, 8), mobius_coeffs(c, s, 8)
        assert counts == list(b)
        assert mus == list(mu)

    def test_degree_k_by_hand(self):
        # degree 3 over F2_MODEL: 4 (linear^3 combos) + 2 (linear * quad) + 2 cubics
        assert len(list(effective_of_degree(F2_MODEL, 3))) == 8


class TestWCoprime:
    def test_examples(self):
        z = Divisor.zero()
        assert is_w_coprime([z, z, z], 1) and is_w_coprime([z], 3)
        assert not is_w_coprime([D((p, 2)), D((p, 3))], 2)
        assert not is_w_coprime([D((p, 1), (q, 1)), D((p, 1))], 1)
        assert is_w_coprime([D((p, 1)), D((q, 1))], 1)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            is_w_coprime([], 1)


class TestBruteQ:
    @pytest.mark.parametrize("table,n,m,w,expected", [
        (F2_MODEL, 1, 2, 1, 7),
        (F2_MODEL, 2, 1, 2, 5),
        (E2_MODEL, 2, 2, 1, 61),
    ])
    def test_examples(self, backend, table, n, m, w, expected):
        assert brute_Q(table, n, m, w) == expected

    @pytest.mark.parametrize("n,m,w", [(n, m, w) for n in range(4) for m in (1, 2, 3)
                                       for w in (1, 2) if n * m <= 6])
    def test_against_polynomial_gcds(self, backend, n, m, w):
        f = FieldSpec(2)
        t = PlaceTable.from_curve(rational_curve(2), SSpec((1,)), max(n, 1))
        assert brute_Q(t, n, m, w) == monic_tuples_w_free_gcd(f, n, m, w)

    @pytest.mark.parametrize("n,m,w", [(n, m, w) for n in range(4) for m in (1, 2, 3)
                                       for w in (1, 2)])
    def test_against_naive_tuple_loop(self, backend, n, m, w):
        t = PlaceTable.from_curve(E2_SUPERSINGULAR, SSpec((1,)), max(n, 1))
        assert brute_Q(t, n, m, w) == naive_Q(t, n, m, w)

    def test_wm_one_counts_only_trivial_ideal(self, backend):
        assert all(brute_Q(E2_MODEL, n, 1, 1) == 1 for n in range(3))

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            brute_Q(PlaceTable((3, 3, 8, 18)), 4, 3, 1, budget=1000)


class TestInclusionExclusion:
    def test_empty_property_set(self):
        assert inclusion_exclusion_sides(IEInstance(5, ())) == (5, 5)

    def test_singleton_covering_all(self):
        inst = IEInstance(4, ((p, frozenset(range(4))),))
        assert inclusion_exclusion_sides(inst) == (0, 0)

    def test_sixteen_pairs(self):
        # pairs over {0, 1, X, X+1} over F_2; property j: both entries divisible by place j
        elems = ["0", "1", "X", "X+1"]
        pairs = list(itertools.product(elems, repeat=2))
        div_X = {"0", "X"}
        div_X1 = {"0", "X+1"}
        props = (
            (p, frozenset(i for i, (a, b) in enumerate(pairs) if a in div_X and b in div_X)),
            (q, frozenset(i for i, (a, b) in enumerate(pairs) if a in div_X1 and b in div_X1)),
        )
        assert inclusion_exclusion_sides(IEInstance(16, props)) == (9, 9)

    def test_distinct_places_required(self):
        with pytest.raises(ValueError):
            IEInstance(3, ((p, frozenset()), (p, frozenset({1}))))

    def test_randomized_instances(self):
        rng = random.Random(20240601)
        places = PlaceTable((4, 4, 4, 4)).places()
        for _ in range(200):
            size = rng.randint(0, 40)
            k = rng.randint(0, 12)
            chosen = rng.sample(places, k)
            props = tuple((pl, frozenset(a for a in range(size) if rng.random() < 0.4))
                          for pl in chosen)
            assert inclusion_exclusion_check(IEInstance(size, props))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 4), st.integers(0, 2), st.integers(0, 3)),
                max_size=4))
def test_inversion_random_divisors(raw):
    d = Divisor(tuple((AbstractPlace(deg, i), c) for deg, i, c in raw))
    if d.degree <= 4:
        assert mobius_inversion_check(d)
