"""Exact rational arithmetic, p-adic valuations, and the mod-q ring map."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chevalley.exactnum import (
    INFINITY,
    Infinity,
    Q,
    Valuation,
    check_valuation_axioms,
    in_z_inv_p,
    is_prime,
    min_valuation,
    reduce_mod_q,
    valuate,
)

V2 = Valuation(2)
V3 = Valuation(3)
V5 = Valuation(5)

nonzero_rationals = st.fractions(
    min_value=-10**6, max_value=10**6, max_denominator=10**4
).filter(lambda f: f != 0)


class TestQ:
    def test_exact_construction(self):
        assert Q(1, 3) + Q(1, 6) == Q(1, 2)
        assert Q("7/2") == Q(7, 2)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Q(0.5)

    def test_division(self):
        assert Q(1) / Q(3) == Q(1, 3)


class TestPrimes:
    def test_small(self):
        assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_large_prime(self):
        assert is_prime(2**61 - 1)

    def test_carmichael(self):
        assert not is_prime(561)


class TestValuate:
    def test_frozen_examples(self):
        assert valuate(V5, 50) == 2
        assert valuate(V2, 0) is INFINITY
        assert valuate(V3, Q(7, 9)) == -2
        assert valuate(V2, Q(8)) == 3

    def test_infinity_ordering(self):
        assert INFINITY > 10**100
        assert not (INFINITY < 5)
        assert INFINITY + 7 is INFINITY
        assert INFINITY + INFINITY is INFINITY
        with pytest.raises(ArithmeticError):
            -INFINITY

    @given(x=nonzero_rationals, y=nonzero_rationals)
    def test_v1_multiplicative(self, x, y):
        assert valuate(V3, Q(x) * Q(y)) == valuate(V3, x) + valuate(V3, y)

    @given(x=nonzero_rationals, y=nonzero_rationals)
    def test_v2_ultrametric(self, x, y):
        s = Q(x) + Q(y)
        bound = min_valuation([valuate(V3, x), valuate(V3, y)])
        if s == 0:
            assert valuate(V3, s) is INFINITY
        else:
            assert valuate(V3, s) >= bound
        if valuate(V3, x) != valuate(V3, y):
            assert valuate(V3, s) == bound

    def test_min_valuation_empty(self):
        assert min_valuation([]) is INFINITY

    def test_axiom_report(self):
        samples = [(Q(n, 3), Q(m, 2)) for n in range(-5, 6) for m in range(-5, 6)]
        rep = check_valuation_axioms(V2, samples)
        assert rep.ok and rep.checked == len(samples)

    def test_axiom_report_counterexample_shape(self):
        rep = check_valuation_axioms(V2, [(1, 1)])
        assert rep.ok and rep.counterexample is None


class TestZInvP:
    def test_members(self):
        assert in_z_inv_p(V2, Q(7, 8))
        assert in_z_inv_p(V2, 5)
        assert not in_z_inv_p(V2, Q(1, 3))
        assert in_z_inv_p(V3, Q(1, 3))


class TestReduceModQ:
    def test_frozen(self):
        assert reduce_mod_q(V2, Q(7, 8), 3) == 2  # 7 * 8^-1 = 7 * 2 = 14 = 2 mod 3

    def test_integer_case(self):
        assert reduce_mod_q(V2, 10, 3) == 1

    def test_rejects_outside_ring(self):
        with pytest.raises(ValueError):
            reduce_mod_q(V2, Q(1, 3), 3)

    def test_rejects_shared_factor(self):
        with pytest.raises(ValueError):
            reduce_mod_q(V2, Q(1, 2), 4)

    @given(
        a=st.integers(min_value=-500, max_value=500),
        b=st.integers(min_value=-500, max_value=500),
        ka=st.integers(min_value=0, max_value=6),
        kb=st.integers(min_value=0, max_value=6),
    )
    def test_ring_homomorphism(self, a, b, ka, kb):
        q = 7
        x = Q(a, 2**ka)
        y = Q(b, 2**kb)
        assert reduce_mod_q(V2, x + y, q) == (reduce_mod_q(V2, x, q) + reduce_mod_q(V2, y, q)) % q
        assert reduce_mod_q(V2, x * y, q) == (reduce_mod_q(V2, x, q) * reduce_mod_q(V2, y, q)) % q


class TestValuationType:
    def test_requires_prime(self):
        with pytest.raises(ValueError):
            Valuation(6)

    def test_infinity_singleton(self):
        assert isinstance(INFINITY, Infinity)
