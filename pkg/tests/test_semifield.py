from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import FIELDS, values
from tropical_flags.semifield import RATIONAL, TROPICAL, get, is_natural


def test_tropical_examples():
    K = TROPICAL
    assert K.add(3, 5) == 3
    assert K.mul(3, 5) == 8
    assert K.inv(4) == -4
    assert K.pow(2, -3) == -6


def test_rational_examples():
    K = RATIONAL
    assert K.add(Fraction(1), Fraction(1)) == 2
    assert K.mul(Fraction(1, 2), Fraction(2, 3)) == Fraction(1, 3)
    with pytest.raises(ValueError):
        K.coerce(0)


def test_is_natural():
    assert is_natural(0) and is_natural(7) and not is_natural(-1)


def test_lookup():
    assert get("trop") is TROPICAL and get("rat") is RATIONAL
    with pytest.raises(ValueError):
        get("real")


@pytest.mark.parametrize("K", FIELDS, ids=lambda K: K.name)
def test_axioms(K):
    @given(values(K), values(K), values(K))
    def check(a, b, c):
        assert K.add(a, b) == K.add(b, a)
        assert K.mul(a, b) == K.mul(b, a)
        assert K.add(K.add(a, b), c) == K.add(a, K.add(b, c))
        assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
        assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
        assert K.mul(a, K.inv(a)) == K.one
        assert K.mul(a, K.one) == a

    check()


@pytest.mark.parametrize("K", FIELDS, ids=lambda K: K.name)
def test_pow_and_round_trip(K):
    @given(values(K), st.integers(-6, 6))
    def check(a, n):
        expected = K.one
        for _ in range(abs(n)):
            expected = K.mul(expected, a if n > 0 else K.inv(a))
        assert K.pow(a, n) == expected
        assert K.parse(K.format(a)) == a

    check()
