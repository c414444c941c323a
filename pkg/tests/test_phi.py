from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from strategies import FIELDS, points, rat_values, trop_values, values, weights
from tropical_flags.cartan import named_type
from tropical_flags.phi import (FlagPair, bar_iota, bar_phi, bar_S, factorize, graph_pair, last_coord_law, phi,
                                phi_prime, factorization_last)
from tropical_flags.points import S, T, h_zero, iota, make_point, norm, transport
from tropical_flags.semifield import RATIONAL, TROPICAL

F = Fraction


def test_rank_one(A1):
    A = make_point(A1, RATIONAL, "i", [F(2)])
    assert phi_prime(A).coords == (F(1, 2),)
    assert phi(A).coords == (F(1, 2),)
    assert phi(make_point(A1, TROPICAL, "i", [5])).coords == (-5,)


@given(rat_values, rat_values, rat_values)
def test_a2_closed_forms(a, b, c):
    A2 = named_type("A2")
    image = phi(make_point(A2, RATIONAL, "iji", [a, b, c]))
    j_form = make_point(A2, RATIONAL, "jij", [c / (a * b), 1 / c, 1 / b])
    i_form = make_point(A2, RATIONAL, "iji", [a / (c * (a + c)), (a + c) / (a * b), 1 / (a + c)])
    assert image == j_form == i_form
    assert transport(image, "jij").coords == j_form.coords


@given(trop_values, trop_values, trop_values)
def test_a2_tropical_form(a, b, c):
    A2 = named_type("A2")
    image = phi(make_point(A2, TROPICAL, "iji", [a, b, c]))
    assert image.on("jij").coords == (c - a - b, -c, -b)


def test_spot_values(A2):
    assert str(phi(make_point(A2, RATIONAL, "iji", [1, 1, 1])).on("jij")) == "j^1 i^1 j^1"
    assert str(phi(make_point(A2, TROPICAL, "iji", [1, 2, 3])).on("jij")) == "j^0 i^-3 j^-2"
    # the image sits on the reversed word
    assert phi(make_point(A2, TROPICAL, "jij", [1, 2, 3])).word == A2.word("jij")
    assert phi(h_zero(A2, TROPICAL)) == h_zero(A2, TROPICAL)


def test_last_coordinates(A2):
    A = make_point(A2, RATIONAL, "iji", [1, 1, 1])
    expected, got = factorization_last(A)
    assert expected == got == F(1, 2)
    a, c = F(3), F(5)
    B = make_point(A2, RATIONAL, "iji", [a, 7, c])
    assert last_coord_law(B) == 1 / (a + c)
    assert last_coord_law(make_point(A2, TROPICAL, "iji", [0, 0, 0])) == 0


def test_factorize_shape(A3):
    ys = factorize(RATIONAL, A3.a, A3.canonical_word, [F(1)] * 6)
    assert [j for j, _ in ys] == list(reversed(A3.canonical_word))


@pytest.mark.parametrize("name", ["A1", "A2", "A3"])
@pytest.mark.parametrize("K", FIELDS, ids=lambda K: K.name)
def test_phi_laws(name, K):
    d = named_type(name)

    @given(points(d, K), weights(d, K), values(K))
    def check(A, p, c):
        image = phi(A)
        assert phi(image) == A
        assert iota(image) == phi(iota(A))
        assert S(image, p) == phi(S(A, tuple(K.inv(x) for x in p)))
        for i in range(d.n):
            assert T(image, i, c) == phi(T(A, d.bang(i), K.inv(c)))
        last_coord_law(A)
        expected, got = factorization_last(A)
        assert expected == got
        # weight rescaling: ||phi(A)||_h = ||A||_{h^!}^{-1}
        na, ni = norm(A), norm(image)
        assert all(ni[h] == K.inv(na[d.bang(h)]) for h in range(d.n))

    check()


def test_phi_well_defined_on_classes(A3):
    A = make_point(A3, RATIONAL, "121321", [1, 2, 3, 4, 5, 6])
    images = {phi(transport(A, w)) for w in A3.reduced_words}
    assert len(images) == 1


def test_flag_pairs(A2):
    A = make_point(A2, RATIONAL, "iji", [2, 3, 5])
    B = graph_pair(A)
    assert B.is_valid() and bar_phi(B).is_valid() and bar_iota(B).is_valid()
    assert bar_phi(bar_phi(B)) == B
    p = (F(2), F(1, 3))
    pinv = tuple(1 / x for x in p)
    assert bar_S(bar_phi(B), p) == bar_phi(bar_S(B, pinv))
    assert bar_S(B, p).is_valid()
    assert not FlagPair(A, A).is_valid()
