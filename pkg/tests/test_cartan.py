from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from tropical_flags.cartan import (BRAID3, SWAP2, CartanDatum, CartanError, from_json, inverse_cartan,
                                   longest_element, named_type, r_coefficients, reduced_words, validate_cartan,
                                   weyl_dim, word_path)


def test_accepts_finite_types():
    assert validate_cartan([[2, -1], [-1, 2]]).n == 2
    assert validate_cartan([[2]]).n == 1


@pytest.mark.parametrize("matrix", [
    [[2, -2], [-2, 2]],
    [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],  # affine A2: singular
    [[2, -1], [0, 2]],
    [[3]],
    [[2, 1], [1, 2]],
])
def test_rejects_bad_matrices(matrix):
    with pytest.raises(CartanError):
        validate_cartan(matrix)


def test_from_json_dict_and_file(tmp_path):
    d = from_json({"labels": ["a", "b"], "matrix": [[2, -1], [-1, 2]]})
    assert d.labels == ("a", "b")
    f = tmp_path / "bad.json"
    f.write_text('{"labels": ["a", "b"], "matrix": [[2, -2], [-2, 2]]}')
    with pytest.raises(CartanError):
        from_json(f)


@pytest.mark.parametrize("name,nu,count", [("A1", 1, 1), ("A2", 3, 2), ("A3", 6, 16), ("D4", 12, 2316)])
def test_longest_length_and_word_count(name, nu, count):
    d = named_type(name)
    w0, length = longest_element(d)
    assert length == nu == d.nu
    assert len(d.reduced_words) == count
    assert all(d.element(w) == w0 for w in d.reduced_words[:50])


def test_bang(A1, A2, A3, D4):
    assert A1.bang("i") == A1.node("i")
    assert A2.bang("i") == A2.node("j") and A2.bang("j") == A2.node("i")
    assert A3.bang("1") == A3.node("3") and A3.bang("2") == A3.node("2")
    # w0 = -1 in D4, so bang is the identity
    assert all(D4.bang(i) == i for i in range(4))


def test_matsumoto_graph(A1, A2, A3):
    g = reduced_words(A2)
    assert set(g.vertices) == {A2.word("iji"), A2.word("jij")}
    assert [(e[2], e[3]) for e in g.edges] == [(0, BRAID3)]
    g1 = reduced_words(A1)
    assert g1.vertices == ((0,),) and g1.edges == ()
    g3 = reduced_words(A3)
    assert len(g3.vertices) == 16 and g3.is_connected()
    assert any(kind == SWAP2 for *_, kind in g3.edges)


def test_word_paths(A2, A3):
    w, v = A2.word("iji"), A2.word("jij")
    assert word_path(A2, w, v) == [(0, BRAID3)]
    assert word_path(A2, w, w) == []
    for u, v in itertools.product(A3.reduced_words, repeat=2):
        path = word_path(A3, u, v)
        cur = u
        for l, kind in path:
            cur = next(x for m, k, x in A3.moves(cur) if (m, k) == (l, kind))
        assert cur == v


def test_constrained_paths_keep_first_letter(A3):
    for u, v in itertools.product(A3.reduced_words, repeat=2):
        if u[0] != v[0]:
            continue
        path = word_path(A3, u, v, fix_first_letter=True)
        assert all(l >= 1 for l, _ in path)


def test_r_coefficients(A1, A2, A3):
    assert r_coefficients(A1, (0,)) == [(1,)]
    assert r_coefficients(A2, A2.word("iji")) == [(1, 0), (1, 1), (0, 1)]
    cols = r_coefficients(A3, A3.word("121321"))
    assert sorted(cols) == sorted(A3.positive_roots) and len(set(cols)) == 6


def test_inverse_cartan(A1, A2, D4):
    F = Fraction
    assert inverse_cartan(A1) == [[F(1, 2)]]
    assert inverse_cartan(A2) == [[F(2, 3), F(1, 3)], [F(1, 3), F(2, 3)]]
    b = inverse_cartan(D4)
    c, d = D4.node("c"), D4.node("d")
    assert b[0][0] == 2 and b[0][c] == 1 and b[c][c] == 1 and b[c][d] == F(1, 2)


def test_weyl_dim(A2, A3, D4):
    assert weyl_dim(A2, (1, 0)) == 3
    assert weyl_dim(A2, (1, 1)) == 8
    assert weyl_dim(A3, (1, 1, 1)) == 64
    assert all(weyl_dim(d, (0,) * d.n) == 1 for d in (A2, A3, D4))
    assert weyl_dim(D4, (1, 0, 0, 0)) == 28


def test_custom_labels_behave_like_named(A2):
    d = CartanDatum(["x", "y"], [[2, -1], [-1, 2]])
    assert d.nu == 3 and d.bang("x") == d.node("y")
