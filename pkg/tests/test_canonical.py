from __future__ import annotations

import itertools
import json
from pathlib import Path

import pytest

from tropical_flags import canonical as cs
from tropical_flags.cartan import ResourceGuard, weyl_dim
from tropical_flags.phi import FlagPair, graph_pair, phi
from tropical_flags.points import S, h_point, h_zero, iota, make_point
from tropical_flags.semifield import TROPICAL

GOLDEN = Path(__file__).parent / "golden"


def pt(d, word, coords):
    return make_point(d, TROPICAL, word, coords)


def test_U_N_membership(A2):
    assert cs.in_U_N(h_zero(A2, TROPICAL))
    assert not cs.in_U_N(pt(A2, "iji", [0, 0, -1]))


def test_U_Np_small_cases(A2):
    members = [A.on("iji").coords for A in cs.enumerate_crystal(A2, (1, 0))]
    assert sorted(members) == [(0, 0, 0), (0, 0, 1), (1, 0, 1)]
    assert [A.coords for A in cs.enumerate_crystal(A2, (0, 0))] == [(0, 0, 0)]
    # hand-solved: c <= 1 and a + b - min(a, c) <= 0
    solved = [(a, b, c) for a, b, c in itertools.product(range(4), repeat=3)
              if c <= 1 and a + b - min(a, c) <= 0]
    assert sorted(solved) == sorted(members)
    assert not cs.in_U_Np(pt(A2, "iji", [0, 1, 0]), (1, 0))
    assert not cs.in_U_Np_via_phi(pt(A2, "iji", [0, 1, 0]), (1, 0))


def test_h_p_membership(A2, A3):
    for p in [(0, 0), (2, 1), (1, 3)]:
        assert cs.in_U_Np(h_point(A2, TROPICAL, p), p)
        assert cs.in_U_Np_via_phi(h_zero(A2, TROPICAL), p)
    assert cs.in_U_Np(h_point(A3, TROPICAL, (1, 0, 2)), (1, 0, 2))


@pytest.mark.parametrize("p,size", [((1, 1), 8), ((2, 0), 6), ((2, 2), 27)])
def test_crystal_sizes_a2(A2, p, size):
    assert len(cs.enumerate_crystal(A2, p)) == size == weyl_dim(A2, p)


def test_crystal_sizes_a3(A3):
    assert len(cs.enumerate_crystal(A3, (1, 1, 1))) == 64


def test_crystal_operators(A2):
    h0 = h_zero(A2, TROPICAL)
    assert all(cs.crystal_e(h0, i) is None for i in range(2))
    A = pt(A2, "iji", [1, 0, 1])
    for i in range(2):
        assert cs.crystal_e(cs.crystal_f(A, i), i) == A


def test_bounded_scan(A2):
    assert len(list(cs.scan_box(A2, 1))) == 2 * 3 * 5  # (n+1)(2n+1)(4n+1) at n = 1
    assert cs.box_bounds(A2, 1) == [4, 2, 1]
    assert cs.enumerate_bounded(A2, (1, 1)) == cs.enumerate_crystal(A2, (1, 1))
    assert [A.coords for A in cs.enumerate_bounded(A2, (0, 0))] == [(0, 0, 0)]


def test_resource_guards(A3):
    with pytest.raises(ResourceGuard):
        cs.enumerate_crystal(A3, (2, 2, 2), cap=10)
    with pytest.raises(ResourceGuard):
        list(cs.scan_box(A3, 3, cap=100))


def test_star_bound(A2):
    for A in cs.enumerate_crystal(A2, (2, 1)):
        assert cs.star_bound_holds(A, 2)


def test_b_np_members(A2):
    for p in [(1, 0), (1, 1)]:
        members = cs.b_np_members(A2, p)
        assert len(members) == len(cs.enumerate_crystal(A2, p))
        assert graph_pair(h_zero(A2, TROPICAL)) in members
        assert FlagPair(h_zero(A2, TROPICAL), h_zero(A2, TROPICAL)) in members
    assert cs.b_np_members(A2, (-1, 0), box=2) == []


def test_kappa_tilde(A2):
    lam = (1, 0)
    src = cs.enumerate_crystal(A2, lam)
    dst = cs.enumerate_crystal(A2, A2.bang_vector(lam))
    images = {cs.kappa_tilde(A, lam) for A in src}
    assert images == set(dst) and len(dst) == 3
    assert cs.kappa_tilde(h_zero(A2, TROPICAL), lam) == h_point(A2, TROPICAL, A2.bang_vector(lam))
    with pytest.raises(ValueError):
        cs.kappa_tilde(pt(A2, "iji", [0, 1, 0]), lam)


def test_self_map_is_permutation(A2):
    p = (2, 1)
    members = cs.enumerate_crystal(A2, p)
    assert {S(phi(A), p) for A in members} == set(members)


def test_iota_restricts(A3):
    p = (1, 0, 2)
    assert {iota(A) for A in cs.enumerate_crystal(A3, p)} == set(cs.enumerate_crystal(A3, A3.bang_vector(p)))


def test_recursion_agrees_with_engine(A2):
    table = cs.tropical_phi_by_recursion(A2, (1, 1))
    assert len(table) == 8
    assert all(phi(A) == v for A, v in table.items())


def test_xi(A2):
    block = cs.build_Xi(A2, [(1, 1)])
    assert len(block) == 64
    e = block[5]
    assert cs.omega_tilde(cs.omega_tilde(e)) == e
    assert cs.sharp_tilde(cs.sharp_tilde(e)) == e
    with pytest.raises(ValueError):
        cs.build_Xi(A2, [(-1, 0)])


def test_xi_prime_round_trip_and_zero_lambda(A2):
    for e in cs.build_Xi(A2, [(1, 0)]):
        assert cs.xi_prime_to_xi(cs.xi_to_xi_prime(e)) == e
    (e0,) = cs.build_Xi(A2, [(0, 0)])
    q = cs.xi_to_xi_prime(e0)
    assert q.B1t == q.B1 and q.B2t == q.B2


def test_xi_prime_rejects_bad_witness(A2):
    B = graph_pair(h_zero(A2, TROPICAL))
    neg = cs.XiPrimeEntry(B, B, cs.bar_S(B, (1, 0)), cs.bar_S(B, (1, 0)))
    with pytest.raises(ValueError, match="not dominant"):
        cs.xi_prime_to_xi(neg)
    mixed = cs.XiPrimeEntry(B, B, cs.bar_S(B, (-1, 0)), cs.bar_S(B, (0, -1)))
    with pytest.raises(ValueError, match="orbit"):
        cs.xi_prime_to_xi(mixed)


@pytest.mark.parametrize("path", sorted(GOLDEN.glob("enumerate_A2_*.json")), ids=lambda p: p.stem)
def test_golden_enumerations(A2, path):
    data = json.loads(path.read_text())
    members = cs.enumerate_crystal(A2, data["p"])
    assert [A.to_json() for A in members] == data["members"]
    assert data["size"] == len(members) == data["weyl_dim"]
