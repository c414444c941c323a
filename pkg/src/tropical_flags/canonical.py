"""Finite tropical index sets: U_N, U_{N,p}, B_{N,p}, crystal operators,
the twisted bijection kappa~, and the Xi / Xi' index sets with their involutions.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cartan import CartanDatum, ResourceGuard
from .phi import FlagPair, bar_iota, bar_phi, bar_S, graph_pair, phi
from .points import ParamPoint, S, T, h_zero, iota, star, transport, with_last
from .semifield import TROPICAL

DEFAULT_BFS_CAP = 10**6
DEFAULT_SCAN_CAP = 10**7


def _vec(datum: CartanDatum, p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if len(p) != datum.n:
        raise ValueError(f"expected {datum.n} entries, got {len(p)}")
    return p


def _neg(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in p)


def in_U_N(point: ParamPoint) -> bool:
    return all(a >= 0 for a in point.coords)


def in_U_Np(point: ParamPoint, p: Sequence[int]) -> bool:
    if not in_U_N(point):
        return False
    return all(with_last(point, i).coords[-1] <= p[i] for i in range(point.datum.n))


def in_U_Np_via_phi(point: ParamPoint, p: Sequence[int]) -> bool:
    return in_U_N(point) and in_U_N(S(phi(point), p))


def sort_points(points: Iterable[ParamPoint]) -> list[ParamPoint]:
    return sorted((q.canonical for q in points), key=lambda q: q.coords)


def crystal_f(A: ParamPoint, i: int | str) -> ParamPoint:
    return T(A, i, 1)


def crystal_e(A: ParamPoint, i: int | str) -> ParamPoint | None:
    B = T(A, i, -1)
    return B if in_U_N(B) else None


def enumerate_crystal(datum: CartanDatum, p: Sequence[int], cap: int = DEFAULT_BFS_CAP) -> list[ParamPoint]:
    """Closure of h_0 under the crystal operators f_i, kept inside U_{N,p}."""
    p = _vec(datum, p)
    if any(x < 0 for x in p):
        raise ValueError("p must be dominant")
    start = h_zero(datum, TROPICAL).canonical
    seen = {start}
    queue = deque([start])
    while queue:
        A = queue.popleft()
        for i in range(datum.n):
            B = crystal_f(A, i)
            if B in seen or not in_U_Np(B, p):
                continue
            seen.add(B)
            if len(seen) > cap:
                raise ResourceGuard(f"crystal BFS exceeded {cap} nodes")
            queue.append(B.canonical)
    return sort_points(seen)


def box_bounds(datum: CartanDatum, n: int) -> list[int]:
    """Per-position bounds 2^{nu-k} n (k = 1..nu) on any representative."""
    nu = datum.nu
    return [2 ** (nu - k) * n for k in range(1, nu + 1)]


def scan_box(datum: CartanDatum, n: int, cap: int = DEFAULT_SCAN_CAP) -> Iterable[ParamPoint]:
    """All N-points on the canonical word inside the starred box of size ``n``."""
    bounds = box_bounds(datum, n)
    total = 1
    for b in bounds:
        total *= b + 1
    if total > cap:
        raise ResourceGuard(f"bounded scan needs {total} candidates (cap {cap})")
    word = datum.canonical_word
    for coords in itertools.product(*(range(b + 1) for b in bounds)):
        yield ParamPoint(datum, TROPICAL, word, coords)


def enumerate_bounded(datum: CartanDatum, p: Sequence[int], cap: int = DEFAULT_SCAN_CAP) -> list[ParamPoint]:
    """Exhaustive scan of the box a_k <= 2^{nu-k} max(p), filtered by U_{N,p}."""
    p = _vec(datum, p)
    if any(x < 0 for x in p):
        raise ValueError("p must be dominant")
    n = max(p)
    return sort_points(A for A in scan_box(datum, n, cap) if in_U_Np(A, p))


def star_bound_holds(A: ParamPoint, n: int) -> bool:
    """Every representative of A* satisfies a_k <= 2^{k-1} n."""
    dual = star(A)
    for word in A.datum.reduced_words:
        rep = transport(dual, word)
        if any(a > 2 ** k * n for k, a in enumerate(rep.coords)):
            return False
    return True


def b_np_members(datum: CartanDatum, p: Sequence[int], box: int | None = None,
                 cap: int = DEFAULT_SCAN_CAP) -> list[FlagPair]:
    """Pairs (A, phi(A)) with A in U_N and S_p phi(A) in U_N.

    Candidates come from the starred box of size ``box`` (default
    max(0, max p)), which contains U_{N,p} for dominant p.
    """
    p = _vec(datum, p)
    n = max(0, max(p)) if box is None else box
    out = []
    for A in scan_box(datum, n, cap):
        image = phi(A)
        if in_U_N(S(image, p)):
            out.append(FlagPair(A, image))
    return out


def b_np_from_set(points: Iterable[ParamPoint]) -> list[FlagPair]:
    return [graph_pair(A) for A in points]


def kappa_tilde(A: ParamPoint, lam: Sequence[int]) -> ParamPoint:
    lam = _vec(A.datum, lam)
    if not in_U_Np(A, lam):
        raise ValueError("point is not in U_{N,p}")
    return iota(S(phi(A), lam))


def tropical_phi_by_recursion(datum: CartanDatum, p: Sequence[int]) -> dict[ParamPoint, ParamPoint]:
    """phi_Z on the crystal component of U_{N,p}, rebuilt from phi(h_0) = h_0
    and phi(T_{j,1} A) = T_{j^!,-1} phi(A).

    Raises AssertionError if two routes to the same point disagree.
    """
    p = _vec(datum, p)
    start = h_zero(datum, TROPICAL).canonical
    table = {start: start}
    queue = deque([start])
    while queue:
        A = queue.popleft()
        for j in range(datum.n):
            B = crystal_f(A, j)
            if not in_U_Np(B, p):
                continue
            value = T(table[A], datum.bang(j), -1)
            if B in table:
                assert table[B] == value, f"recursion is inconsistent at {B}"
                continue
            table[B] = value
            queue.append(B.canonical)
    return table


# -- Xi and Xi' --------------------------------------------------------------------


@dataclass(frozen=True)
class XiEntry:
    B1: FlagPair
    B2: FlagPair
    lam: tuple[int, ...]

    def to_json(self) -> dict:
        return {"B1": self.B1.to_json(), "B2": self.B2.to_json(), "lambda": list(self.lam)}


@dataclass(frozen=True)
class XiPrimeEntry:
    B1: FlagPair
    B2: FlagPair
    B1t: FlagPair
    B2t: FlagPair


def build_Xi(datum: CartanDatum, lams: Iterable[Sequence[int]]) -> list[XiEntry]:
    out = []
    for lam in lams:
        lam = _vec(datum, lam)
        if any(x < 0 for x in lam):
            raise ValueError(f"lambda {lam} is not dominant")
        block = b_np_from_set(enumerate_crystal(datum, lam))
        out.extend(XiEntry(B1, B2, lam) for B1 in block for B2 in block)
    return out


def in_B_np(pair: FlagPair, p: Sequence[int]) -> bool:
    return pair.is_valid() and in_U_N(pair.first) and in_U_N(S(pair.second, p))


def omega_tilde(entry: XiEntry) -> XiEntry:
    """Index-level Chevalley involution: B -> bar_iota bar_phi bar_S_{-lambda} B.

    The shift by -lambda moves B into B^-_N, so bar_phi lands back in B^+_N;
    on first components this is A -> iota S_lambda phi(A).
    """
    datum = entry.B1.first.datum
    shift = _neg(entry.lam)

    def move(B: FlagPair) -> FlagPair:
        return bar_iota(bar_phi(bar_S(B, shift)))

    return XiEntry(move(entry.B1), move(entry.B2), datum.bang_vector(entry.lam))


def sharp_tilde(entry: XiEntry) -> XiEntry:
    return XiEntry(entry.B2, entry.B1, entry.lam)


def xi_to_xi_prime(entry: XiEntry) -> XiPrimeEntry:
    shift = _neg(entry.lam)
    return XiPrimeEntry(entry.B1, entry.B2, bar_S(entry.B1, shift), bar_S(entry.B2, shift))


def orbit_witness(B: FlagPair, Bt: FlagPair) -> tuple[int, ...] | None:
    """The unique p with bar_S_p(Bt) = B (unique since the action is free), or None."""
    datum = B.first.datum
    src = transport(Bt.first, B.first.word)
    p: list[int | None] = [None] * datum.n
    for i, a, c in zip(B.first.word, B.first.coords, src.coords):
        d = a - c
        if p[i] is None:
            p[i] = d
        elif p[i] != d:
            return None
    witness = tuple(p)
    if bar_S(Bt, witness) != B:
        return None
    return witness


def xi_prime_to_xi(q: XiPrimeEntry) -> XiEntry:
    w1 = orbit_witness(q.B1, q.B1t)
    w2 = orbit_witness(q.B2, q.B2t)
    if w1 is None or w1 != w2:
        raise ValueError("(B1, B2) is not in the X-orbit of (B1~, B2~)")
    lam = w1
    if any(x < 0 for x in lam):
        raise ValueError(f"orbit witness {lam} is not dominant")
    for B in (q.B1, q.B2):
        if not in_B_np(B, lam):
            raise ValueError("component is not in B_{N,p}")
    return XiEntry(q.B1, q.B2, lam)
