"""The involution phi_K of U_K over an arbitrary semifield.

The engine factorizes x_{i_1}(a_1)...x_{i_nu}(a_nu) B^- as
y_{i_nu}(b_nu)...y_{i_1}(b_1) s_{i_1}...s_{i_nu} B^- by pushing each x-factor,
last one first, rightward through the y-factors built so far.  Only three
rank-one identities are used, all subtraction-free:

    x_i(a) y_i(b) = y_i(b/(1+ab)) . t . x_i(a/(1+ab)),   t = alpha_i^v(1+ab)
    t x_j(c) = x_j(u^{a_ij} c) t,   t y_j(b) = y_j(u^{-a_ij} b) t   (t = alpha_i^v(u))
    x_i(c) = y_i(1/c) . s_i . y_i(c) . alpha_i^v(1/c)

Torus factors are pushed to the right end at once, where they and the
trailing y_i(c) disappear into the s-chain times B^-.  x_i and y_j commute
for i != j.  The output convention lives in :func:`phi_prime`: the y-list read
left to right is the representative on the reversed word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .points import ParamPoint, S, iota, star
from .semifield import Semifield


def factorize(K: Semifield, a_matrix, word: Sequence[int], coords: Sequence) -> list[list]:
    """Return the y-factorization as ``[[i_nu, b_nu], ..., [i_1, b_1]]``."""
    one = K.one
    ys: list[list] = []
    for k in range(len(word) - 1, -1, -1):
        i = word[k]
        a = coords[k]
        row = a_matrix[i]
        for m in range(len(ys)):
            j, b = ys[m]
            if j != i:
                continue
            u = K.add(one, K.mul(a, b))
            ys[m][1] = K.div(b, u)
            # a/(1+ab) rescaled by u^2 while the torus passes the x-factor
            a = K.mul(a, u)
            for later in ys[m + 1:]:
                e = row[later[0]]
                if e:
                    later[1] = K.mul(later[1], K.pow(u, -e))
        ys.append([i, K.inv(a)])
    return ys


def phi_prime(point: ParamPoint) -> ParamPoint:
    """phi'_K on the reversed word."""
    ys = factorize(point.field, point.datum.a, point.word, point.coords)
    return ParamPoint(point.datum, point.field, tuple(j for j, _ in ys), tuple(b for _, b in ys))


def phi(point: ParamPoint) -> ParamPoint:
    """phi_K = * phi'_K *, returned on the reversed word of ``point``."""
    return star(phi_prime(star(point)))


def last_coord_law(point: ParamPoint):
    """inv of the (+)-sum of a_k over k with i_k = i_1; asserted against phi."""
    K = point.field
    first = point.word[0]
    expected = K.inv(K.sum(a for i, a in zip(point.word, point.coords) if i == first))
    got = phi(point).coords[-1]
    assert got == expected, f"last coordinate {got} != {expected}"
    return expected


def factorization_last(point: ParamPoint):
    """b_nu = inv((+)-sum of a_l with i_l = i_nu), next to the engine's b_nu."""
    K = point.field
    last = point.word[-1]
    expected = K.inv(K.sum(a for i, a in zip(point.word, point.coords) if i == last))
    ys = factorize(K, point.datum.a, point.word, point.coords)
    return expected, ys[0][1]


@dataclass(frozen=True)
class FlagPair:
    """A point (A, phi(A)) of the graph of phi."""

    first: ParamPoint
    second: ParamPoint

    def is_valid(self) -> bool:
        return phi(self.first) == self.second

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlagPair):
            return NotImplemented
        return self.first == other.first and self.second == other.second

    def __hash__(self) -> int:
        return hash((self.first, self.second))

    def to_json(self) -> dict:
        return {"A": self.first.canonical.to_json(), "A'": self.second.canonical.to_json()}


def graph_pair(A: ParamPoint) -> FlagPair:
    return FlagPair(A, phi(A))


def bar_phi(pair: FlagPair) -> FlagPair:
    return FlagPair(pair.second, pair.first)


def bar_iota(pair: FlagPair) -> FlagPair:
    return FlagPair(iota(pair.first), iota(pair.second))


def bar_S(pair: FlagPair, p: Sequence) -> FlagPair:
    K = pair.first.field
    return FlagPair(S(pair.first, p), S(pair.second, [K.inv(x) for x in p]))
