"""Points of U_K: decorated reduced words of w0 modulo braid moves.

A :class:`ParamPoint` stores one representative ``(word, coords)``.  Two
points are equal when they denote the same class, which is decided by
transporting both to the datum's canonical (lexicographically least) word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .cartan import BRAID3, SWAP2, CartanDatum, Word, inverse_cartan, r_coefficients, word_path
from .semifield import TROPICAL, Semifield


@dataclass(frozen=True, eq=False)
class ParamPoint:
    datum: CartanDatum
    field: Semifield
    word: Word
    coords: tuple

    def __post_init__(self):
        if len(self.word) != len(self.coords):
            raise ValueError("word and coords differ in length")

    @cached_property
    def canonical(self) -> ParamPoint:
        return transport(self, self.datum.canonical_word)

    def on(self, word: Sequence[int | str]) -> ParamPoint:
        return transport(self, self.datum.word(word))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamPoint):
            return NotImplemented
        return equals(self, other)

    def __hash__(self) -> int:
        return hash(self.canonical.coords)

    def __lt__(self, other: ParamPoint) -> bool:
        return self.canonical.coords < other.canonical.coords

    def __str__(self) -> str:
        return format_point(self)

    def __repr__(self) -> str:
        return f"ParamPoint({self.datum.name or ''} {format_point(self)})"

    def to_json(self) -> dict:
        return {
            "word": self.datum.word_labels(self.word),
            "coords": [self.field.format(c) for c in self.coords],
        }


def make_point(datum: CartanDatum, field: Semifield, word: Sequence[int | str], coords: Sequence,
               check: bool = True) -> ParamPoint:
    w = datum.word(word)
    if check and not datum.is_reduced_word(w):
        raise ValueError(f"{datum.word_labels(w)} is not a reduced word of w0")
    return ParamPoint(datum, field, w, tuple(field.coerce(c) for c in coords))


_TOKEN = re.compile(r"^([^\s^]+)\^(\S+)$")


def parse_point(datum: CartanDatum, field: Semifield, text: str | Sequence[str]) -> ParamPoint:
    """Parse ``"i^a j^b i^c"`` (also accepts a list of tokens)."""
    tokens = text.split() if isinstance(text, str) else [t for part in text for t in part.split()]
    word, coords = [], []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"cannot parse {tok!r}; expected letter^value")
        word.append(datum.node(m.group(1)))
        coords.append(field.parse(m.group(2)))
    return make_point(datum, field, word, coords)


def point_from_json(datum: CartanDatum, field: Semifield, data: dict) -> ParamPoint:
    return make_point(datum, field, data["word"], [field.parse(str(c)) for c in data["coords"]])


def format_point(point: ParamPoint) -> str:
    labels = point.datum.labels
    return " ".join(f"{labels[i]}^{point.field.format(a)}" for i, a in zip(point.word, point.coords))


# -- moves and transport ---------------------------------------------------------


def braid_move_coords(field: Semifield, coords: tuple, l: int, kind: str) -> tuple:
    """Coordinate part of a move at 0-based position ``l``."""
    if kind == SWAP2:
        return coords[:l] + (coords[l + 1], coords[l]) + coords[l + 2:]
    a, b, c = coords[l:l + 3]
    s = field.add(a, c)
    si = field.inv(s)
    new = (field.mul(field.mul(b, c), si), s, field.mul(field.mul(a, b), si))
    return coords[:l] + new + coords[l + 3:]


def braid_move(point: ParamPoint, l: int, kind: str | None = None) -> ParamPoint:
    """Apply the move at 0-based position ``l``; ``kind`` is inferred if omitted."""
    w = point.word
    if not 0 <= l < len(w) - 1:
        raise IndexError(f"position {l} out of range")
    i, j = w[l], w[l + 1]
    a = point.datum.a
    if kind is None:
        kind = SWAP2 if i != j and a[i][j] == 0 else BRAID3
    if kind == SWAP2:
        if i == j or a[i][j] != 0:
            raise ValueError(f"no commuting pair at position {l}")
        new_word = w[:l] + (j, i) + w[l + 2:]
    elif kind == BRAID3:
        if l + 2 >= len(w) or i == j or a[i][j] != -1 or w[l + 2] != i:
            raise ValueError(f"no (i,j,i) pattern with a_ij = -1 at position {l}")
        new_word = w[:l] + (j, i, j) + w[l + 3:]
    else:
        raise ValueError(f"unknown move kind {kind!r}")
    return ParamPoint(point.datum, point.field, new_word,
                      braid_move_coords(point.field, point.coords, l, kind))


def apply_path(point: ParamPoint, path: Sequence[tuple[int, str]]) -> ParamPoint:
    coords = point.coords
    word = point.word
    for l, kind in path:
        coords = braid_move_coords(point.field, coords, l, kind)
        if kind == SWAP2:
            word = word[:l] + (word[l + 1], word[l]) + word[l + 2:]
        else:
            word = word[:l] + (word[l + 1], word[l], word[l + 1]) + word[l + 3:]
    return ParamPoint(point.datum, point.field, word, coords)


def transport(point: ParamPoint, target: Sequence[int | str], fix_first_letter: bool = False) -> ParamPoint:
    """The representative of ``point``'s class on ``target``."""
    datum = point.datum
    target = datum.word(target)
    if target == point.word:
        return point
    if fix_first_letter:
        path = word_path(datum, point.word, target, fix_first_letter=True)
    else:
        path = datum.path(point.word, target)
    return apply_path(point, path)


def with_first(point: ParamPoint, i: int) -> ParamPoint:
    if point.word[0] == i:
        return point
    return apply_path(point, point.datum.path_to(point.word, "first", i))


def with_last(point: ParamPoint, i: int) -> ParamPoint:
    if point.word[-1] == i:
        return point
    return apply_path(point, point.datum.path_to(point.word, "last", i))


def equals(p: ParamPoint, q: ParamPoint) -> bool:
    if p.datum is not q.datum or p.field is not q.field:
        raise ValueError("points live over different data or semifields")
    if p.word == q.word:
        return p.coords == q.coords
    return transport(q, p.word).coords == p.coords


# -- involutions and actions ------------------------------------------------------


def star(point: ParamPoint) -> ParamPoint:
    return ParamPoint(point.datum, point.field, point.word[::-1], point.coords[::-1])


def iota(point: ParamPoint) -> ParamPoint:
    bang = point.datum.bang_map
    return ParamPoint(point.datum, point.field, tuple(bang[i] for i in point.word), point.coords)


def norm(point: ParamPoint) -> tuple:
    """Weight profile (||A||_h for h in label order)."""
    K = point.field
    cols = r_coefficients(point.datum, point.word)
    return tuple(
        K.prod(K.pow(a, col[h]) for a, col in zip(point.coords, cols) if col[h])
        for h in range(point.datum.n)
    )


def T(point: ParamPoint, i: int | str, c) -> ParamPoint:
    """Multiply the first coordinate of an i-initial representative by ``c``."""
    i = point.datum.node(i)
    rep = with_first(point, i)
    coords = (point.field.mul(rep.coords[0], c),) + rep.coords[1:]
    return ParamPoint(point.datum, point.field, rep.word, coords)


def S(point: ParamPoint, p: Sequence) -> ParamPoint:
    """Multiply the k-th coordinate by p_{i_k}."""
    K = point.field
    coords = tuple(K.mul(a, p[i]) for i, a in zip(point.word, point.coords))
    return ParamPoint(point.datum, point.field, point.word, coords)


def g_prime(point: ParamPoint, i: int | str) -> int:
    """Last coordinate of an i-final representative of a point of U_N."""
    if point.field is not TROPICAL:
        raise TypeError("g' is defined on tropical points")
    if any(a < 0 for a in point.coords):
        raise ValueError("point is not in U_N")
    return with_last(point, point.datum.node(i)).coords[-1]


def h_point(datum: CartanDatum, field: Semifield, p: Sequence, word: Sequence[int | str] | None = None) -> ParamPoint:
    """The point with k-th coordinate p_{i_k} on ``word`` (default: canonical)."""
    w = datum.canonical_word if word is None else datum.word(word)
    return ParamPoint(datum, field, w, tuple(field.coerce(p[i]) for i in w))


def h_zero(datum: CartanDatum, field: Semifield) -> ParamPoint:
    return h_point(datum, field, [field.one] * datum.n)


def norm_h_formula_check(datum: CartanDatum, p: Sequence[int]) -> bool:
    """Tropical ||h_p||_h against sum_i (p_i + p_{i^!}) b_ih, for every h."""
    b = inverse_cartan(datum)
    pb = datum.bang_vector(p)
    lhs = norm(h_point(datum, TROPICAL, p))
    rhs = [sum((Fraction(p[i]) + pb[i]) * b[i][h] for i in range(datum.n)) for h in range(datum.n)]
    return all(Fraction(x) == y for x, y in zip(lhs, rhs))
