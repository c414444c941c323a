"""Exact type-A matrix model used as an independent check of the phi engine.

For a type A_n datum the nodes are laid out along the Dynkin path and node
``i`` acts on rows/columns ``(pos(i), pos(i)+1)`` of (n+1)x(n+1) matrices.
B^+ is upper triangular, B^- lower triangular, the torus diagonal.
Omega is g -> transpose(g)^{-1} (it swaps x_i(a) and y_i(a) and inverts T).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Sequence

from .cartan import CartanDatum
from .phi import factorize, phi
from .points import ParamPoint
from .semifield import RATIONAL

Mat = tuple[tuple[Fraction, ...], ...]


class NotTypeA(ValueError):
    pass


def type_a_positions(datum: CartanDatum) -> list[int]:
    """Position of each node along the Dynkin path (starting from the
    lowest-indexed end)."""
    n = datum.n
    nbrs = [[j for j in range(n) if j != i and datum.a[i][j] == -1] for i in range(n)]
    if any(len(x) > 2 for x in nbrs) or sum(len(x) for x in nbrs) != 2 * (n - 1):
        raise NotTypeA(f"{datum} is not of type A")
    ends = [i for i in range(n) if len(nbrs[i]) <= 1]
    order = [min(ends)]
    while len(order) < n:
        nxt = [j for j in nbrs[order[-1]] if j not in order]
        if not nxt:
            raise NotTypeA(f"{datum} is not connected")
        order.append(nxt[0])
    pos = [0] * n
    for k, i in enumerate(order):
        pos[i] = k
    return pos


def identity(size: int) -> Mat:
    return tuple(tuple(Fraction(int(r == c)) for c in range(size)) for r in range(size))


def matmul(x: Mat, y: Mat) -> Mat:
    cols = list(zip(*y))
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols) for row in x)


def product(mats: Sequence[Mat], size: int) -> Mat:
    return reduce(matmul, mats, identity(size))


def inverse(m: Mat) -> Mat:
    n = len(m)
    aug = [list(row) + [Fraction(int(r == c)) for c in range(n)] for r, row in enumerate(m)]
    for k in range(n):
        piv = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[k], aug[piv] = aug[piv], aug[k]
        pk = aug[k][k]
        aug[k] = [x / pk for x in aug[k]]
        for r in range(n):
            if r != k and aug[r][k]:
                f = aug[r][k]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[k])]
    return tuple(tuple(row[n:]) for row in aug)


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m))


def determinant(m: Mat) -> Fraction:
    n = len(m)
    a = [list(row) for row in m]
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            a[r] = [x - f * y for x, y in zip(a[r], a[k])]
    return det


def _elementary(size: int, r: int, c: int, value) -> Mat:
    rows = [list(row) for row in identity(size)]
    rows[r][c] = Fraction(value)
    return tuple(tuple(row) for row in rows)


class TypeAModel:
    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.pos = type_a_positions(datum)
        self.size = datum.n + 1

    def x_mat(self, i: int | str, a) -> Mat:
        k = self.pos[self.datum.node(i)]
        return _elementary(self.size, k, k + 1, a)

    def y_mat(self, i: int | str, a) -> Mat:
        k = self.pos[self.datum.node(i)]
        return _elementary(self.size, k + 1, k, a)

    def s_dot(self, i: int | str) -> Mat:
        return product([self.y_mat(i, -1), self.x_mat(i, 1), self.y_mat(i, -1)], self.size)

    def s_dot_word(self, word: Sequence[int]) -> Mat:
        return product([self.s_dot(i) for i in word], self.size)

    def eval_plus(self, point: ParamPoint) -> Mat:
        return product([self.x_mat(i, a) for i, a in zip(point.word, point.coords)], self.size)

    def eval_minus(self, point: ParamPoint) -> Mat:
        return product([self.y_mat(i, a) for i, a in zip(point.word, point.coords)], self.size)

    def w0_dot(self) -> Mat:
        return self.s_dot_word(self.datum.canonical_word)


def is_lower(m: Mat) -> bool:
    return all(m[r][c] == 0 for r in range(len(m)) for c in range(r + 1, len(m)))


def is_upper(m: Mat) -> bool:
    return all(m[r][c] == 0 for r in range(len(m)) for c in range(r))


def flag_equal(g1: Mat, g2: Mat, side: str = "B-") -> bool:
    """g1 B = g2 B for B = B^- (lower) or B^+ (upper)."""
    if determinant(g1) == 0 or determinant(g2) == 0:
        raise ZeroDivisionError("singular input")
    m = matmul(inverse(g2), g1)
    if side == "B-":
        return is_lower(m)
    if side == "B+":
        return is_upper(m)
    raise ValueError(f"side must be 'B-' or 'B+', got {side!r}")


def omega(m: Mat) -> Mat:
    return transpose(inverse(m))


def verify_factorization(point: ParamPoint) -> bool:
    """x_{i_1}(a_1)...x_{i_nu}(a_nu) B^- = y_{i_nu}(b_nu)...y_{i_1}(b_1) s_{i_1}...s_{i_nu} B^-."""
    model = TypeAModel(point.datum)
    ys = factorize(point.field, point.datum.a, point.word, point.coords)
    rhs = matmul(product([model.y_mat(j, b) for j, b in ys], model.size), model.s_dot_word(point.word))
    return flag_equal(model.eval_plus(point), rhs, "B-")


def verify_phi_defining_relation(point: ParamPoint) -> bool:
    """(A^+)^{-1} B^- A^+ = (phi(A)^-)^{-1} B^+ phi(A)^- as Borel subgroups.

    With B^+ = w0 B^- w0^{-1} the right side is g B^- g^{-1} for
    g = (phi(A)^-)^{-1} w0, and two conjugates of B^- agree iff the cosets agree.
    """
    if point.field is not RATIONAL:
        raise TypeError("the matrix oracle needs rational coordinates")
    model = TypeAModel(point.datum)
    image = phi(point)
    g1 = inverse(model.eval_plus(point))
    g2 = matmul(inverse(model.eval_minus(image)), model.w0_dot())
    return flag_equal(g1, g2, "B-")


def minors_nonnegative(m: Mat, max_order: int = 2) -> bool:
    """All minors up to ``max_order`` are >= 0."""
    from itertools import combinations

    n = len(m)
    for k in range(1, max_order + 1):
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                sub = tuple(tuple(m[r][c] for c in cols) for r in rows)
                if determinant(sub) < 0:
                    return False
    return True
