"""Simply-laced Cartan data, the Weyl group acting on the root lattice, and
reduced words of the longest element together with their braid-move graph.

Nodes are addressed internally by their position ``0..n-1`` in the label
order; every public helper also accepts the label string itself.  Words are
tuples of node positions.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

Word = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

BRAID3 = "braid3"
SWAP2 = "swap2"

DEFAULT_WORD_CAP = 10**6


class CartanError(ValueError):
    """Input is not a finite simply-laced Cartan matrix."""


class ResourceGuard(RuntimeError):
    """A configured enumeration cap was exceeded."""


def _leading_minors(matrix: Sequence[Sequence[int]]) -> list[Fraction]:
    """Leading principal minors by fraction-exact elimination."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    minors = []
    det = Fraction(1)
    for k in range(n):
        pivot = m[k][k]
        # positive definite matrices never need pivoting; a zero or negative
        # pivot already decides the answer
        det *= pivot
        minors.append(det)
        if pivot <= 0:
            return minors + [Fraction(0)] * (n - k - 1)
        for r in range(k + 1, n):
            f = m[r][k] / pivot
            if f:
                for c in range(k, n):
                    m[r][c] -= f * m[k][c]
    return minors


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element stored as its integer matrix on Z[I].

    Column ``j`` holds the coefficients of ``w(j')``.
    """

    matrix: Matrix
    length: int = field(compare=False)

    def image(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def __matmul__(self, other: WeylElement) -> WeylElement:
        n = len(self.matrix)
        prod = tuple(
            tuple(sum(self.matrix[r][k] * other.matrix[k][c] for k in range(n)) for c in range(n))
            for r in range(n)
        )
        # length of a product is only known when it is reduced; callers that
        # need the true length go through CartanDatum.length
        return WeylElement(prod, -1)


class CartanDatum:
    """A validated simply-laced Cartan matrix with its Weyl combinatorics.

    Construction validates the axioms; everything else is computed lazily and
    cached, so a datum behaves as an immutable value.
    """

    def __init__(self, labels: Sequence[str], matrix: Sequence[Sequence[int]], *,
                 name: str | None = None, word_cap: int = DEFAULT_WORD_CAP):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if n == 0:
            raise CartanError("empty index set")
        if len(set(labels)) != n:
            raise CartanError(f"duplicate labels in {labels}")
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise CartanError("matrix must be square and match the labels")
        a = tuple(tuple(int(x) for x in row) for row in matrix)
        for i in range(n):
            if a[i][i] != 2:
                raise CartanError(f"diagonal entry a[{labels[i]}][{labels[i]}] = {a[i][i]} != 2")
            for j in range(n):
                if i == j:
                    continue
                if a[i][j] != a[j][i]:
                    raise CartanError(f"matrix is not symmetric at ({labels[i]},{labels[j]})")
                if a[i][j] not in (0, -1):
                    raise CartanError(f"off-diagonal entry {a[i][j]} not in {{0,-1}}")
        if any(m <= 0 for m in _leading_minors(a)):
            raise CartanError("matrix is not positive definite")
        self.labels = labels
        self.a = a
        self.n = n
        self.name = name
        self.word_cap = word_cap
        self._index = {lab: k for k, lab in enumerate(labels)}
        self._trees: dict[Word, dict[Word, tuple[int, str, Word]]] = {}
        self._nearest: dict[tuple[Word, str, int], list[tuple[int, str]]] = {}

    # -- labels -------------------------------------------------------------

    def node(self, i: int | str) -> int:
        if isinstance(i, str):
            try:
                return self._index[i]
            except KeyError:
                raise KeyError(f"unknown index {i!r}; labels are {self.labels}") from None
        if not 0 <= i < self.n:
            raise KeyError(f"unknown index {i!r}")
        return i

    def word(self, letters: Iterable[int | str]) -> Word:
        return tuple(self.node(x) for x in letters)

    def word_labels(self, word: Word) -> list[str]:
        return [self.labels[k] for k in word]

    def __repr__(self) -> str:
        return f"CartanDatum({self.name or list(self.labels)})"

    # -- Weyl group -----------------------------------------------------------

    def reflect(self, i: int, v: Sequence[int]) -> tuple[int, ...]:
        """s_i(v) = v - (sum_j a_ij v_j) i'."""
        c = sum(self.a[i][j] * v[j] for j in range(self.n))
        out = list(v)
        out[i] -= c
        return tuple(out)

    @cached_property
    def generators(self) -> tuple[WeylElement, ...]:
        gens = []
        for i in range(self.n):
            cols = [self.reflect(i, tuple(int(j == k) for k in range(self.n))) for j in range(self.n)]
            gens.append(WeylElement(tuple(tuple(cols[c][r] for c in range(self.n)) for r in range(self.n)), 1))
        return tuple(gens)

    @cached_property
    def identity(self) -> WeylElement:
        return WeylElement(tuple(tuple(int(r == c) for c in range(self.n)) for r in range(self.n)), 0)

    def element(self, word: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in word:
            w = w @ self.generators[i]
        return WeylElement(w.matrix, self.length(w))

    def length(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for root in self.positive_roots if not _is_positive(_apply(w.matrix, root)))

    @cached_property
    def greedy_word(self) -> Word:
        """A reduced word of w0 grown by right multiplication while length rises."""
        w = self.identity
        word: list[int] = []
        while True:
            for i in range(self.n):
                if _is_positive(w.image(i)):
                    w = w @ self.generators[i]
                    word.append(i)
                    break
            else:
                return tuple(word)

    @cached_property
    def longest(self) -> tuple[WeylElement, int]:
        """(w0, nu)."""
        w = self.identity
        for i in self.greedy_word:
            w = w @ self.generators[i]
        nu = len(self.greedy_word)
        return WeylElement(w.matrix, nu), nu

    @property
    def nu(self) -> int:
        return self.longest[1]

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r_coefficients(self, self.greedy_word))

    @cached_property
    def bang_map(self) -> tuple[int, ...]:
        w0 = self.longest[0]
        out = []
        for i in range(self.n):
            conj = (w0 @ self.generators[i] @ w0).matrix
            matches = [j for j, s in enumerate(self.generators) if s.matrix == conj]
            assert len(matches) == 1, "w0 s_i w0 is not a simple reflection"
            out.append(matches[0])
        return tuple(out)

    def bang(self, i: int | str) -> int:
        return self.bang_map[self.node(i)]

    def bang_vector(self, p: Sequence) -> tuple:
        """(p^!)_i = p_{i^!}."""
        return tuple(p[self.bang_map[i]] for i in range(self.n))

    # -- reduced words --------------------------------------------------------

    @cached_property
    def reduced_words(self) -> tuple[Word, ...]:
        """All reduced words of w0, sorted lexicographically by label order."""
        nu = self.nu
        out: list[Word] = []
        # depth-first over prefixes; a letter may be appended iff it raises the
        # length, and every length-nu prefix is a reduced word of w0
        stack: list[tuple[Word, WeylElement]] = [((), self.identity)]
        while stack:
            prefix, w = stack.pop()
            if len(prefix) == nu:
                out.append(prefix)
                if len(out) > self.word_cap:
                    raise ResourceGuard(f"more than {self.word_cap} reduced words")
                continue
            for i in range(self.n):
                if _is_positive(w.image(i)):
                    stack.append((prefix + (i,), w @ self.generators[i]))
        out.sort()
        return tuple(out)

    @cached_property
    def reduced_word_set(self) -> frozenset[Word]:
        return frozenset(self.reduced_words)

    @property
    def canonical_word(self) -> Word:
        return self.reduced_words[0]

    def is_reduced_word(self, word: Sequence[int]) -> bool:
        """Membership in the set of reduced words of w0, without enumerating it."""
        if len(word) != self.nu:
            return False
        w = self.identity
        for i in word:
            if not _is_positive(w.image(i)):
                return False
            w = w @ self.generators[i]
        return True

    def moves(self, word: Word) -> list[tuple[int, str, Word]]:
        """Adjacent words as (position, kind, new word); positions are 0-based."""
        out = []
        for l in range(len(word) - 1):
            i, j = word[l], word[l + 1]
            if i == j:
                continue
            if self.a[i][j] == 0:
                out.append((l, SWAP2, word[:l] + (j, i) + word[l + 2:]))
            elif l + 2 < len(word) and word[l + 2] == i:
                out.append((l, BRAID3, word[:l] + (j, i, j) + word[l + 3:]))
        return out

    @cached_property
    def matsumoto_graph(self) -> MatsumotoGraph:
        return reduced_words(self)

    def _tree(self, target: Word) -> dict[Word, tuple[int, str, Word]]:
        """BFS tree toward ``target``: word -> (position, kind, next word)."""
        tree = self._trees.get(target)
        if tree is not None:
            return tree
        tree = {target: (-1, "", target)}
        queue = deque([target])
        while queue:
            w = queue.popleft()
            for l, kind, v in self.moves(w):
                if v not in tree:
                    # moves are involutive: the same position leads back from v to w
                    tree[v] = (l, kind, w)
                    queue.append(v)
        self._trees[target] = tree
        return tree

    def path(self, source: Word, target: Word) -> list[tuple[int, str]]:
        """A move sequence carrying ``source`` to ``target``."""
        if source == target:
            return []
        tree = self._tree(target)
        if source not in tree:
            raise ValueError(f"{self.word_labels(source)} is not a reduced word of w0")
        out = []
        w = source
        while w != target:
            l, kind, w = tree[w]
            out.append((l, kind))
        return out

    def path_to(self, source: Word, kind: str, i: int) -> list[tuple[int, str]]:
        """Shortest move sequence from ``source`` to a word starting (kind
        ``"first"``) or ending (kind ``"last"``) with letter ``i``."""
        key = (source, kind, i)
        cached = self._nearest.get(key)
        if cached is not None:
            return cached
        pos = 0 if kind == "first" else -1
        parent: dict[Word, tuple[Word, int, str] | None] = {source: None}
        queue = deque([source])
        found = None
        while queue:
            w = queue.popleft()
            if w[pos] == i:
                found = w
                break
            for l, k, v in self.moves(w):
                if v not in parent:
                    parent[v] = (w, l, k)
                    queue.append(v)
        if found is None:
            raise ValueError(f"no reduced word reachable from {source} with {kind} letter {i}")
        steps: list[tuple[int, str]] = []
        w = found
        while parent[w] is not None:
            prev, l, k = parent[w]
            steps.append((l, k))
            w = prev
        steps.reverse()
        self._nearest[key] = steps
        return steps


def _apply(matrix: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in matrix)


def _is_positive(v: Sequence[int]) -> bool:
    # roots are either all >= 0 or all <= 0
    return any(x > 0 for x in v)


# -- named types ---------------------------------------------------------------


def _type_a(n: int) -> list[list[int]]:
    return [[2 if r == c else (-1 if abs(r - c) == 1 else 0) for c in range(n)] for r in range(n)]


def named_type(name: str) -> CartanDatum:
    """One of A1..A4 or D4 (center node ``0``, leaves ``c, d, e``)."""
    key = name.strip().upper()
    if key == "A1":
        return CartanDatum(["i"], [[2]], name="A1")
    if key == "A2":
        return CartanDatum(["i", "j"], _type_a(2), name="A2")
    if key in ("A3", "A4"):
        n = int(key[1])
        return CartanDatum([str(k + 1) for k in range(n)], _type_a(n), name=key)
    if key == "D4":
        m = [[2, -1, -1, -1], [-1, 2, 0, 0], [-1, 0, 2, 0], [-1, 0, 0, 2]]
        return CartanDatum(["0", "c", "d", "e"], m, name="D4")
    raise CartanError(f"unknown Cartan type {name!r}; expected A1, A2, A3, A4 or D4")


def from_json(source: str | Path | dict) -> CartanDatum:
    """Read ``{"labels": [...], "matrix": [[...]]}`` from a dict or file."""
    if isinstance(source, dict):
        data = source
    else:
        data = json.loads(Path(source).read_text())
    try:
        return CartanDatum(data["labels"], data["matrix"], name=data.get("name"))
    except (KeyError, TypeError) as exc:
        raise CartanError(f"malformed Cartan JSON: {exc}") from exc


# -- functional interface --------------------------------------------------------


def validate_cartan(matrix: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> CartanDatum:
    if labels is None:
        labels = [str(k + 1) for k in range(len(matrix))]
    return CartanDatum(labels, matrix)


def longest_element(datum: CartanDatum) -> tuple[WeylElement, int]:
    return datum.longest


def bang(datum: CartanDatum, i: int | str) -> int:
    return datum.bang(i)


@dataclass(frozen=True)
class MatsumotoGraph:
    vertices: tuple[Word, ...]
    edges: tuple[tuple[Word, Word, int, str], ...]  # (u, v, position, kind) with u < v

    def neighbours(self, w: Word) -> list[Word]:
        return [v for u, v, _, _ in self.edges if u == w] + [u for u, v, _, _ in self.edges if v == w]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[Word, list[Word]] = {v: [] for v in self.vertices}
        for u, v, _, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {self.vertices[0]}
        queue = deque([self.vertices[0]])
        while queue:
            for v in adj[queue.popleft()]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == len(self.vertices)


def reduced_words(datum: CartanDatum) -> MatsumotoGraph:
    edges = []
    for w in datum.reduced_words:
        for l, kind, v in datum.moves(w):
            if w < v:
                edges.append((w, v, l, kind))
    return MatsumotoGraph(datum.reduced_words, tuple(edges))


def word_path(datum: CartanDatum, w: Word, w2: Word, fix_first_letter: bool = False) -> list[tuple[int, str]]:
    """Move sequence from ``w`` to ``w2``.

    With ``fix_first_letter`` only moves at positions >= 1 (0-based) are used,
    so every intermediate word keeps the common first letter.
    """
    if not fix_first_letter:
        return datum.path(w, w2)
    if w[0] != w2[0]:
        raise ValueError("constrained path needs words with the same first letter")
    parent: dict[Word, tuple[Word, int, str] | None] = {w: None}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        if u == w2:
            break
        for l, kind, v in datum.moves(u):
            if l >= 1 and v not in parent:
                parent[v] = (u, l, kind)
                queue.append(v)
    if w2 not in parent:
        raise ValueError("no constrained path")
    steps = []
    u = w2
    while parent[u] is not None:
        prev, l, kind = parent[u]
        steps.append((l, kind))
        u = prev
    steps.reverse()
    return steps


def r_coefficients(datum: CartanDatum, word: Sequence[int]) -> list[tuple[int, ...]]:
    """Columns r_{.,k}: the coefficients of s_{i_1}...s_{i_{k-1}}(i_k') in Z[I]."""
    cols = []
    w = datum.identity
    for i in word:
        col = w.image(i)
        if any(x < 0 for x in col):
            raise AssertionError(f"negative coefficient {col}: word is not reduced")
        cols.append(col)
        w = w @ datum.generators[i]
    return cols


def inverse_cartan(datum: CartanDatum) -> list[list[Fraction]]:
    n = datum.n
    m = [[Fraction(x) for x in row] + [Fraction(int(r == c)) for c in range(n)] for r, row in enumerate(datum.a)]
    for k in range(n):
        piv = next(r for r in range(k, n) if m[r][k] != 0)
        m[k], m[piv] = m[piv], m[k]
        pk = m[k][k]
        m[k] = [x / pk for x in m[k]]
        for r in range(n):
            if r != k and m[r][k]:
                f = m[r][k]
                m[r] = [x - f * y for x, y in zip(m[r], m[k])]
    b = [row[n:] for row in m]
    assert all(x >= 0 for row in b for x in row), "inverse Cartan matrix has a negative entry"
    return b


def weyl_dim(datum: CartanDatum, p: Sequence[int]) -> int:
    """dim V(lambda) with (i, lambda) = p_i, by the Weyl dimension formula."""
    p = tuple(int(x) for x in p)
    if len(p) != datum.n or any(x < 0 for x in p):
        raise ValueError(f"p must be a nonnegative vector of length {datum.n}")
    total = Fraction(1)
    for root in r_coefficients(datum, datum.greedy_word):
        total *= Fraction(sum(c * (x + 1) for c, x in zip(root, p)), sum(root))
    if total.denominator != 1:
        raise ArithmeticError(f"Weyl dimension {total} is not an integer")
    return int(total)


def all_vectors(values: Iterable[int], n: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(list(values), repeat=n)
