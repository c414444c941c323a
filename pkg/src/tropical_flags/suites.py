"""Verification suites, one per acceptance criterion.

Each suite returns a :class:`Check`; the CLI ``verify`` verb and the
acceptance tests both run them.  ``seed`` fixes every random input.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import canonical as cs
from .cartan import CartanDatum, inverse_cartan, named_type, r_coefficients, weyl_dim
from .matrix_oracle import verify_factorization, verify_phi_defining_relation
from .phi import factorize, last_coord_law, phi, factorization_last
from .points import (ParamPoint, S, T, braid_move, h_point, h_zero, iota, make_point, norm,
                     norm_h_formula_check)
from .semifield import RATIONAL, TROPICAL, Semifield


@dataclass
class Check:
    name: str
    passed: bool
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.passed = False
        if len(self.failures) < 5:
            self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] {self.name} ({self.cases} cases){extra}"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "failures": self.failures}


def random_point(datum: CartanDatum, K: Semifield, rng: random.Random) -> ParamPoint:
    word = rng.choice(datum.reduced_words)
    return ParamPoint(datum, K, word, tuple(K.random(rng) for _ in word))


def random_weight(datum: CartanDatum, K: Semifield, rng: random.Random) -> tuple:
    return tuple(K.random(rng) for _ in range(datum.n))


def _types(*names: str) -> list[CartanDatum]:
    return [named_type(t) for t in names]


# 1
def involutivity(seed: int = 0, count: int = 1000) -> Check:
    rng = random.Random(seed)
    chk = Check("phi is an involution (A1-A3 both semifields, D4 tropical)", True)
    plan = [(d, K) for d in _types("A1", "A2", "A3") for K in (RATIONAL, TROPICAL)]
    plan.append((named_type("D4"), TROPICAL))
    for d, K in plan:
        for _ in range(count):
            A = random_point(d, K, rng)
            chk.cases += 1
            back = phi(phi(A))
            if back.word != A.word or back.coords != A.coords:
                chk.fail(f"{d.name}/{K.name}: {A}")
    return chk


# 2
def closed_forms(seed: int = 0, count: int = 100) -> Check:
    rng = random.Random(seed)
    chk = Check("rank-1 and rank-2 closed forms", True)
    A1, A2 = _types("A1", "A2")
    for _ in range(count):
        a, b, c = (RATIONAL.random(rng) for _ in range(3))
        chk.cases += 1
        if phi(make_point(A1, RATIONAL, "i", [a])).coords != (1 / a,):
            chk.fail(f"rank 1 at {a}")
        img = phi(make_point(A2, RATIONAL, "iji", [a, b, c]))
        i_form = make_point(A2, RATIONAL, "iji", [a / (c * (a + c)), (a + c) / (a * b), 1 / (a + c)])
        j_form = make_point(A2, RATIONAL, "jij", [c / (a * b), 1 / c, 1 / b])
        if img.word != i_form.word or img.coords != i_form.coords:
            chk.fail(f"i-form at {(a, b, c)}")
        if braid_move(i_form, 0).coords != j_form.coords:
            chk.fail(f"printed forms disagree at {(a, b, c)}")
        if img.on("jij").coords != j_form.coords:
            chk.fail(f"j-form at {(a, b, c)}")
    return chk


# 3
def matrix_oracle(seed: int = 0, count: int = 100) -> Check:
    rng = random.Random(seed)
    chk = Check("matrix oracle: factorization and defining relation (A1-A3)", True)
    for d in _types("A1", "A2", "A3"):
        for _ in range(count):
            A = random_point(d, RATIONAL, rng)
            chk.cases += 1
            if not verify_factorization(A):
                chk.fail(f"factorization {d.name}: {A}")
            if not verify_phi_defining_relation(A):
                chk.fail(f"defining relation {d.name}: {A}")
    return chk


# 4
def last_coordinate_laws(seed: int = 0, count: int = 200) -> Check:
    rng = random.Random(seed)
    chk = Check("last-coordinate laws (phi and factorization)", True)
    for d in _types("A1", "A2", "A3", "D4"):
        for K in (RATIONAL, TROPICAL):
            for _ in range(count):
                A = random_point(d, K, rng)
                chk.cases += 1
                try:
                    last_coord_law(A)
                except AssertionError as exc:
                    chk.fail(f"{d.name}/{K.name}: {exc}")
                expected, got = factorization_last(A)
                if expected != got:
                    chk.fail(f"b_nu {d.name}/{K.name}: {got} != {expected}")
    return chk


# 5
def equivariances(seed: int = 0, count: int = 100) -> Check:
    rng = random.Random(seed)
    chk = Check("equivariances, weight laws and freeness", True)
    for d in _types("A1", "A2", "A3"):
        for K in (RATIONAL, TROPICAL):
            for _ in range(count):
                A = random_point(d, K, rng)
                p = random_weight(d, K, rng)
                i = rng.randrange(d.n)
                c = K.random(rng)
                chk.cases += 1
                tag = f"{d.name}/{K.name} {A}"
                if iota(phi(A)) != phi(iota(A)):
                    chk.fail(f"iota phi: {tag}")
                if S(phi(A), p) != phi(S(A, [K.inv(x) for x in p])):
                    chk.fail(f"S phi: {tag}")
                if T(phi(A), i, c) != phi(T(A, d.bang(i), K.inv(c))):
                    chk.fail(f"T phi: {tag}")
                nA, nT = norm(A), norm(T(A, i, c))
                if any(nT[h] != (K.mul(c, nA[h]) if h == i else nA[h]) for h in range(d.n)):
                    chk.fail(f"weight rescaling: {tag}")
                for l, _, _ in d.moves(A.word):
                    if norm(braid_move(A, l)) != nA:
                        chk.fail(f"weight invariance at {l}: {tag}")
                if all(x == K.one for x in p):
                    continue
                if S(A, p) == A:
                    chk.fail(f"freeness: {tag} p={p}")
    return chk


# 6
def tropical_uniqueness() -> Check:
    chk = Check("phi_Z fixes h_0 and matches the T-recursion on U_N,(1,1) in A2", True)
    for d in _types("A1", "A2", "A3", "D4"):
        h0 = h_zero(d, TROPICAL)
        chk.cases += 1
        if phi(h0) != h0:
            chk.fail(f"phi(h_0) != h_0 in {d.name}")
    A2 = named_type("A2")
    try:
        table = cs.tropical_phi_by_recursion(A2, (1, 1))
    except AssertionError as exc:
        chk.fail(str(exc))
        return chk
    if len(table) != 8:
        chk.fail(f"recursion reached {len(table)} points, expected 8")
    for A, value in table.items():
        chk.cases += 1
        if phi(A) != value:
            chk.fail(f"{A}: engine {phi(A).canonical} vs recursion {value.canonical}")
    return chk


CARDINALITY_CASES = {
    "A1": [(k,) for k in range(5)],
    "A2": [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (2, 2)],
    "A3": [(1, 0, 0), (0, 1, 0), (1, 1, 1)],
}


def _cardinality_sets():
    for name, ps in CARDINALITY_CASES.items():
        d = named_type(name)
        for p in ps:
            yield d, p, cs.enumerate_crystal(d, p)


# 7
def cardinalities() -> Check:
    chk = Check("|U_N,p| equals the Weyl dimension", True)
    for d, p, members in _cardinality_sets():
        chk.cases += 1
        if len(members) != weyl_dim(d, p):
            chk.fail(f"{d.name} p={p}: {len(members)} != {weyl_dim(d, p)}")
    return chk


# 8
def dual_characterization() -> Check:
    chk = Check("g'-bounds agree with S_p phi membership", True)
    for d, p, members in _cardinality_sets():
        pool = set(members)
        # neighbours one crystal step away probe the boundary from outside
        for A in members:
            for i in range(d.n):
                pool.add(cs.crystal_f(A, i))
        for A in pool:
            chk.cases += 1
            if cs.in_U_Np(A, p) != cs.in_U_Np_via_phi(A, p):
                chk.fail(f"{d.name} p={p}: {A}")
    return chk


BOUNDED_CASES = {
    "A1": [(k,) for k in range(5)],
    "A2": [p for p in itertools.product(range(3), repeat=2)],
    "A3": [(1, 0, 0)],
}


# 9
def oracle_enumeration() -> Check:
    chk = Check("bounded scan equals crystal BFS; starred box bound", True)
    for name, ps in BOUNDED_CASES.items():
        d = named_type(name)
        for p in ps:
            chk.cases += 1
            crystal = cs.enumerate_crystal(d, p)
            bounded = cs.enumerate_bounded(d, p)
            if set(crystal) != set(bounded) or len(crystal) != len(bounded):
                chk.fail(f"{name} p={p}: {len(crystal)} vs {len(bounded)}")
            n = max(p)
            for A in crystal:
                if not cs.star_bound_holds(A, n):
                    chk.fail(f"{name} p={p}: bound fails at {A}")
    return chk


# 10
def bijections() -> Check:
    chk = Check("S_p phi permutes U_N,p; kappa~ bijects onto the dual set", True)
    for d, p, members in _cardinality_sets():
        chk.cases += 1
        members_set = set(members)
        images = [S(phi(A), p) for A in members]
        if set(images) != members_set or len(set(images)) != len(members):
            chk.fail(f"{d.name} p={p}: S_p phi is not a permutation")
        pb = d.bang_vector(p)
        dual = set(cs.enumerate_crystal(d, pb))
        kap = [cs.kappa_tilde(A, p) for A in members]
        if set(kap) != dual or len(set(kap)) != len(members):
            chk.fail(f"{d.name} p={p}: kappa~ is not a bijection")
        if cs.kappa_tilde(h_zero(d, TROPICAL), p) != h_point(d, TROPICAL, pb):
            chk.fail(f"{d.name} p={p}: kappa~(h_0) != h_(p^!)")
        if {iota(A) for A in members} != dual:
            chk.fail(f"{d.name} p={p}: iota does not biject onto the dual set")
    return chk


# 11
def nonemptiness() -> Check:
    chk = Check("B_N,p nonempty iff p is dominant (A2, p in {-1,0,1}^2)", True)
    d = named_type("A2")
    for p in itertools.product((-1, 0, 1), repeat=2):
        chk.cases += 1
        # the box of size 2 strictly contains every U_N,p probed here
        members = cs.b_np_members(d, p, box=2)
        dominant = all(x >= 0 for x in p)
        if bool(members) != dominant:
            chk.fail(f"p={p}: {len(members)} members")
        if dominant and len(members) != weyl_dim(d, p):
            chk.fail(f"p={p}: {len(members)} members, expected {weyl_dim(d, p)}")
    return chk


# 12
def xi_machinery() -> Check:
    chk = Check("Xi: block sizes, involutions, Xi' round trip (A2)", True)
    d = named_type("A2")
    for lam in [(1, 0), (1, 1)]:
        block = cs.build_Xi(d, [lam])
        size = len(cs.enumerate_crystal(d, lam))
        chk.cases += 1
        if len(block) != size**2:
            chk.fail(f"lambda={lam}: |Xi| = {len(block)}")
        target = set(cs.build_Xi(d, [d.bang_vector(lam)]))
        for e in block:
            chk.cases += 1
            w = cs.omega_tilde(e)
            if w not in target:
                chk.fail(f"omega~ leaves Xi at {e}")
            if cs.omega_tilde(w) != e:
                chk.fail(f"omega~^2 != id at {e}")
            sh = cs.sharp_tilde(e)
            if cs.sharp_tilde(sh) != e:
                chk.fail(f"#~^2 != id at {e}")
            if cs.omega_tilde(sh) != cs.sharp_tilde(w):
                chk.fail(f"omega~ #~ != #~ omega~ at {e}")
            if cs.xi_prime_to_xi(cs.xi_to_xi_prime(e)) != e:
                chk.fail(f"Xi' round trip at {e}")
    return chk


D4_WORD = ("c", "d", "e", "0", "c", "d", "e", "0", "c", "d", "e", "0")
D4_COLUMNS = ["c", "d", "e", "0cde", "0de", "0ce", "0cd", "00cde", "0c", "0d", "0e", "0"]


# 13
def norm_identity(seed: int = 0, count: int = 20) -> Check:
    rng = random.Random(seed)
    chk = Check("||h_p||_h = sum_i (p_i + p_(i^!)) b_ih (A1, A2, A3, D4)", True)
    for d in _types("A1", "A2", "A3", "D4"):
        for _ in range(count):
            p = tuple(rng.randint(0, 9) for _ in range(d.n))
            chk.cases += 1
            if not norm_h_formula_check(d, p):
                chk.fail(f"{d.name} p={p}")
    d = named_type("D4")
    word = d.word(D4_WORD)
    cols = r_coefficients(d, word)
    expected = [tuple(col.count(lab) for lab in d.labels) for col in D4_COLUMNS]
    chk.cases += 1
    if not d.is_reduced_word(word) or cols != expected:
        chk.fail("D4 worked word or its root columns")
    b = inverse_cartan(d)
    half = Fraction(1, 2)
    if b != [[2, 1, 1, 1], [1, 1, half, half], [1, half, 1, half], [1, half, half, 1]]:
        chk.fail(f"D4 inverse Cartan {b}")
    p = tuple(rng.randint(0, 9) for _ in range(4))
    p0, pc, pd, pe = p
    nm = norm(h_point(d, TROPICAL, p, word))
    if nm != (2 * pc + 2 * pd + 2 * pe + 4 * p0, 2 * pc + pd + pe + 2 * p0,
              pc + 2 * pd + pe + 2 * p0, pc + pd + 2 * pe + 2 * p0):
        chk.fail(f"D4 worked coefficients at p={p}: {nm}")
    return chk


SUITES: dict[str, Callable[..., Check]] = {
    "involutivity": involutivity,
    "closed-forms": closed_forms,
    "matrix-oracle": matrix_oracle,
    "last-coordinate": last_coordinate_laws,
    "equivariance": equivariances,
    "tropical-uniqueness": tropical_uniqueness,
    "cardinality": cardinalities,
    "dual-characterization": dual_characterization,
    "oracle-enumeration": oracle_enumeration,
    "bijections": bijections,
    "nonemptiness": nonemptiness,
    "xi": xi_machinery,
    "norm-identity": norm_identity,
}

SEEDED = {"involutivity", "closed-forms", "matrix-oracle", "last-coordinate", "equivariance", "norm-identity"}


def run(name: str, seed: int = 0) -> Check:
    fn = SUITES[name]
    return fn(seed=seed) if name in SEEDED else fn()


def run_all(seed: int = 0, names: list[str] | None = None, jobs: int = 1) -> list[Check]:
    """Run suites in order; with ``jobs > 1`` they run in a process pool but
    results are still returned in the requested order."""
    names = names or list(SUITES)
    if jobs <= 1:
        return [run(n, seed) for n in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run, names, [seed] * len(names)))
