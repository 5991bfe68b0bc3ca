"""Signed-permutation conjugators between HR families and their lift to algebras.

A conjugator B satisfies F_l B = B E_l for matched members E_l, F_l. With
column-stacked vec this is the linear system (E_l^T (x) I - I (x) F_l) vec(B) = 0,
whose rows each hold exactly two entries ±1, so it reduces to relations
b_p = ±b_q handled by a union-find that tracks signs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from . import exact
from .algebra_core import HTypeAlgebra, orthogonal_complement
from .hr_family import HRFamily, is_signed_permutation


def kron(A, B) -> np.ndarray:
    return np.kron(np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64))


def vec(M) -> np.ndarray:
    """Column-stacking vectorization."""
    return np.asarray(M).reshape(-1, order="F")


def unvec(v, n: int) -> np.ndarray:
    return np.asarray(v).reshape((n, n), order="F")


@dataclass
class ConjugacySystem:
    blocks: list[np.ndarray]
    n: int
    r: int
    matching: tuple[int, ...] = ()

    @property
    def matrix(self) -> np.ndarray:
        if not self.blocks:
            return np.zeros((0, self.n * self.n), dtype=np.int64)
        return np.vstack(self.blocks)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "r": self.r, "matching": [m + 1 for m in self.matching],
                           "blocks": [b.tolist() for b in self.blocks]})


def _block(E, F) -> np.ndarray:
    n = E.shape[0]
    eye = np.eye(n, dtype=np.int64)
    blk = kron(E.T, eye) - kron(eye, F)
    nz = blk != 0
    if not (np.all(nz.sum(axis=1) == 2) and np.all(np.abs(blk[nz]) == 1)):
        raise AssertionError("a system row does not have exactly two entries of ±1")
    return blk


def _check_compatible(fam1: HRFamily, fam2: HRFamily):
    if fam1.n != fam2.n:
        raise ValueError(f"orders differ: {fam1.n} vs {fam2.n}")
    if (fam1.s, fam1.t) != (fam2.s, fam2.t):
        raise ValueError(f"signatures differ: ({fam1.s},{fam1.t}) vs ({fam2.s},{fam2.t})")


def build_system(fam1: HRFamily, fam2: HRFamily, matching: Sequence[int] | None = None) -> ConjugacySystem:
    """Stacked blocks for member l of fam1 against member matching[l] of fam2 (0-based)."""
    _check_compatible(fam1, fam2)
    r = len(fam1.members)
    matching = tuple(range(r)) if matching is None else tuple(matching)
    blocks = [_block(E, fam2.members[m]) for E, m in zip(fam1.members, matching)]
    return ConjugacySystem(blocks, fam1.n, r, matching)


@dataclass
class Certificate:
    gram: np.ndarray
    involutions: list[np.ndarray]
    product: np.ndarray
    gram_matches_formula: bool
    involutions_ok: bool
    annihilates: bool

    @property
    def valid(self) -> bool:
        return self.gram_matches_formula and self.involutions_ok and self.annihilates and bool(np.any(self.product))


def rank_deficiency_certificate(fam1: HRFamily, fam2: HRFamily, matching: Sequence[int] | None = None) -> Certificate:
    """Exact witness that the matched system has a nontrivial nullspace.

    F = sum_j 2(I - A_j) with A_j = E_j (x) F_j equals the Gram matrix of the
    stacked system, the A_j are commuting involutions, and F times
    prod_j (I + A_j) vanishes while the product itself does not.
    """
    sys = build_system(fam1, fam2, matching)
    N = fam1.n * fam1.n
    eye = np.eye(N, dtype=np.int64)
    A = [kron(E, fam2.members[m]) for E, m in zip(fam1.members, sys.matching)]
    M = sys.matrix
    F = sum((2 * (eye - a) for a in A), np.zeros((N, N), dtype=np.int64))
    prod = eye.copy()
    for a in A:
        prod = prod @ (eye + a)
    inv_ok = all(np.array_equal(a @ a, eye) for a in A) and all(
        np.array_equal(a @ b, b @ a) for i, a in enumerate(A) for b in A[i + 1:]
    )
    return Certificate(F, A, prod, bool(np.array_equal(M.T @ M, F)), inv_ok, not np.any(F @ prod))


class SignedUnionFind:
    """Union-find over variables with relations x_a = sign * x_b."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.sign = [1] * size
        self.zero = [False] * size

    def find(self, x: int) -> tuple[int, int]:
        path = []
        s = 1
        while self.parent[x] != x:
            path.append(x)
            s *= self.sign[x]
            x = self.parent[x]
        # path compression, keeping each node's sign relative to the root
        acc = s
        for node in path:
            nxt_sign = self.sign[node]
            self.parent[node], self.sign[node] = x, acc
            acc *= nxt_sign
        return x, s

    def union(self, a: int, b: int, rel: int):
        """Impose x_a = rel * x_b."""
        ra, sa = self.find(a)
        rb, sb = self.find(b)
        if ra == rb:
            if sa * rel * sb != 1:
                self.zero[ra] = True
            return
        self.parent[ra] = rb
        self.sign[ra] = sa * rel * sb
        self.zero[rb] = self.zero[rb] or self.zero[ra]

    def is_zero(self, x: int) -> bool:
        return self.zero[self.find(x)[0]]

    def orbits(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for x in range(len(self.parent)):
            r, s = self.find(x)
            out.setdefault(r, []).append((x, s))
        return out


def _orbit_structure(sys: ConjugacySystem):
    n = sys.n
    uf = SignedUnionFind(n * n)
    for row in sys.matrix:
        idx = np.nonzero(row)[0]
        if len(idx) != 2:
            raise ValueError("system row without exactly two nonzero entries")
        p, q = int(idx[0]), int(idx[1])
        uf.union(p, q, -int(row[p]) * int(row[q]))
    return uf, uf.orbits()


def _signed_perm_solutions(sys: ConjugacySystem) -> Iterator[np.ndarray]:
    n = sys.n
    uf, orbits = _orbit_structure(sys)
    B = np.zeros((n, n), dtype=np.int64)
    row_used = [False] * n
    col_used = [False] * n
    valued: set[int] = set()

    def place(root: int, value: int) -> list[tuple[int, int]] | None:
        cells = []
        rows, cols = set(), set()
        for var, s in orbits[root]:
            i, j = var % n, var // n  # column-major index
            if row_used[i] or col_used[j] or i in rows or j in cols:
                return None
            rows.add(i)
            cols.add(j)
            cells.append((i, j, s * value))
        for i, j, v in cells:
            B[i, j] = v
            row_used[i] = col_used[j] = True
        valued.add(root)
        return [(i, j) for i, j, _ in cells]

    def undo(root: int, cells):
        for i, j in cells:
            B[i, j] = 0
            row_used[i] = col_used[j] = False
        valued.discard(root)

    def dfs(i: int):
        while i < n and row_used[i]:
            i += 1
        if i == n:
            yield B.copy()
            return
        for j in range(n):
            if col_used[j]:
                continue
            var = j * n + i
            root, s = uf.find(var)
            if uf.zero[root] or root in valued:
                continue
            for entry in (1, -1):
                cells = place(root, entry * s)
                if cells is None:
                    continue
                yield from dfs(i + 1)
                undo(root, cells)

    yield from dfs(0)


def solve_signed_perm(sys: ConjugacySystem) -> np.ndarray | None:
    """First signed permutation solving the system, or None.

    Solutions are ordered row by row: the column of the row's nonzero
    entry ascending, then +1 before -1. The identity therefore comes first
    whenever it solves the system.
    """
    return next(_signed_perm_solutions(sys), None)


def enumerate_signed_perm(sys: ConjugacySystem, cap: int = 16) -> list[np.ndarray]:
    out = []
    for B in _signed_perm_solutions(sys):
        out.append(B)
        if len(out) >= cap:
            break
    return out


def conjugacy_matching(B, fam1: HRFamily, fam2: HRFamily) -> tuple[int, ...] | None:
    """Index in fam2 of B E_l B^-1 for each member E_l of fam1, if it is a same-kind bijection."""
    B = np.asarray(B, dtype=np.int64)
    if fam1.n != fam2.n or (fam1.s, fam1.t) != (fam2.s, fam2.t):
        return None
    if not is_signed_permutation(B) or not np.array_equal(B.T @ B, np.eye(fam1.n, dtype=np.int64)):
        return None
    out = []
    for l, E in enumerate(fam1.members):
        image = B @ E @ B.T
        same_kind = range(fam2.s) if l < fam1.s else range(fam2.s, fam2.s + fam2.t)
        hit = next((m for m in same_kind if np.array_equal(fam2.members[m], image)), None)
        if hit is None or hit in out:
            return None
        out.append(hit)
    return tuple(out)


def verify_conjugacy(B, fam1: HRFamily, fam2: HRFamily, allow_reorder: bool = True) -> bool:
    """True iff B is orthogonal and F_l B = B E_l for the matched members.

    Without reordering, member l must map to member l; with it, any
    bijection between members of the same kind is accepted.
    """
    m = conjugacy_matching(B, fam1, fam2)
    if m is None:
        return False
    return allow_reorder or m == tuple(range(len(m)))


def _matchings(fam: HRFamily):
    skew, sym = list(range(fam.s)), list(range(fam.s, fam.s + fam.t))
    for ps in permutations(skew):
        for pt in permutations(sym):
            yield ps + pt


def find_conjugator(fam1: HRFamily, fam2: HRFamily, allow_reorder: bool = True, limit: int = 50000):
    """Return (B, matching) for the first matching that admits a signed-permutation conjugator.

    Member-for-member matching is tried first.
    """
    _check_compatible(fam1, fam2)
    B = solve_signed_perm(build_system(fam1, fam2))
    if B is not None or not allow_reorder:
        return (B, tuple(range(len(fam1.members)))) if B is not None else (None, None)
    for count, m in enumerate(_matchings(fam1)):
        if count >= limit:
            break
        B = solve_signed_perm(build_system(fam1, fam2, m))
        if B is not None:
            return B, m
    return None, None


def nullspace_oracle(sys: ConjugacySystem) -> list[list[Fraction]]:
    """Exact rational nullspace of the stacked system (independent cross-check)."""
    return exact.nullspace(sys.matrix.tolist(), sys.n * sys.n)


@dataclass
class IsoLift:
    B: np.ndarray
    center_map: list[list[Fraction]]
    images: list[str] = field(default_factory=list)
    ok: bool = True
    violation: str = ""


def _z_image(B: np.ndarray, vec_z: Sequence[Fraction], alg: HTypeAlgebra) -> list[Fraction]:
    N = alg.free
    n = B.shape[0]
    target = np.argmax(np.abs(B), axis=0)
    sgn = B[target, np.arange(n)]
    out = [Fraction(0)] * N.dim_Z
    for (i, j), c in zip(N.pairs, vec_z):
        if c == 0:
            continue
        a, b = int(target[i - 1]) + 1, int(target[j - 1]) + 1
        s = int(sgn[i - 1] * sgn[j - 1]) * (1 if a < b else -1)
        out[N.pair_index(a, b)] += s * c
    return out


def lift_to_algebra_iso(B, alg1: HTypeAlgebra, alg2: HTypeAlgebra) -> IsoLift:
    """Extend B on the first layer to the quotient algebras and check it is an isomorphism."""
    B = np.asarray(B, dtype=np.int64)
    N1, N2 = alg1.free, alg2.free
    m = len(alg1.omega_basis)
    lift = IsoLift(B, [[Fraction(0)] * m for _ in range(m)])
    if N1.k != N2.k or m != len(alg2.omega_basis) or not is_signed_permutation(B):
        lift.ok, lift.violation = False, "dimensions differ or B is not a signed permutation"
        return lift
    w2 = [w.vector(N2) for w in alg2.omega_basis]
    norms2 = [N2.inner_Z(v, v) for v in w2]
    for a in orthogonal_complement(alg1.omega_basis, N1):
        img = _z_image(B, a, alg1)
        if any(N2.inner_Z(img, v) != 0 for v in w2):
            lift.ok, lift.violation = False, "B does not carry the ideal of the first algebra into the second"
            return lift
    for l, w in enumerate(alg1.omega_basis):
        img = _z_image(B, w.vector(N1), alg1)
        coeffs = [N2.inner_Z(img, v) / z for v, z in zip(w2, norms2)]
        for q in range(m):
            lift.center_map[q][l] = coeffs[q]
        terms = [f"{'-' if c < 0 else ''}{'' if abs(c) == 1 else abs(c)}w{q + 1}'" for q, c in enumerate(coeffs) if c]
        lift.images.append(f"w{l + 1} -> " + (" + ".join(terms) if terms else "0"))
    n = alg1.dim_h
    target = np.argmax(np.abs(B), axis=0)
    sgn = B[target, np.arange(n)]
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            left = alg2.bracket(int(target[a - 1]) + 1, int(target[b - 1]) + 1)
            left = [int(sgn[a - 1] * sgn[b - 1]) * x for x in left]
            right = alg1.bracket(a, b)
            mapped = [sum((lift.center_map[q][l] * right[l] for l in range(m)), Fraction(0)) for q in range(m)]
            if left != mapped:
                lift.ok, lift.violation = False, f"bracket [e{a}, e{b}] is not preserved"
                return lift
    den = 1
    for row in lift.center_map:
        for c in row:
            den = den * c.denominator // gcd(den, c.denominator)
    for l in range(m):
        lhs = sum((int(lift.center_map[q][l] * den) * alg2.j_matrices[q] for q in range(m)),
                  np.zeros((n, n), dtype=np.int64))
        rhs = den * (B @ alg1.j_matrices[l] @ B.T)
        if not np.array_equal(lhs, rhs):
            lift.ok, lift.violation = False, f"J of the image of w{l + 1} is not B J B^-1"
            return lift
    return lift
