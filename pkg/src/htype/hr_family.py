"""Hurwitz-Radon families of signed-permutation matrices.

A family of order n has s skew members (square -I) followed by t symmetric
members (square +I); all members pairwise anticommute and have disjoint
supports.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

import numpy as np

from . import fixtures, hr_arith
from .algebra_core import HTypeAlgebra, OmegaVector, build_free, matrix_from_omega, quotient
from .graph_factor import OneFactor, matching_of

P = np.array([[0, -1], [1, 0]], dtype=np.int64)
Q = np.array([[1, 0], [0, -1]], dtype=np.int64)
R = np.array([[0, 1], [1, 0]], dtype=np.int64)
I2 = np.eye(2, dtype=np.int64)

MAX_EXPONENT = 5


def is_signed_permutation(M) -> bool:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or not np.all(np.isin(M, (-1, 0, 1))):
        return False
    nz = M != 0
    return bool(np.all(nz.sum(axis=0) == 1) and np.all(nz.sum(axis=1) == 1))


@dataclass
class HRFamily:
    n: int
    s: int
    t: int
    members: list[np.ndarray] = field(default_factory=list)

    def __post_init__(self):
        self.members = [np.asarray(m, dtype=np.int64) for m in self.members]
        if len(self.members) != self.s + self.t:
            raise ValueError("member count does not match s + t")
        if any(m.shape != (self.n, self.n) for m in self.members):
            raise ValueError("member has the wrong shape")

    @property
    def skew(self) -> list[np.ndarray]:
        return self.members[: self.s]

    @property
    def symmetric(self) -> list[np.ndarray]:
        return self.members[self.s:]

    def to_dict(self) -> dict:
        return {"n": self.n, "s": self.s, "t": self.t, "members": [m.tolist() for m in self.members]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "HRFamily":
        return cls(int(data["n"]), int(data["s"]), int(data["t"]), [np.array(m, dtype=np.int64) for m in data["members"]])

    @classmethod
    def from_json(cls, text: str) -> "HRFamily":
        return cls.from_dict(json.loads(text))


@dataclass
class FamilyReport:
    members: list[dict]
    pairs: list[dict]

    @property
    def passed(self) -> bool:
        return all(all(v for k, v in m.items() if k != "index") for m in self.members) and all(
            p["anticommute"] and p["disjoint"] for p in self.pairs
        )

    def text(self) -> str:
        lines = []
        for m in self.members:
            ok = all(v for k, v in m.items() if k not in ("index", "kind"))
            lines.append(
                f"{'PASS' if ok else 'FAIL'} member {m['index']} ({m['kind']}): signed_perm={m['signed_perm']} "
                f"square={m['square']} symmetry={m['symmetry']}"
            )
        for p in self.pairs:
            ok = p["anticommute"] and p["disjoint"]
            lines.append(
                f"{'PASS' if ok else 'FAIL'} pair {p['i']},{p['j']}: anticommute={p['anticommute']} disjoint={p['disjoint']}"
            )
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def verify_family(f: HRFamily) -> FamilyReport:
    eye = np.eye(f.n, dtype=np.int64)
    members = []
    for i, E in enumerate(f.members):
        skew = i < f.s
        members.append(
            {
                "index": i + 1,
                "kind": "skew" if skew else "symmetric",
                "signed_perm": is_signed_permutation(E),
                "square": bool(np.array_equal(E @ E, -eye if skew else eye)),
                "symmetry": bool(np.array_equal(E.T, -E if skew else E)),
            }
        )
    pairs = []
    for i, j in combinations(range(len(f.members)), 2):
        A, B = f.members[i], f.members[j]
        pairs.append(
            {
                "i": i + 1,
                "j": j + 1,
                "anticommute": not np.any(A @ B + B @ A),
                "disjoint": not np.any(A * B),
            }
        )
    return FamilyReport(members, pairs)


def support_factor(E) -> OneFactor:
    E = np.asarray(E)
    if not is_signed_permutation(E):
        raise ValueError("not a signed permutation")
    return matching_of(E)


def omega_from_matrix(E) -> OmegaVector:
    """Omega whose coefficient on (i, j), i < j, is the entry of E in row j, column i."""
    f = support_factor(E)
    E = np.asarray(E)
    return OmegaVector(f, {(i, j): int(E[j - 1, i - 1]) for i, j in f.pairs})


def symmetrizer(E) -> np.ndarray:
    """Diagonal B with +1 at i and -1 at j for every support pair (i, j), i < j."""
    f = support_factor(E)
    d = np.zeros(len(E), dtype=np.int64)
    for i, j in f.pairs:
        d[i - 1], d[j - 1] = 1, -1
    return np.diag(d)


def symmetrize(E) -> np.ndarray:
    """E -> E B: turns a skew zero-diagonal member into a symmetric one."""
    return np.asarray(E) @ symmetrizer(E)


def double(members: Sequence[np.ndarray]) -> list[np.ndarray]:
    """{P (x) I} together with {Q (x) E}: one more member at twice the order."""
    n = members[0].shape[0]
    return [np.kron(P, np.eye(n, dtype=np.int64))] + [np.kron(Q, E) for E in members]


def _sort_by_support(mats: Sequence[np.ndarray]) -> list[np.ndarray]:
    return sorted(mats, key=lambda m: support_factor(m).pairs)


@lru_cache(maxsize=None)
def _maximal_positive(r: int) -> tuple[np.ndarray, ...]:
    if r == 1:
        mats = [P.copy()]
    elif r == 2:
        sol = dict(zip(fixtures.K2_COORDS, fixtures.K2_SOLUTIONS[0]))
        mats = [matrix_from_omega(OmegaVector(f, {p: sol[p] for p in f.pairs})) for f in fixtures.K4_FACTORS]
    elif r == 3:
        mats = fixtures.octonion_family()
    else:
        mats = double(_maximal_positive(r - 1))
    out = tuple(_sort_by_support(mats))
    for m in out:
        m.setflags(write=False)
    return out


def _check_exponent(r: int):
    if not isinstance(r, int) or r < 1:
        raise ValueError("r must be a positive integer")
    if r > MAX_EXPONENT:
        raise ValueError(f"orders above 2**{MAX_EXPONENT} are not supported")


def build_positive(r: int, count: int, multiplier: int = 1) -> HRFamily:
    """HR family of ``count`` skew members at order multiplier * 2**r (multiplier odd)."""
    _check_exponent(r)
    if multiplier < 1 or multiplier % 2 == 0:
        raise ValueError("multiplier must be a positive odd integer")
    limit = hr_arith.rho(2 ** r) - 1
    if not 1 <= count <= limit:
        raise ValueError(f"count must be between 1 and {limit} at order {2 ** r}")
    mats = [m.copy() for m in _maximal_positive(r)[:count]]
    if multiplier > 1:
        mats = [np.kron(np.eye(multiplier, dtype=np.int64), m) for m in mats]
    return HRFamily(multiplier * 2 ** r, count, 0, mats)


# Mixed families are searched among tensor products of I, P, Q, R (a
# letter string). With eta = Q (x) I (x) ... the skew members must commute
# with eta and the symmetric ones anticommute with it, which is exactly
# what makes every member eta-skew. Strings are encoded as bitmasks (x, z):
# letter I=(0,0), R=(1,0), Q=(0,1), P=(1,1), most significant bit first.

def _popcount(v: int) -> int:
    return bin(v).count("1")


def _anticommute(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return _popcount((a[0] & b[1]) ^ (a[1] & b[0])) % 2 == 1


def _string_matrix(code: tuple[int, int], r: int) -> np.ndarray:
    x, z = code
    M = np.array([[1]], dtype=np.int64)
    for bit in range(r - 1, -1, -1):
        letter = {(0, 0): I2, (1, 0): R, (0, 1): Q, (1, 1): P}[((x >> bit) & 1, (z >> bit) & 1)]
        M = np.kron(M, letter)
    return M


def _search_mixed(r: int, s: int, t: int) -> list[tuple[int, int]] | None:
    top = 1 << (r - 1)
    codes = [(x, z) for x in range(1 << r) for z in range(1 << r)]
    skew = [c for c in codes if c[0] and not c[0] & top and _popcount(c[0] & c[1]) % 2 == 1]
    sym = [c for c in codes if c[0] & top and _popcount(c[0] & c[1]) % 2 == 0]
    kinds = [0] * s + [1] * t

    def dfs(i, chosen, pool_s, pool_t, xs):
        if i == len(kinds):
            return list(chosen)
        pool = pool_s if kinds[i] == 0 else pool_t
        for j, c in enumerate(pool):
            if c[0] in xs:
                continue
            rest = pool[j + 1:]
            ns = [w for w in (rest if kinds[i] == 0 else pool_s) if _anticommute(w, c)]
            nt = [w for w in (rest if kinds[i] == 1 else pool_t) if _anticommute(w, c)]
            found = dfs(i + 1, chosen + [c], ns, nt, xs | {c[0]})
            if found:
                return found
        return None

    return dfs(0, [], skew, sym, frozenset())


def neutral_eta(n: int) -> np.ndarray:
    """diag(+1 x n/2, -1 x n/2)."""
    return np.diag(np.array([1] * (n // 2) + [-1] * (n // 2), dtype=np.int64))


def build_mixed(r: int, s: int, t: int) -> HRFamily:
    """HR(s, t) family at order 2**r.

    The symmetric members are produced as E B from skew signed permutations
    E, with B the diagonal sign pattern of E's support. For t >= 1 every
    member is also skew-adjoint for the neutral metric ``neutral_eta``.
    """
    _check_exponent(r)
    if s < 0 or t < 0 or not hr_arith.is_realizable(r, s, t):
        raise ValueError(f"signature ({s},{t}) is not realizable at order {2 ** r}")
    if t == 0:
        return build_positive(r, s)
    found = _search_mixed(r, s, t)
    if found is None:
        raise ValueError(f"no witness found for signature ({s},{t}) at order {2 ** r}")
    mats = [_string_matrix(c, r) for c in found]
    skew = _sort_by_support(mats[:s])
    sources = [m @ symmetrizer(m) for m in mats[s:]]
    sym = _sort_by_support([symmetrize(E) for E in sources])
    return HRFamily(2 ** r, s, t, skew + sym)


def inflate(f: HRFamily, multiplier: int) -> HRFamily:
    """Block-diagonal copy I_u (x) E of every member, u odd."""
    if multiplier < 1 or multiplier % 2 == 0:
        raise ValueError("multiplier must be a positive odd integer")
    eye = np.eye(multiplier, dtype=np.int64)
    return HRFamily(f.n * multiplier, f.s, f.t, [np.kron(eye, m) for m in f.members])


def family_for_signature(n: int, s: int, t: int) -> HRFamily:
    """HR(s, t) family at even order n = u * 2**r with u odd."""
    if n < 2 or n % 2:
        raise ValueError("order must be even and at least 2")
    u, r = hr_arith.two_adic(n)
    if t == 0:
        return build_positive(r, s, multiplier=u)
    return inflate(build_mixed(r, s, t), u)


def metric_for(f: HRFamily) -> np.ndarray:
    """Diagonal of the U-metric making every member skew-adjoint."""
    if f.t == 0:
        return np.ones(f.n, dtype=np.int64)
    u = f.n // (f.n & -f.n)
    return np.tile(np.diag(neutral_eta(f.n // u)), u)


def algebra_from_family(f: HRFamily, eta=None) -> HTypeAlgebra:
    """Pseudo H-type algebra whose J-operators are exactly the family members.

    Skew members get center norm +1 and symmetric members -1.
    """
    eta = metric_for(f) if eta is None else np.asarray(eta, dtype=np.int64)
    k = f.n // 2
    z_signs = {}
    for idx, E in enumerate(f.members):
        for p in support_factor(E).pairs:
            z_signs[p] = 1 if idx < f.s else -1
    N = build_free(k, z_signs=z_signs, u_signs=[int(v) for v in eta])
    omegas = []
    for E in f.members:
        fac = support_factor(E)
        omegas.append(OmegaVector(fac, {(i, j): int(E[j - 1, i - 1] * eta[j - 1]) * z_signs[(i, j)] for i, j in fac.pairs}))
    alg = quotient(N, omegas)
    for E, J in zip(f.members, alg.j_matrices):
        if not np.array_equal(E, J):
            raise ValueError("family members are not skew-adjoint for the chosen metric")
    return alg


def conjugate(f: HRFamily, B) -> HRFamily:
    B = np.asarray(B, dtype=np.int64)
    return HRFamily(f.n, f.s, f.t, [B @ E @ B.T for E in f.members])


def family_from_omegas(omegas: Sequence[dict]) -> HRFamily:
    """Positive-metric family from omega coefficient maps."""
    mats = [matrix_from_omega(OmegaVector.from_pairs(w)) for w in omegas]
    return HRFamily(mats[0].shape[0], len(mats), 0, mats)


def example_family(name: str) -> HRFamily:
    if name in fixtures.OMEGA_SETS:
        return family_from_omegas(fixtures.OMEGA_SETS[name])
    if name == "octonion8":
        mats = fixtures.octonion_family()
        return HRFamily(8, 7, 0, mats)
    raise KeyError(name)
