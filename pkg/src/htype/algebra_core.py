"""Free two-step nilpotent metric Lie algebras and their pseudo H-type quotients.

Basis of the first layer U is e1..e_{2k}; the second layer Z has basis
e_i x e_j (i < j) in lexicographic order. Both metrics are diagonal with
entries sign/k. All inner products and structure constants are Fractions.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Mapping, Sequence

import numpy as np

from . import exact
from .graph_factor import OneFactor, Pair

MAX_UNKNOWNS = 24
MAX_FREE_BITS = 20


@dataclass(frozen=True)
class Metric:
    signs: tuple[int, ...]
    scale_denominator: int = 1

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("metric signs must be +1 or -1")
        if self.scale_denominator < 1:
            raise ValueError("scale denominator must be positive")

    def value(self, i: int) -> Fraction:
        """Square norm of the i-th basis vector (0-based)."""
        return Fraction(self.signs[i], self.scale_denominator)

    @property
    def eta(self) -> np.ndarray:
        return np.diag(np.array(self.signs, dtype=np.int64))

    @property
    def signature(self) -> tuple[int, int]:
        return self.signs.count(1), self.signs.count(-1)


def pair_list(k: int) -> list[Pair]:
    return [(i, j) for i in range(1, 2 * k + 1) for j in range(i + 1, 2 * k + 1)]


@dataclass(frozen=True)
class FreeNilpotent2:
    k: int
    metric_U: Metric
    metric_Z: Metric
    pairs: tuple[Pair, ...] = field(repr=False)

    @property
    def dim_U(self) -> int:
        return 2 * self.k

    @property
    def dim_Z(self) -> int:
        return len(self.pairs)

    @property
    def basis_U(self) -> list[str]:
        return [f"e{i}" for i in range(1, 2 * self.k + 1)]

    @property
    def basis_Z(self) -> list[str]:
        return [f"e{i}xe{j}" for i, j in self.pairs]

    def pair_index(self, i: int, j: int) -> int:
        a, b = min(i, j), max(i, j)
        return self.pairs.index((a, b))

    def z_sign(self, i: int, j: int) -> int:
        return self.metric_Z.signs[self.pair_index(i, j)]

    def bracket(self, i: int, j: int) -> tuple[int, int] | None:
        """[e_i, e_j] as (sign, index into Z basis); None when i == j."""
        if i == j:
            return None
        idx = self.pair_index(i, j)
        return (1 if i < j else -1), idx

    def inner_Z(self, x: Sequence, y: Sequence) -> Fraction:
        k = self.metric_Z.scale_denominator
        return sum((Fraction(a) * b * s for a, b, s in zip(x, y, self.metric_Z.signs)), Fraction(0)) / k


def default_z_signs(k: int, positive: Sequence[OneFactor] = (), negative: Sequence[OneFactor] = ()) -> dict[Pair, int]:
    """+1 on pairs of the positive factors, -1 on the negative ones, +1 elsewhere."""
    signs = {p: 1 for p in pair_list(k)}
    for f in negative:
        for p in f.pairs:
            signs[p] = -1
    return signs


def build_free(
    k: int,
    sig_U: tuple[int, int] | None = None,
    z_signs: Mapping[Pair, int] | None = None,
    u_signs: Sequence[int] | None = None,
) -> FreeNilpotent2:
    """Free two-step nilpotent algebra on 2k generators with diagonal metrics ±1/k.

    The U-metric has its positive directions first unless ``u_signs`` gives
    an explicit ordering.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if u_signs is None:
        p, q = sig_U if sig_U is not None else (2 * k, 0)
        if p < 0 or q < 0 or p + q != 2 * k:
            raise ValueError(f"U signature {sig_U} does not sum to {2 * k}")
        u_signs = [1] * p + [-1] * q
    elif len(u_signs) != 2 * k:
        raise ValueError("u_signs has the wrong length")
    elif sig_U is not None and Metric(tuple(u_signs)).signature != tuple(sig_U):
        raise ValueError("u_signs disagree with sig_U")
    pairs = pair_list(k)
    zs = {p: 1 for p in pairs}
    if z_signs is not None:
        for p, s in z_signs.items():
            key = (min(p), max(p))
            if key not in zs:
                raise ValueError(f"pair {p} is not an edge of K_{2 * k}")
            zs[key] = s
    return FreeNilpotent2(
        k,
        Metric(tuple(u_signs), k),
        Metric(tuple(zs[p] for p in pairs), k),
        tuple(pairs),
    )


@dataclass(frozen=True)
class OmegaVector:
    """Element sum alpha_ij e_i x e_j supported exactly on one factor."""

    factor: OneFactor
    coeffs: Mapping[Pair, int]

    def __post_init__(self):
        coeffs = {(min(p), max(p)): v for p, v in dict(self.coeffs).items()}
        if set(coeffs) != set(self.factor.pairs) or any(v == 0 for v in coeffs.values()):
            raise ValueError("coefficients must be nonzero exactly on the factor's pairs")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_pairs(cls, coeffs: Mapping[Pair, int]) -> "OmegaVector":
        return cls(OneFactor(tuple(coeffs)), coeffs)

    def __hash__(self):
        return hash((self.factor, tuple(sorted(self.coeffs.items()))))

    @property
    def is_unit(self) -> bool:
        return all(v in (-1, 1) for v in self.coeffs.values())

    def vector(self, N: FreeNilpotent2) -> list[Fraction]:
        v = [Fraction(0)] * N.dim_Z
        for p, c in self.coeffs.items():
            v[N.pair_index(*p)] = Fraction(c)
        return v

    def __str__(self) -> str:
        return format_z({p: c for p, c in sorted(self.coeffs.items())})

    def to_json(self) -> list:
        return [[i, j, int(c)] for (i, j), c in sorted(self.coeffs.items())]


def format_z(coeffs: Mapping[Pair, Fraction | int]) -> str:
    parts = []
    for (i, j), c in coeffs.items():
        if c == 0:
            continue
        mag = abs(c)
        body = f"e{i}xe{j}" if mag == 1 else f"{mag}*e{i}xe{j}"
        parts.append(("-" if c < 0 else "+") + " " + body)
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def j_operator(omega: OmegaVector, N: FreeNilpotent2) -> np.ndarray:
    """Matrix of J_omega on U, defined by (J u, v)_U = (omega, u x v)_Z.

    For a pair i < j with coefficient alpha and Z-sign eps this gives
    J e_i = alpha*eps*eta_j e_j and J e_j = -alpha*eps*eta_i e_i.
    """
    if not omega.is_unit:
        raise ValueError("omega coefficients must be +1 or -1")
    if omega.factor.order != N.dim_U:
        raise ValueError("omega lives on a different number of generators")
    eta = N.metric_U.signs
    J = np.zeros((N.dim_U, N.dim_U), dtype=np.int64)
    for (i, j), a in omega.coeffs.items():
        beta = a * N.z_sign(i, j)
        J[j - 1, i - 1] = beta * eta[j - 1]
        J[i - 1, j - 1] = -beta * eta[i - 1]
    return J


def positive_free(k: int) -> FreeNilpotent2:
    return build_free(k)


def matrix_from_omega(omega: OmegaVector, N: FreeNilpotent2 | None = None) -> np.ndarray:
    if N is None:
        N = positive_free(omega.factor.order // 2)
    return j_operator(omega, N)


def check_block_structure(factor: OneFactor, k: int) -> bool:
    same = [(i <= k) == (j <= k) for i, j in factor.pairs]
    return all(same) or not any(same)


def omega_norm(omega: OmegaVector, N: FreeNilpotent2) -> Fraction:
    v = omega.vector(N)
    return N.inner_Z(v, v)


def orthogonal_complement(omegas: Sequence[OmegaVector], N: FreeNilpotent2) -> list[list[Fraction]]:
    """Basis of the ideal A = {a in Z : (a, omega)_Z = 0 for all omega}.

    When the omegas sit on pairwise distinct factors the basis is written
    down directly: for each factor with pairs p1 < p2 < ... the vectors
    eps_pm*alpha_p1 e_p1 - eps_p1*alpha_pm e_pm, plus every unused pair.
    Otherwise an exact nullspace is returned.
    """
    vecs = [w.vector(N) for w in omegas]
    if exact.rank(vecs, N.dim_Z) != len(vecs):
        raise ValueError("omega vectors are linearly dependent")
    supports = [set(w.coeffs) for w in omegas]
    disjoint = all(not (a & b) for a, b in combinations(supports, 2))
    if not disjoint:
        gram_rows = [[x * s for x, s in zip(v, N.metric_Z.signs)] for v in vecs]
        return exact.nullspace(gram_rows, N.dim_Z)
    basis = []
    used = set()
    for w in omegas:
        pairs = sorted(w.coeffs)
        used.update(pairs)
        p1 = pairs[0]
        for pm in pairs[1:]:
            v = [Fraction(0)] * N.dim_Z
            v[N.pair_index(*p1)] = Fraction(N.z_sign(*pm) * w.coeffs[p1])
            v[N.pair_index(*pm)] = Fraction(-N.z_sign(*p1) * w.coeffs[pm])
            basis.append(v)
    for p in N.pairs:
        if p not in used:
            v = [Fraction(0)] * N.dim_Z
            v[N.pair_index(*p)] = Fraction(1)
            basis.append(v)
    return basis


@dataclass
class HTypeAlgebra:
    free: FreeNilpotent2
    omega_basis: tuple[OmegaVector, ...]
    z_norms: tuple[Fraction, ...]
    structure_constants: dict[tuple[int, int], tuple[Fraction, int]]
    j_matrices: tuple[np.ndarray, ...]

    @property
    def k(self) -> int:
        return self.free.k

    @property
    def dim_h(self) -> int:
        return 2 * self.free.k

    @property
    def sig_h(self) -> tuple[int, int]:
        return self.free.metric_U.signature

    @property
    def sig_z(self) -> tuple[int, int]:
        return sum(1 for z in self.z_norms if z > 0), sum(1 for z in self.z_norms if z < 0)

    def bracket(self, n: int, m: int) -> list[Fraction]:
        """[e_n, e_m] in the omega basis."""
        out = [Fraction(0)] * len(self.omega_basis)
        if (n, m) in self.structure_constants:
            c, idx = self.structure_constants[(n, m)]
            out[idx] = c
        return out

    def to_dict(self) -> dict:
        consts = [
            {"i": i, "j": j, "num": c.numerator, "den": c.denominator, "z_index": idx + 1}
            for (i, j), (c, idx) in sorted(self.structure_constants.items())
            if i < j
        ]
        return {
            "k": self.k,
            "sig_h": list(self.sig_h),
            "sig_z": list(self.sig_z),
            "u_metric_signs": list(self.free.metric_U.signs),
            "z_metric_signs": {f"{i}-{j}": s for (i, j), s in zip(self.free.pairs, self.free.metric_Z.signs)},
            "omega_basis": [w.to_json() for w in self.omega_basis],
            "structure_constants": consts,
            "j_matrices": [m.tolist() for m in self.j_matrices],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, data: dict) -> "HTypeAlgebra":
        z_signs = {tuple(int(v) for v in key.split("-")): s for key, s in data["z_metric_signs"].items()}
        N = build_free(int(data["k"]), z_signs=z_signs, u_signs=data["u_metric_signs"])
        omegas = [OmegaVector.from_pairs({(i, j): c for i, j, c in w}) for w in data["omega_basis"]]
        return quotient(N, omegas)

    @classmethod
    def from_json(cls, text: str) -> "HTypeAlgebra":
        return cls.from_dict(json.loads(text))


def _first_violation(mats: Sequence[np.ndarray], norms: Sequence[Fraction]) -> str | None:
    n = mats[0].shape[0]
    eye = np.eye(n, dtype=np.int64)
    for i, (J, z) in enumerate(zip(mats, norms)):
        if not np.array_equal(J @ J, -int(z) * eye):
            return f"J{i + 1} squares to something other than {-int(z)}*I"
    for i, j in combinations(range(len(mats)), 2):
        if np.any(mats[i] @ mats[j] + mats[j] @ mats[i]):
            return f"J{i + 1} and J{j + 1} do not anticommute"
    return None


def quotient(N: FreeNilpotent2, omegas: Sequence[OmegaVector], check: bool = True) -> HTypeAlgebra:
    """The quotient N/A where A is the orthogonal complement of span(omegas).

    With ``check`` the J-operators must square to -(z,z) and anticommute;
    a ValueError names the first offending pair otherwise.
    """
    omegas = tuple(omegas)
    if not omegas:
        raise ValueError("need at least one omega")
    supports = [set(w.coeffs) for w in omegas]
    for a, b in combinations(range(len(omegas)), 2):
        if supports[a] & supports[b]:
            raise ValueError(f"omega {a + 1} and omega {b + 1} share a pair")
    norms = tuple(omega_norm(w, N) for w in omegas)
    for i, z in enumerate(norms):
        if z not in (1, -1):
            raise ValueError(f"omega {i + 1} has square norm {z}, expected +1 or -1")
    mats = tuple(j_operator(w, N) for w in omegas)
    if check:
        bad = _first_violation(mats, norms)
        if bad:
            raise ValueError(bad)
    k = N.k
    consts: dict[tuple[int, int], tuple[Fraction, int]] = {}
    for idx, (w, z) in enumerate(zip(omegas, norms)):
        for (i, j), a in w.coeffs.items():
            # coefficient of omega in the orthogonal projection of e_i x e_j
            c = Fraction(a * N.z_sign(i, j), k) / z
            consts[(i, j)] = (c, idx)
            consts[(j, i)] = (-c, idx)
    return HTypeAlgebra(N, omegas, norms, consts, mats)


@dataclass
class Check:
    name: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        tail = f" ({self.witness})" if self.witness else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}{tail}"


@dataclass
class Report:
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def text(self) -> str:
        return "\n".join(c.line() for c in self.checks)

    def __getitem__(self, key: str) -> Check:
        for c in self.checks:
            if c.name.startswith(key):
                return c
        raise KeyError(key)


def _center_combinations(alg: HTypeAlgebra):
    m = len(alg.omega_basis)
    for i in range(m):
        coeffs = [0] * m
        coeffs[i] = 1
        yield coeffs
    for i, j in combinations(range(m), 2):
        for sgn in (1, -1):
            coeffs = [0] * m
            coeffs[i], coeffs[j] = 1, sgn
            yield coeffs


def verify_h_type(alg: HTypeAlgebra) -> Report:
    N = alg.free
    n = alg.dim_h
    k = N.k
    eta = N.metric_U.eta
    etas = N.metric_U.signs
    mats = alg.j_matrices
    m = len(mats)
    vecs = [w.vector(N) for w in alg.omega_basis]
    zgram = [[N.inner_Z(a, b) for b in vecs] for a in vecs]
    checks = []

    wit = ""
    for l, a, b in product(range(m), range(1, n + 1), range(1, n + 1)):
        lhs = Fraction(int(mats[l][b - 1, a - 1]) * etas[b - 1], k)
        br = alg.bracket(a, b)
        rhs = sum((zgram[l][q] * br[q] for q in range(m)), Fraction(0))
        if lhs != rhs:
            wit = f"z{l + 1}, e{a}, e{b}: {lhs} != {rhs}"
            break
    checks.append(Check("(a) defining relation (J_z u, v) = (z, [u, v])", not wit, wit))

    ortho_wit, square_wit = "", ""
    eye = np.eye(n, dtype=np.int64)
    for coeffs in _center_combinations(alg):
        Jz = sum(c * J for c, J in zip(coeffs, mats))
        zz = sum((Fraction(coeffs[p] * coeffs[q]) * zgram[p][q] for p in range(m) for q in range(m)), Fraction(0))
        lhs = Jz.T @ eta @ Jz
        if not ortho_wit and (zz.denominator != 1 or not np.array_equal(lhs, zz.numerator * eta)):
            ortho_wit = f"z = {coeffs}"
        if not square_wit and (zz.denominator != 1 or not np.array_equal(Jz @ Jz, -zz.numerator * eye)):
            square_wit = f"z = {coeffs}"
    checks.append(Check("(b) orthogonality (J_z u, J_z v) = (z,z)(u,v)", not ortho_wit, ortho_wit))
    checks.append(Check("(c) squares J_z^2 = -(z,z) id", not square_wit, square_wit))

    wit = next((f"J{i + 1}" for i, J in enumerate(mats) if np.any(eta @ J + J.T @ eta)), "")
    checks.append(Check("(d) skew-symmetry eta J + J^T eta = 0", not wit, wit))

    wit = next(
        (f"J{i + 1}, J{j + 1}" for i, j in combinations(range(m), 2) if np.any(mats[i] @ mats[j] + mats[j] @ mats[i])),
        "",
    )
    checks.append(Check("(e) anticommutation J_i J_j = -J_j J_i", not wit, wit))

    wit = ""
    if any(not (1 <= a <= n and 1 <= b <= n) for a, b in alg.structure_constants):
        wit = "bracket defined outside the first layer"
    else:
        ad = [[c for b in range(1, n + 1) for c in alg.bracket(a, b)] for a in range(1, n + 1)]
        if exact.rank(ad, n * m) != n:
            wit = "a first-layer vector is central"
        hit = {idx for (c, idx) in alg.structure_constants.values() if c != 0}
        if not wit and hit != set(range(m)):
            wit = f"omega {min(set(range(m)) - hit) + 1} is not a bracket"
    checks.append(Check("(f) two-step nilpotent with center equal to the second layer", not wit, wit))

    p, q = alg.sig_h
    if alg.sig_z[1] >= 1:
        checks.append(Check("(g) neutral first-layer metric", p == q, "" if p == q else f"signature ({p},{q})"))
    else:
        checks.append(Check("(g) neutral first-layer metric", True, "not required, center is definite"))

    wit = ""
    for (a, b), (c, _) in alg.structure_constants.items():
        if k % c.denominator or abs(c.numerator) > 1:
            wit = f"[e{a}, e{b}] has constant {c}"
            break
    checks.append(Check("(h) rational constants with denominator dividing k", not wit, wit))
    return Report(checks)


def _symbolic_j(factor: OneFactor, N: FreeNilpotent2, offset: int) -> list[list[tuple[int, int] | None]]:
    """J with entries (constant sign, unknown index) for coefficients alpha_p = x_{offset+i}."""
    n = N.dim_U
    eta = N.metric_U.signs
    S: list[list[tuple[int, int] | None]] = [[None] * n for _ in range(n)]
    for idx, (i, j) in enumerate(factor.pairs):
        e = N.z_sign(i, j)
        S[j - 1][i - 1] = (e * eta[j - 1], offset + idx)
        S[i - 1][j - 1] = (-e * eta[i - 1], offset + idx)
    return S


def gf2_solutions(constraints: Sequence[tuple[int, int]], nvar: int) -> list[int]:
    """All bit vectors x of length nvar with popcount(x & mask) % 2 == parity for every constraint."""
    pivots: dict[int, tuple[int, int]] = {}
    for mask, parity in constraints:
        for bit, (pm, pp) in pivots.items():
            if mask >> bit & 1:
                mask, parity = mask ^ pm, parity ^ pp
        if mask == 0:
            if parity:
                return []
            continue
        bit = mask.bit_length() - 1
        for b, (pm, pp) in list(pivots.items()):
            if pm >> bit & 1:
                pivots[b] = (pm ^ mask, pp ^ parity)
        pivots[bit] = (mask, parity)
    free = [b for b in range(nvar) if b not in pivots]
    if len(free) > MAX_FREE_BITS:
        raise ValueError(f"{len(free)} free sign choices exceeds the enumeration limit {MAX_FREE_BITS}")
    out = []
    for choice in range(1 << len(free)):
        x = 0
        for i, b in enumerate(free):
            if choice >> i & 1:
                x |= 1 << b
        for bit, (pm, pp) in pivots.items():
            rest = pm & ~(1 << bit)
            if (bin(x & rest).count("1") & 1) ^ pp:
                x |= 1 << bit
        out.append(x)
    return sorted(out)


def _parity_constraints(factors: Sequence[OneFactor], N: FreeNilpotent2):
    """Anticommutation and square conditions as (mask, parity) pairs over the unknown bits.

    Bit b set means alpha_b = -1. Returns None when some condition can never hold.
    """
    k = N.k
    syms = [_symbolic_j(f, N, i * k) for i, f in enumerate(factors)]
    n = N.dim_U
    constraints = set()

    def mono(A, B, a, b):
        out = []
        for c in range(n):
            x, y = A[a][c], B[c][b]
            if x is not None and y is not None:
                out.append((x[0] * y[0], (1 << x[1]) ^ (1 << y[1])))
        return out

    for l, f in enumerate(factors):
        eps = N.z_sign(*f.pairs[0])
        for a in range(n):
            for b in range(n):
                terms = mono(syms[l], syms[l], a, b)
                want = -eps if a == b else 0
                total = sum(c for c, mask in terms if mask == 0)
                if any(mask for _, mask in terms) or total != want:
                    return None
    for l, m in combinations(range(len(factors)), 2):
        for a in range(n):
            for b in range(n):
                terms = mono(syms[l], syms[m], a, b) + mono(syms[m], syms[l], a, b)
                if not terms:
                    continue
                if len(terms) != 2:
                    return None
                (c1, m1), (c2, m2) = terms
                # c1*prod(m1) + c2*prod(m2) = 0  <=>  prod(m1 ^ m2) = -c1*c2
                constraints.add((m1 ^ m2, 0 if -c1 * c2 == 1 else 1))
    return sorted(constraints)


def solve_coefficients(
    factors: Sequence[OneFactor],
    N: FreeNilpotent2,
    fixed: Mapping[Pair, int] | None = None,
) -> list[dict[Pair, int]]:
    """Every ±1 choice of the alpha's on ``factors`` giving anticommuting J's with the right squares.

    The conditions are parities of sign products. Up to MAX_UNKNOWNS unknowns
    all 2**n sign patterns are screened at once; larger systems are solved by
    elimination over GF(2). Each survivor is confirmed by explicit matrix products.
    """
    factors = list(factors)
    unknowns = [p for f in factors for p in f.pairs]
    nvar = len(unknowns)
    constraints = _parity_constraints(factors, N)
    if constraints is None:
        return []
    constraints = list(constraints)
    for p, v in (fixed or {}).items():
        bit = unknowns.index((min(p), max(p)))
        constraints.append((1 << bit, 1 if v == -1 else 0))
    if nvar <= MAX_UNKNOWNS:
        candidates = np.arange(1 << nvar, dtype=np.uint32)
        keep = np.ones(candidates.shape, dtype=bool)
        for mask, parity in constraints:
            keep &= (np.bitwise_count(candidates & np.uint32(mask)) & 1) == parity
        codes = [int(c) for c in candidates[keep]]
    else:
        codes = gf2_solutions(constraints, nvar)
    out = []
    for code in codes:
        alpha = {p: (-1 if (code >> b) & 1 else 1) for b, p in enumerate(unknowns)}
        omegas = [OmegaVector(f, {p: alpha[p] for p in f.pairs}) for f in factors]
        mats = [j_operator(w, N) for w in omegas]
        norms = [Fraction(N.z_sign(*f.pairs[0])) for f in factors]
        if _first_violation(mats, norms) is None:
            out.append(alpha)
    out.sort(key=lambda a: tuple(-a[p] for p in unknowns))
    return out


def k2_relations(alpha: Mapping[Pair, int]) -> tuple[int, int, int]:
    """Anticommutation conditions for K4 read off from the image of e1."""
    a = lambda i, j: alpha[(i, j)]
    return (
        a(1, 2) * a(2, 4) + a(1, 3) * a(3, 4),
        a(1, 3) * a(2, 3) + a(1, 4) * a(2, 4),
        a(1, 4) * a(3, 4) - a(1, 2) * a(2, 3),
    )


def k2_relations_alt(alpha: Mapping[Pair, int]) -> tuple[int, int, int]:
    """The same conditions read off from e2, e3, e4."""
    a = lambda i, j: alpha[(i, j)]
    return (
        a(1, 2) * a(1, 3) + a(2, 4) * a(3, 4),
        a(1, 3) * a(1, 4) + a(2, 3) * a(2, 4),
        a(1, 2) * a(1, 4) - a(2, 3) * a(3, 4),
    )
