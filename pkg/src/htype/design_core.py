"""Orthogonal designs, amicable pairs and eta-orthogonality built from HR families.

A design is stored as an integer matrix of signed variable indices: entry
+k means x_k, -k means -x_k, 0 means zero. Variables are numbered from 1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from . import hr_arith
from .hr_family import HRFamily, is_signed_permutation


@dataclass(frozen=True)
class DesignMatrix:
    entries: np.ndarray
    var_count: int

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int64)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError("design must be square")
        if np.any(np.abs(e) > self.var_count):
            raise ValueError("entry references an unknown variable")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_members(cls, members: Sequence[np.ndarray]) -> "DesignMatrix":
        """Sum of x_k * members[k-1]; members must have disjoint supports."""
        mats = [np.asarray(m, dtype=np.int64) for m in members]
        if not mats:
            raise ValueError("at least one member is required")
        out = np.zeros_like(mats[0])
        for k, m in enumerate(mats, start=1):
            if not np.all(np.isin(m, (-1, 0, 1))):
                raise ValueError(f"member {k} has entries outside {{0, 1, -1}}")
            if np.any((out != 0) & (m != 0)):
                raise ValueError(f"member {k} collides with an earlier member")
            out = out + k * m
        return cls(out, len(mats))

    def coefficient(self, k: int) -> np.ndarray:
        """The 0/+-1 matrix multiplying x_k."""
        e = self.entries
        return np.where(e == k, 1, 0) - np.where(e == -k, 1, 0)

    def evaluate(self, values: Sequence[int]) -> np.ndarray:
        if len(values) != self.var_count:
            raise ValueError("wrong number of values")
        v = np.concatenate([[0], np.asarray(values, dtype=np.int64)])
        return np.sign(self.entries) * v[np.abs(self.entries)]

    def format(self, name: str = "x") -> str:
        def tok(v):
            return "0" if v == 0 else ("-" if v < 0 else "") + f"{name}{abs(v)}"

        cells = [[tok(int(v)) for v in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)

    def to_json(self) -> str:
        rows = [[0 if v == 0 else [abs(int(v)), 1 if v > 0 else -1] for v in row] for row in self.entries]
        return json.dumps({"n": self.n, "var_count": self.var_count, "entries": rows})

    @classmethod
    def from_json(cls, text: str) -> "DesignMatrix":
        data = json.loads(text)
        rows = [[0 if v == 0 else v[0] * v[1] for v in row] for row in data["entries"]]
        return cls(np.array(rows, dtype=np.int64), int(data["var_count"]))


@dataclass
class SymbolicQuadratic:
    """sum over keys (a, b) of x_a * y_b * coefficients[(a, b)]."""

    coefficients: dict[tuple[int, int], np.ndarray]

    def nonzero(self) -> dict[tuple[int, int], np.ndarray]:
        return {k: m for k, m in self.coefficients.items() if np.any(m)}


def product_transpose(D: DesignMatrix, E: DesignMatrix, same_variables: bool) -> SymbolicQuadratic:
    """Symbolic D E^T. With shared variables, x_a x_b and x_b x_a are merged under a <= b."""
    if D.n != E.n:
        raise ValueError("designs have different orders")
    cd = {a: D.coefficient(a) for a in range(1, D.var_count + 1)}
    ce = {b: E.coefficient(b) for b in range(1, E.var_count + 1)}
    out: dict[tuple[int, int], np.ndarray] = {}
    for a, A in cd.items():
        for b, B in ce.items():
            key = (min(a, b), max(a, b)) if same_variables else (a, b)
            term = A @ B.T
            out[key] = out[key] + term if key in out else term
    return SymbolicQuadratic(out)


def gram(D: DesignMatrix) -> SymbolicQuadratic:
    return product_transpose(D, D, same_variables=True)


def verify_od(D: DesignMatrix, weights: Sequence[int]) -> bool:
    """D D^T == (sum u_k x_k^2) I as polynomials."""
    if len(weights) != D.var_count:
        raise ValueError("need one weight per variable")
    eye = np.eye(D.n, dtype=np.int64)
    for (a, b), M in gram(D).coefficients.items():
        want = weights[a - 1] * eye if a == b else 0 * eye
        if not np.array_equal(M, want):
            return False
    return True


def verify_amicable(X: DesignMatrix, Y: DesignMatrix) -> bool:
    """X Y^T == Y X^T as polynomials in disjoint variable sets."""
    xy = product_transpose(X, Y, same_variables=False).coefficients
    yx = product_transpose(Y, X, same_variables=False).coefficients
    return all(np.array_equal(xy[(a, b)], yx[(b, a)]) for a, b in xy)


def numeric_od(D: DesignMatrix, weights: Sequence[int], values: Sequence[int]) -> bool:
    M = D.evaluate(values)
    q = sum(u * v * v for u, v in zip(weights, values))
    return bool(np.array_equal(M @ M.T, q * np.eye(D.n, dtype=np.int64)))


def numeric_amicable(X: DesignMatrix, Y: DesignMatrix, xs: Sequence[int], ys: Sequence[int]) -> bool:
    A, B = X.evaluate(xs), Y.evaluate(ys)
    return bool(np.array_equal(A @ B.T, B @ A.T))


def from_family(fam: HRFamily, include_identity: bool = True) -> DesignMatrix:
    """Design x_1 I + x_2 E_1 + ... (or x_1 E_1 + ... without the identity)."""
    members = [np.eye(fam.n, dtype=np.int64)] if include_identity else []
    return DesignMatrix.from_members(members + list(fam.members))


def amicable_from_family(fam: HRFamily) -> tuple[DesignMatrix, DesignMatrix]:
    """X = x_1 I + sum x_{k+1} (skew members), Y = sum y_j (symmetric members)."""
    if fam.t < 1:
        raise ValueError("an amicable partner needs at least one symmetric member")
    X = DesignMatrix.from_members([np.eye(fam.n, dtype=np.int64)] + fam.skew)
    Y = DesignMatrix.from_members(fam.symmetric)
    return X, Y


def derived_family(X: DesignMatrix, Y: DesignMatrix) -> HRFamily:
    """HR(s-1, t) family X_1^T X_k (k >= 2) followed by X_1^T Y_j, from an amicable pair."""
    X1 = X.coefficient(1)
    if not is_signed_permutation(X1):
        raise ValueError("first design variable does not carry a signed permutation")
    skew = [X1.T @ X.coefficient(k) for k in range(2, X.var_count + 1)]
    sym = [X1.T @ Y.coefficient(j) for j in range(1, Y.var_count + 1)]
    return HRFamily(X.n, len(skew), len(sym), skew + sym)


@dataclass
class EtaReport:
    rows: list[dict]

    @property
    def passed(self) -> bool:
        return all(r["holds"] for r in self.rows)

    def text(self) -> str:
        lines = [
            f"{'PASS' if r['holds'] else 'FAIL'} member {r['index']} ({r['kind']}): {r['relation']}"
            for r in self.rows
        ]
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def verify_eta(fam: HRFamily, eta) -> EtaReport:
    """Isometry eta E^T eta = E^-1 for skew members, anti-isometry eta E^T eta = -E^-1 otherwise."""
    eta = np.asarray(getattr(eta, "eta", eta), dtype=np.int64)
    if eta.ndim == 1:
        eta = np.diag(eta)
    if not np.array_equal(eta, np.diag(np.diag(eta))) or not np.all(np.isin(np.diag(eta), (-1, 1))):
        raise ValueError("eta must be diagonal with entries +-1")
    rows = []
    for i, E in enumerate(fam.members):
        skew = i < fam.s
        inv = E.T  # signed permutations are orthogonal
        lhs = eta @ E.T @ eta
        rows.append(
            {
                "index": i + 1,
                "kind": "skew" if skew else "symmetric",
                "relation": "isometry" if skew else "anti-isometry",
                "holds": bool(np.array_equal(lhs, inv if skew else -inv)),
            }
        )
    return EtaReport(rows)


def max_variables(n: int) -> int:
    return hr_arith.rho(n)


def max_amicable_s(n: int, t: int) -> int | None:
    """Largest variable count of X amicable with a t-variable Y at even order n.

    The pair yields an HR(s-1, t) family at order 2**r, r the 2-adic
    valuation of n, so s is one more than the maximal signature value.
    """
    if n < 2 or n % 2:
        raise ValueError("order must be even and at least 2")
    if t < 1:
        raise ValueError("t must be at least 1")
    _, r = hr_arith.two_adic(n)
    m = hr_arith.max_signature_s(r, t)
    return None if m is None else m + 1


def pairwise_disjoint(members: Sequence[np.ndarray]) -> bool:
    return all(not np.any((A != 0) & (B != 0)) for A, B in combinations(members, 2))
