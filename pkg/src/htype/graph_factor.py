"""1-factorizations of complete graphs K_{2k} and cycle types of factor unions.

Vertices are 1-based everywhere in the public interface.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

Pair = tuple[int, int]


@dataclass(frozen=True, order=True)
class OneFactor:
    """A perfect matching on {1..2k}, stored with pairs sorted."""

    pairs: tuple[Pair, ...]

    def __post_init__(self):
        pairs = tuple(sorted((min(p), max(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        seen = [v for p in pairs for v in p]
        n = len(seen)
        if n == 0 or sorted(seen) != list(range(1, n + 1)) or any(i == j for i, j in pairs):
            raise ValueError(f"not a perfect matching on 1..{n}: {pairs}")

    @classmethod
    def parse(cls, text: str) -> "OneFactor":
        pairs = []
        for tok in text.split():
            a, b = tok.split("-")
            pairs.append((int(a), int(b)))
        return cls(tuple(pairs))

    @property
    def order(self) -> int:
        return 2 * len(self.pairs)

    def partner(self) -> dict[int, int]:
        out = {}
        for i, j in self.pairs:
            out[i], out[j] = j, i
        return out

    def __str__(self) -> str:
        return " ".join(f"{i}-{j}" for i, j in self.pairs)


@dataclass(frozen=True)
class OneFactorization:
    factors: tuple[OneFactor, ...]

    @property
    def order(self) -> int:
        return self.factors[0].order if self.factors else 0

    def canonical(self) -> "OneFactorization":
        return OneFactorization(tuple(sorted(self.factors)))

    def to_text(self) -> str:
        return "\n".join(str(f) for f in self.factors) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "OneFactorization":
        return cls(tuple(OneFactor.parse(line) for line in text.splitlines() if line.strip()))

    def to_json(self) -> str:
        return json.dumps([[list(p) for p in f.pairs] for f in self.factors])

    @classmethod
    def from_json(cls, text: str) -> "OneFactorization":
        data = json.loads(text)
        return cls(tuple(OneFactor(tuple(tuple(p) for p in f)) for f in data))


@dataclass(frozen=True)
class CycleType:
    lengths: tuple[int, ...]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.lengths)) + "}"


def round_robin(k: int) -> OneFactorization:
    """Circle-method schedule for 2k players: vertex 2k stays fixed, the rest rotate."""
    if k < 1:
        raise ValueError("k must be >= 1")
    m = 2 * k - 1
    factors = []
    for rnd in range(m):
        pairs = [(rnd + 1, 2 * k)]
        for i in range(1, k):
            a, b = (rnd + i) % m, (rnd - i) % m
            pairs.append((a + 1, b + 1))
        factors.append(OneFactor(tuple(pairs)))
    return OneFactorization(tuple(factors)).canonical()


def xor_factorization(m: int) -> OneFactorization:
    """Factor a pairs x with x XOR a, for every nonzero m-bit a."""
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 1 << m
    factors = []
    for a in range(1, n):
        factors.append(OneFactor(tuple((x + 1, (x ^ a) + 1) for x in range(n) if x < x ^ a)))
    return OneFactorization(tuple(factors)).canonical()


def validate_factorization(f: OneFactorization) -> bool:
    if not f.factors:
        return False
    n = f.factors[0].order
    if any(x.order != n for x in f.factors) or len(f.factors) != n - 1:
        return False
    edges = Counter(p for x in f.factors for p in x.pairs)
    return len(edges) == n * (n - 1) // 2 and all(c == 1 for c in edges.values())


def union_cycles(f1: OneFactor, f2: OneFactor) -> CycleType:
    """Cycle lengths of the multigraph f1 + f2 (alternating cycles)."""
    if f1.order != f2.order:
        raise ValueError("factors live on different vertex sets")
    if f1 == f2:
        raise ValueError("union of a factor with itself is degenerate")
    a, b = f1.partner(), f2.partner()
    seen: set[int] = set()
    lengths = []
    for start in range(1, f1.order + 1):
        if start in seen:
            continue
        v, length, use_a = start, 0, True
        while True:
            seen.add(v)
            v = a[v] if use_a else b[v]
            use_a = not use_a
            length += 1
            if v == start and use_a:
                break
        lengths.append(length)
    return CycleType(tuple(sorted(lengths)))


def is_square_pair(f1: OneFactor, f2: OneFactor) -> bool:
    return all(x == 4 for x in union_cycles(f1, f2).lengths)


def classify_all(f: OneFactorization) -> dict[tuple[int, int], CycleType]:
    """Cycle type for every pair of factors, keyed by 1-based row indices."""
    return {
        (i + 1, j + 1): union_cycles(f.factors[i], f.factors[j])
        for i, j in combinations(range(len(f.factors)), 2)
    }


def matching_of(matrix) -> OneFactor:
    """Support matching of a zero-diagonal signed permutation with symmetric support."""
    m = np.asarray(matrix)
    n = m.shape[0]
    nz = m != 0
    if np.any(np.diag(nz)) or not np.array_equal(nz, nz.T) or np.any(nz.sum(axis=0) != 1):
        raise ValueError("matrix has no matching support")
    return OneFactor(tuple((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if nz[i, j]))


def square_subfamily_from_hr(family) -> list[OneFactor]:
    """Support matchings of a family of anticommuting complex structures.

    Accepts anything with a ``members`` attribute or a plain sequence of
    square integer matrices.
    """
    members: Sequence = getattr(family, "members", family)
    mats = [np.asarray(m, dtype=np.int64) for m in members]
    if not mats:
        return []
    n = mats[0].shape[0]
    eye = np.eye(n, dtype=np.int64)
    for idx, m in enumerate(mats):
        if m.shape != (n, n) or not np.all(np.isin(m, (-1, 0, 1))) or np.any((m != 0).sum(axis=0) != 1):
            raise ValueError(f"member {idx + 1} is not a signed permutation")
        if not np.array_equal(m @ m, -eye):
            raise ValueError(f"member {idx + 1} does not square to -I")
    for i, j in combinations(range(len(mats)), 2):
        if np.any(mats[i] @ mats[j] + mats[j] @ mats[i]):
            raise ValueError(f"members {i + 1} and {j + 1} do not anticommute")
    return [matching_of(m) for m in mats]


def all_pairs_square(factors: Iterable[OneFactor]) -> bool:
    fs = list(factors)
    return all(is_square_pair(a, b) for a, b in combinations(fs, 2))
