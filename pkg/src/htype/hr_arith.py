"""Hurwitz-Radon numbers and their signed generalizations.

Everything here is pure integer arithmetic. Functions that can fail to have
an answer (the maximal-signature searches, the extended Wolfe lookups)
return ``None``; malformed input raises ``ValueError``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

MAX_ORDER = 1 << 12
MAX_EXPONENT = 10
MAX_COUNT = 12

# Known values that the doubling recurrences cannot reach on their own,
# keyed by (exponent r, index) for order 2**r.
RHO_T_BASE = {(1, 1): 2, (1, 2): 2, (3, 5): 1}
SIGMA_S_BASE = {(1, 1): 3, (2, 3): 1, (3, 5): 1, (3, 6): 1, (3, 7): 1}

# Values at order 1, used only as the half-order bound when r = 1.
_RHO_T_ORDER_ONE = {0: 1, 1: 1}
_SIGMA_S_ORDER_ONE = {0: 2}

# Residues r mod 4 for which the irreducible module of the signed Clifford
# algebra in dimension 2**r carries an admissible metric, keyed by
# (s - t) mod 8.
ADMISSIBLE_RESIDUES = {
    0: frozenset({0, 3}),
    6: frozenset({0, 3}),
    2: frozenset({0, 1, 2, 3}),
    4: frozenset({0, 1, 2, 3}),
    1: frozenset({0, 1, 3}),
    5: frozenset({0, 1, 3}),
    3: frozenset({0, 2}),
    7: frozenset({3}),
}


@dataclass(frozen=True)
class RhoDecomposition:
    u: int
    alpha: int
    beta: int

    @property
    def value(self) -> int:
        return self.u * 2 ** (4 * self.alpha + self.beta)


class SignaturePair(NamedTuple):
    s: int
    t: int


def _check_int(name: str, value, lo: int = 0, hi: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < lo:
        raise ValueError(f"{name} must be >= {lo}, got {value}")
    if hi is not None and value > hi:
        raise ValueError(f"{name} must be <= {hi}, got {value}")
    return value


def two_adic(n: int) -> tuple[int, int]:
    """Split n = odd * 2**r and return (odd, r)."""
    r = (n & -n).bit_length() - 1
    return n >> r, r


def decompose(n: int) -> RhoDecomposition:
    _check_int("n", n, 1, MAX_ORDER)
    u, r = two_adic(n)
    alpha, beta = divmod(r, 4)
    return RhoDecomposition(u, alpha, beta)


def rho(n: int) -> int:
    d = decompose(n)
    return 8 * d.alpha + 2 ** d.beta


def rho_t(r: int, t: int) -> int:
    """Signed Hurwitz-Radon number for order 2**r with t negative directions.

    Only 0 <= t <= r is accepted here; see ``wolfe_rho`` for the lookup that
    also consults the base table and the period-16 shift.
    """
    _check_int("r", r, 0, MAX_EXPONENT)
    _check_int("t", t, 0)
    if t > r:
        raise ValueError(f"rho_t needs t <= r (got r={r}, t={t})")
    value = wolfe_rho(r, t)
    assert value is not None
    return value


def sigma_s(r: int, s: int) -> int:
    """Companion of ``rho_t`` counting negative directions for fixed s."""
    _check_int("r", r, 0, MAX_EXPONENT)
    _check_int("s", s, 0)
    if (r, s) in SIGMA_S_BASE:
        return SIGMA_S_BASE[(r, s)]
    if r < 1 or s > r - 1:
        raise ValueError(f"sigma_s needs 0 <= s <= r-1 (got r={r}, s={s})")
    value = wolfe_sigma(r, s)
    assert value is not None
    return value


def wolfe_rho(r: int, t: int) -> int | None:
    """rho_t(2**r) from base values, the halving recurrence and the period-16 shift.

    Returns None when none of these rules applies.
    """
    if r < 0 or t < 0:
        return None
    if (r, t) in RHO_T_BASE:
        return RHO_T_BASE[(r, t)]
    if r == 0:
        return _RHO_T_ORDER_ONE.get(t)
    if t == 0:
        return rho(2 ** r)
    if t <= r:
        prev = wolfe_rho(r - 1, t - 1)
        return None if prev is None else prev + 1
    if t >= 8 and r >= 4:
        return wolfe_rho(r - 4, t - 8)
    prev = wolfe_rho(r - 1, t - 1)
    return None if prev is None else prev + 1


def wolfe_sigma(r: int, s: int) -> int | None:
    if r < 0 or s < 0:
        return None
    if (r, s) in SIGMA_S_BASE:
        return SIGMA_S_BASE[(r, s)]
    if r == 0:
        return _SIGMA_S_ORDER_ONE.get(s)
    if s == 0:
        return rho(2 ** (r - 1)) + 2
    if s <= r - 1:
        prev = wolfe_sigma(r - 1, s - 1)
        return None if prev is None else prev + 1
    if s >= 8 and r >= 4:
        return wolfe_sigma(r - 4, s - 8)
    prev = wolfe_sigma(r - 1, s - 1)
    return None if prev is None else prev + 1


def tau(r: int) -> int:
    _check_int("r", r, 0)
    return 2 * (r + 1)


def ciatti_admissible(s: int, t: int, r: int) -> bool:
    """Whether the irreducible (s, t) module of dimension 2**r admits a compatible metric."""
    _check_int("s", s)
    _check_int("t", t)
    _check_int("r", r)
    return r % 4 in ADMISSIBLE_RESIDUES[(s - t) % 8]


def _walk(top: int | None, half: int | None, admissible) -> int | None:
    if top is None:
        return None
    for x in range(top - 1, -1, -1):
        if admissible(x) or (half is not None and x == half - 1):
            return x
    return None


def max_signature_s(r: int, t: int) -> int | None:
    """Largest s with an (s, t) family at order 2**r, or None."""
    _check_int("r", r, 1, MAX_EXPONENT)
    _check_int("t", t, 0, MAX_COUNT)
    return _walk(wolfe_rho(r, t), wolfe_rho(r - 1, t), lambda s: ciatti_admissible(s, t, r))


def max_signature_t(r: int, s: int) -> int | None:
    """Largest t with an (s, t) family at order 2**r, or None."""
    _check_int("r", r, 1, MAX_EXPONENT)
    _check_int("s", s, 0, MAX_COUNT)
    return _walk(wolfe_sigma(r, s), wolfe_sigma(r - 1, s), lambda t: ciatti_admissible(s, t, r))


def is_realizable(r: int, s: int, t: int) -> bool:
    """True when an HR(s, t) family of order 2**r exists (s + t >= 1)."""
    if s + t == 0:
        return False
    best_s = max_signature_s(r, t) if t <= MAX_COUNT else None
    if best_s is not None and s <= best_s:
        return True
    best_t = max_signature_t(r, s) if s <= MAX_COUNT else None
    return best_t is not None and t <= best_t


def signature_table(kind: str, exponents=range(1, 6), counts=range(5)) -> list[list[int | None]]:
    """Grid of maximal s (kind 's', columns t) or maximal t (kind 't', columns s)."""
    fn = {"s": max_signature_s, "t": max_signature_t}[kind]
    return [[fn(r, c) for c in counts] for r in exponents]
