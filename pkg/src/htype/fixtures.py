"""Built-in example data: the K4 coefficient solutions, the two K8 tournaments, octonions."""
from __future__ import annotations

import numpy as np

from .graph_factor import OneFactor, OneFactorization

# Coordinate order used when listing K4 coefficient solutions.
K2_COORDS = ((1, 2), (2, 4), (1, 3), (3, 4), (2, 3), (1, 4))

K2_SOLUTIONS = (
    (1, 1, 1, -1, 1, -1),
    (1, 1, -1, 1, 1, 1),
    (1, 1, -1, 1, -1, -1),
    (-1, -1, -1, 1, -1, 1),
    (-1, -1, 1, -1, -1, -1),
    (-1, -1, 1, -1, 1, 1),
)

K4_FACTORS = (
    OneFactor(((1, 2), (3, 4))),
    OneFactor(((1, 3), (2, 4))),
    OneFactor(((1, 4), (2, 3))),
)

# The three center bases for k = 2 (solutions 1, 2, 3 above), each as
# three omegas in factor order {12,34}, {13,24}, {14,23}.
OMEGA_SETS = {
    "omega1": ({(1, 2): 1, (3, 4): -1}, {(1, 3): 1, (2, 4): 1}, {(1, 4): -1, (2, 3): 1}),
    "omega2": ({(1, 2): 1, (3, 4): 1}, {(1, 3): -1, (2, 4): 1}, {(1, 4): 1, (2, 3): 1}),
    "omega3": ({(1, 2): 1, (3, 4): 1}, {(1, 3): -1, (2, 4): 1}, {(1, 4): -1, (2, 3): -1}),
}

# Spanning sets of the ideals A for the three bases.
IDEAL_SETS = {
    "omega1": ({(1, 2): 1, (3, 4): 1}, {(1, 3): 1, (2, 4): -1}, {(1, 4): -1, (2, 3): -1}),
    "omega2": ({(1, 2): 1, (3, 4): -1}, {(1, 3): -1, (2, 4): -1}, {(1, 4): 1, (2, 3): -1}),
    "omega3": ({(1, 2): 1, (3, 4): -1}, {(1, 3): -1, (2, 4): -1}, {(1, 4): -1, (2, 3): 1}),
}

# Conjugators between the k = 2 families: e1->e2, e2->-e1, e3->e4, e4->e3,
# and the transposition of e3 and e4.
B_OMEGA1_TO_OMEGA3 = np.array([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.int64)
B1_SWAP34 = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.int64)

# Column-stacked vector of B_OMEGA1_TO_OMEGA3.
B_VEC = (0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0)

# Kronecker system for the first members of omega1 -> omega3.
KRONECKER_BLOCK_1 = np.array(
    [
        [0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0],
    ],
    dtype=np.int64,
)

KIRKMAN8_TEXT = """\
1-2 3-8 4-7 5-6
1-3 2-4 5-8 6-7
1-4 2-6 3-5 7-8
1-5 2-8 3-7 4-6
1-6 2-3 5-7 4-8
1-7 2-5 3-4 6-8
1-8 2-7 3-6 4-5
"""

STEINER8_TEXT = """\
1-2 3-7 4-5 6-8
1-3 2-7 4-8 5-6
1-4 2-5 3-8 6-7
1-5 2-4 3-6 7-8
1-6 2-8 3-5 4-7
1-7 2-3 4-6 5-8
1-8 2-6 3-4 5-7
"""


def kirkman8() -> OneFactorization:
    return OneFactorization.from_text(KIRKMAN8_TEXT)


def steiner8() -> OneFactorization:
    return OneFactorization.from_text(STEINER8_TEXT)


# Octonion products e_a e_b = e_c for each cyclic order of these triples.
OCTONION_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))


def octonion_table() -> tuple[np.ndarray, np.ndarray]:
    """Return (index, sign) arrays with e_a e_b = sign[a, b] * e_{index[a, b]}."""
    idx = np.zeros((8, 8), dtype=np.int64)
    sgn = np.zeros((8, 8), dtype=np.int64)
    for a in range(8):
        idx[0, a], sgn[0, a] = a, 1
        idx[a, 0], sgn[a, 0] = a, 1
    for a in range(1, 8):
        idx[a, a], sgn[a, a] = 0, -1
    for a, b, c in OCTONION_TRIPLES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            idx[x, y], sgn[x, y] = z, 1
            idx[y, x], sgn[y, x] = z, -1
    return idx, sgn


def octonion_family() -> list[np.ndarray]:
    """Left multiplications by the seven imaginary units, as 8x8 signed permutations."""
    idx, sgn = octonion_table()
    out = []
    for a in range(1, 8):
        L = np.zeros((8, 8), dtype=np.int64)
        for b in range(8):
            L[idx[a, b], b] = sgn[a, b]
        out.append(L)
    return out
