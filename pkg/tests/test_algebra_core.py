import itertools
from fractions import Fraction

import numpy as np
import pytest

import oracles
from htype import exact, fixtures
from htype import hr_family as F
from htype.algebra_core import (
    HTypeAlgebra,
    OmegaVector,
    _parity_constraints,
    build_free,
    gf2_solutions,
    check_block_structure,
    j_operator,
    k2_relations,
    k2_relations_alt,
    orthogonal_complement,
    quotient,
    solve_coefficients,
    verify_h_type,
)
from htype.graph_factor import OneFactor, round_robin


def omegas(name, table=fixtures.OMEGA_SETS):
    return [OmegaVector.from_pairs(w) for w in table[name]]


def test_build_free_shapes():
    N = build_free(2)
    assert (N.dim_U, N.dim_Z) == (4, 6)
    assert all(N.metric_U.value(i) == Fraction(1, 2) for i in range(4))
    assert build_free(1).dim_Z == 1
    neutral = build_free(2, sig_U=(2, 2))
    assert [neutral.metric_U.value(i) for i in range(4)] == [Fraction(1, 2)] * 2 + [Fraction(-1, 2)] * 2
    with pytest.raises(ValueError):
        build_free(2, sig_U=(3, 2))


def test_bracket_table():
    N = build_free(2)
    assert N.bracket(1, 2) == (1, N.pair_index(1, 2))
    assert N.bracket(2, 1) == (-1, N.pair_index(1, 2))
    assert N.bracket(3, 3) is None


def test_j_operator_examples():
    N = build_free(2)
    J = j_operator(omegas("omega1")[0], N)
    e = np.eye(4, dtype=int)
    assert np.array_equal(J @ e[0], e[1]) and np.array_equal(J @ e[1], -e[0])
    assert np.array_equal(J @ e[2], -e[3]) and np.array_equal(J @ e[3], e[2])
    assert np.array_equal(j_operator(OmegaVector.from_pairs({(1, 2): 1}), build_free(1)), [[0, -1], [1, 0]])


def test_j_operator_cross_block_neutral():
    # beta = alpha * eps = 1 on a cross pair with a negative center sign
    N = build_free(2, sig_U=(2, 2), z_signs={(1, 3): -1, (2, 4): -1})
    J = j_operator(OmegaVector.from_pairs({(1, 3): -1, (2, 4): -1}), N)
    e = np.eye(4, dtype=int)
    assert np.array_equal(J @ e[0], -e[2]) and np.array_equal(J @ e[2], -e[0])


def test_j_operator_rejects_non_unit():
    with pytest.raises(ValueError):
        j_operator(OmegaVector.from_pairs({(1, 2): 2}), build_free(1))


def test_block_structure_examples():
    assert check_block_structure(OneFactor(((1, 2), (3, 4))), 2)
    assert not check_block_structure(OneFactor(((1, 2), (3, 7), (4, 8), (5, 6))), 4)
    assert check_block_structure(OneFactor(((1, 3), (2, 4))), 2)


def test_block_structure_necessary_for_neutral_metric():
    for k in (2, 3, 4):
        eye = np.eye(2 * k, dtype=int)
        for f in round_robin(k).factors:
            N = build_free(k, sig_U=(k, k))
            for signs in itertools.product((1, -1), repeat=k):
                J = j_operator(OmegaVector(f, dict(zip(f.pairs, signs))), N)
                sq = J @ J
                scalar = np.array_equal(sq, eye) or np.array_equal(sq, -eye)
                assert scalar == check_block_structure(f, k)


def span_equal(a, b, ncols):
    return exact.rank(a, ncols) == exact.rank(b, ncols) == exact.rank(list(a) + list(b), ncols)


@pytest.mark.parametrize("name", ["omega1", "omega2", "omega3"])
def test_ideal_matches_reference(name):
    N = build_free(2)
    A = orthogonal_complement(omegas(name), N)
    ref = [w.vector(N) for w in omegas(name, fixtures.IDEAL_SETS)]
    assert len(A) == 3
    assert span_equal(A, ref, 6)


def test_ideal_trivial_and_dependent():
    assert orthogonal_complement([OmegaVector.from_pairs({(1, 2): 1})], build_free(1)) == []
    w = omegas("omega1")[0]
    with pytest.raises(ValueError):
        orthogonal_complement([w, w], build_free(2))


def test_ideal_basis_matches_nullspace_oracle():
    N = build_free(4)
    ws = [F.omega_from_matrix(E) for E in F.build_positive(3, 7).members]
    A = orthogonal_complement(ws, N)
    assert len(A) == N.dim_Z - 7
    rows = [[float(N.metric_Z.value(i)) * float(c) for i, c in enumerate(w.vector(N))] for w in ws]
    assert oracles.exact_rank(rows + [list(a) for a in A]) == N.dim_Z
    for a in A:
        assert all(N.inner_Z(a, w.vector(N)) == 0 for w in ws)


@pytest.mark.parametrize("name", ["omega1", "omega2", "omega3"])
def test_quotients_pass(name):
    alg = quotient(build_free(2), omegas(name))
    rep = verify_h_type(alg)
    assert rep.passed, rep.text()
    assert len(rep.text().splitlines()) == 8


def test_structure_constants_k2():
    alg = quotient(build_free(2), omegas("omega1"))
    assert alg.bracket(1, 2) == [Fraction(1, 2), 0, 0]
    assert alg.bracket(1, 4) == [0, 0, Fraction(-1, 2)]
    assert alg.bracket(1, 1) == [0, 0, 0]
    for (a, b), (c, idx) in alg.structure_constants.items():
        assert alg.structure_constants[(b, a)] == (-c, idx)
        assert c.denominator == 2 and abs(c.numerator) == 1


def test_all_ones_fails_anticommutation():
    bad = [OmegaVector(f, {p: 1 for p in f.pairs}) for f in fixtures.K4_FACTORS]
    with pytest.raises(ValueError):
        quotient(build_free(2), bad)
    alg = quotient(build_free(2), bad, check=False)
    rep = verify_h_type(alg)
    assert not rep["(e)"].passed


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_heisenberg(k):
    w = OmegaVector.from_pairs({(2 * i - 1, 2 * i): 1 for i in range(1, k + 1)})
    assert verify_h_type(quotient(build_free(k), [w])).passed


def test_quotient_rejections():
    N = build_free(2)
    w = omegas("omega1")[0]
    with pytest.raises(ValueError):
        quotient(N, [w, w])
    with pytest.raises(ValueError):
        quotient(N, [])


def test_solution_count_and_systems():
    sols = solve_coefficients(fixtures.K4_FACTORS, build_free(2))
    found = sorted(tuple(s[p] for p in fixtures.K2_COORDS) for s in sols)
    assert found == sorted(oracles.brute_k4_solutions())
    assert len(found) == 16
    assert set(fixtures.K2_SOLUTIONS) <= set(found)
    assert (1, 1, 1, -1, -1, 1) in found
    for vals in itertools.product((1, -1), repeat=6):
        a = dict(zip(fixtures.K2_COORDS, vals))
        both = (k2_relations(a) == (0, 0, 0), k2_relations_alt(a) == (0, 0, 0))
        assert both[0] == both[1] == (vals in found)


def test_extra_solution_is_a_valid_algebra():
    a = dict(zip(fixtures.K2_COORDS, (1, 1, 1, -1, -1, 1)))
    ws = [OmegaVector(f, {p: a[p] for p in f.pairs}) for f in fixtures.K4_FACTORS]
    assert verify_h_type(quotient(build_free(2), ws)).passed


def test_fixed_coefficient_and_single_factor():
    sols = solve_coefficients(fixtures.K4_FACTORS, build_free(2), fixed={(1, 2): 1})
    assert len(sols) == 8 and all(s[(1, 2)] == 1 for s in sols)
    for name in ("omega1", "omega2", "omega3"):
        want = {p: c for w in fixtures.OMEGA_SETS[name] for p, c in w.items()}
        assert want in sols
    for k in (1, 2, 3):
        f = round_robin(k).factors[0]
        assert len(solve_coefficients([f], build_free(k))) == 2 ** k


def test_elimination_matches_screening():
    for k in (2, 3):
        N = build_free(k)
        for size in range(1, 2 * k):
            for factors in itertools.combinations(round_robin(k).factors, size):
                cons = _parity_constraints(factors, N)
                if cons is None:
                    continue
                nvar = k * size
                brute = [x for x in range(1 << nvar) if all(bin(x & m).count("1") % 2 == p for m, p in cons)]
                assert gf2_solutions(cons, nvar) == brute
    assert gf2_solutions([(0b11, 1), (0b11, 0)], 2) == []


def test_large_systems_use_elimination():
    assert len(solve_coefficients(fixtures.steiner8().factors, build_free(4))) == 2048
    assert solve_coefficients(fixtures.kirkman8().factors, build_free(4)) == []
    with pytest.raises(ValueError):
        solve_coefficients([round_robin(25).factors[0]], build_free(25))


def test_json_round_trip():
    alg = F.algebra_from_family(F.build_mixed(3, 3, 2))
    back = HTypeAlgebra.from_json(alg.to_json())
    assert back.to_dict() == alg.to_dict()
    d = alg.to_dict()
    assert d["sig_z"] == [3, 2] and d["k"] == 4


def test_indefinite_center_requires_neutral_first_layer():
    alg = F.algebra_from_family(F.build_mixed(2, 1, 2))
    rep = verify_h_type(alg)
    assert rep.passed and rep["(g)"].passed
    assert alg.sig_h == (2, 2)
