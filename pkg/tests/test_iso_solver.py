import numpy as np
import pytest

import oracles
from htype import fixtures
from htype import hr_family as F
from htype.algebra_core import OmegaVector, build_free, quotient
from htype.iso_solver import (
    build_system,
    enumerate_signed_perm,
    find_conjugator,
    kron,
    lift_to_algebra_iso,
    nullspace_oracle,
    rank_deficiency_certificate,
    solve_signed_perm,
    unvec,
    vec,
    verify_conjugacy,
)


def fam(name):
    return F.example_family(name)


def alg(name):
    return quotient(build_free(2), [OmegaVector.from_pairs(w) for w in fixtures.OMEGA_SETS[name]])


def test_kron_and_vec_examples():
    A = np.array([[1, 2], [3, 4]])
    B = np.array([[0, 1], [1, 0]])
    assert np.array_equal(kron(A, B)[:2, 2:], 2 * B)
    assert list(vec(A)) == [1, 3, 2, 4]
    assert np.array_equal(unvec(vec(A), 2), A)
    assert tuple(vec(fixtures.B_OMEGA1_TO_OMEGA3)) == fixtures.B_VEC


def test_vec_identity():
    rng = np.random.default_rng(5)
    A, X, B = (rng.integers(-3, 4, (3, 3)) for _ in range(3))
    assert np.array_equal(vec(A @ X @ B), kron(B.T, A) @ vec(X))


def test_first_block_matches_reference():
    sys = build_system(fam("omega1"), fam("omega3"))
    assert np.array_equal(sys.blocks[0], fixtures.KRONECKER_BLOCK_1)
    assert sys.matrix.shape == (48, 16)
    assert not np.any(sys.matrix @ vec(fixtures.B_OMEGA1_TO_OMEGA3))


def test_identical_families_give_identity():
    for name in ("omega1", "omega2", "octonion8"):
        B = solve_signed_perm(build_system(fam(name), fam(name)))
        assert np.array_equal(B, np.eye(fam(name).n, dtype=np.int64))


def test_omega1_to_omega3():
    f1, f3 = fam("omega1"), fam("omega3")
    sys = build_system(f1, f3)
    B = solve_signed_perm(sys)
    assert np.array_equal(B, np.diag([1, 1, -1, 1]))
    assert verify_conjugacy(B, f1, f3, allow_reorder=False)
    sols = enumerate_signed_perm(sys, cap=64)
    assert any(np.array_equal(S, fixtures.B_OMEGA1_TO_OMEGA3) for S in sols)
    brute = oracles.brute_conjugators(f1.members, f3.members)
    assert len(sols) == len(brute) == 8
    assert sorted(map(lambda M: tuple(M.ravel()), sols)) == sorted(map(lambda M: tuple(M.ravel()), brute))


def test_reference_conjugator_verifies():
    assert verify_conjugacy(fixtures.B_OMEGA1_TO_OMEGA3, fam("omega1"), fam("omega3"), allow_reorder=False)
    assert not verify_conjugacy(np.eye(4, dtype=int), fam("omega1"), fam("omega3"))
    assert not verify_conjugacy(2 * np.eye(4, dtype=int), fam("omega1"), fam("omega1"))


def test_omega1_to_omega2_needs_reordering():
    f1, f2 = fam("omega1"), fam("omega2")
    assert solve_signed_perm(build_system(f1, f2)) is None
    assert find_conjugator(f1, f2, allow_reorder=False) == (None, None)
    B, m = find_conjugator(f1, f2)
    assert m == (0, 2, 1)
    assert np.array_equal(B, fixtures.B1_SWAP34)
    assert verify_conjugacy(fixtures.B1_SWAP34, f1, f2)
    assert not verify_conjugacy(fixtures.B1_SWAP34, f1, f2, allow_reorder=False)


def test_certificates():
    f1, f2 = fam("omega1"), fam("omega2")
    assert rank_deficiency_certificate(f1, fam("omega3")).valid
    assert rank_deficiency_certificate(f1, f2, (0, 2, 1)).valid
    assert not rank_deficiency_certificate(f1, f2).valid
    o = fam("octonion8")
    B = np.eye(8, dtype=np.int64)[::-1] * np.array([1, -1, 1, 1, -1, 1, 1, 1])
    conj = F.HRFamily(8, 7, 0, [B @ E @ B.T for E in o.members])
    assert rank_deficiency_certificate(o, conj).valid
    single = F.build_positive(1, 1)
    cert = rank_deficiency_certificate(single, single)
    assert cert.valid and cert.gram_matches_formula


def test_conjugated_octonion_recovered():
    o = fam("octonion8")
    B = np.eye(8, dtype=np.int64)[[2, 0, 1, 3, 5, 4, 7, 6]] * np.array([1, 1, -1, 1, -1, 1, 1, -1])[:, None]
    conj = F.HRFamily(8, 7, 0, [B @ E @ B.T for E in o.members])
    found = solve_signed_perm(build_system(o, conj))
    assert found is not None and verify_conjugacy(found, o, conj, allow_reorder=False)


def test_mismatched_families_rejected():
    with pytest.raises(ValueError):
        build_system(fam("omega1"), fam("octonion8"))
    with pytest.raises(ValueError):
        build_system(F.build_mixed(2, 1, 2), F.build_positive(2, 3))


def test_nullspace_oracle_consistent():
    for a, b in (("omega1", "omega3"), ("omega1", "omega1")):
        sys = build_system(fam(a), fam(b))
        null = nullspace_oracle(sys)
        assert len(null) > 0
        M = sys.matrix
        for v in null:
            assert all(sum(M[i, j] * v[j] for j in range(16)) == 0 for i in range(M.shape[0]))
    assert nullspace_oracle(build_system(fam("omega1"), fam("omega2"))) == []


def test_lift_examples():
    lift = lift_to_algebra_iso(fixtures.B_OMEGA1_TO_OMEGA3, alg("omega1"), alg("omega3"))
    assert lift.ok, lift.violation
    assert lift.images == ["w1 -> w1'", "w2 -> w2'", "w3 -> w3'"]
    lift = lift_to_algebra_iso(fixtures.B1_SWAP34, alg("omega1"), alg("omega2"))
    assert lift.ok, lift.violation
    assert lift.images == ["w1 -> w1'", "w2 -> w3'", "w3 -> w2'"]
    ident = lift_to_algebra_iso(np.eye(4, dtype=int), alg("omega1"), alg("omega1"))
    assert ident.ok and ident.images == ["w1 -> w1'", "w2 -> w2'", "w3 -> w3'"]


def test_lift_rejects_non_conjugator():
    lift = lift_to_algebra_iso(np.eye(4, dtype=int), alg("omega1"), alg("omega2"))
    assert not lift.ok and lift.violation
