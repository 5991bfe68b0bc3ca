import pytest

import oracles
from htype import hr_arith as H

FIGURE_ONE = {1: 1, 2: 2, 3: 1, 4: 4, 5: 1, 6: 2, 7: 1, 8: 8, 9: 1, 10: 2, 11: 1, 12: 4,
              13: 1, 14: 2, 15: 1, 16: 9, 17: 1, 18: 2, 19: 1, 20: 4, 21: 1, 22: 2, 23: 1}

TABLE_MAX_S = [
    [1, 0, None, None, None],
    [3, 1, 1, None, None],
    [7, 3, 3, 3, 3],
    [8, 7, 5, 4, 4],
    [9, 8, 7, 5, 5],
]
TABLE_MAX_T = [
    [1, 0, None, None, None],
    [2, 2, 0, 0, None],
    [4, 4, 4, 4, 0],
    [8, 6, 5, 5, 4],
    [9, 8, 6, 6, 5],
]


@pytest.mark.parametrize("n, expected", [(12, (3, 0, 2)), (1, (1, 0, 0)), (64, (1, 1, 2))])
def test_decompose_examples(n, expected):
    d = H.decompose(n)
    assert (d.u, d.alpha, d.beta) == expected
    assert d.value == n


@pytest.mark.parametrize("bad", [0, -3, H.MAX_ORDER + 1, 2.0, True])
def test_decompose_rejects(bad):
    with pytest.raises(ValueError):
        H.decompose(bad)


def test_rho_matches_listed_values():
    assert {n: H.rho(n) for n in FIGURE_ONE} == FIGURE_ONE
    assert (H.rho(16), H.rho(12), H.rho(7)) == (9, 4, 1)


def test_rho_matches_clifford_dimension_oracle():
    assert all(H.rho(n) == oracles.rho_oracle(n) for n in range(1, H.MAX_ORDER + 1))


def test_rho_t_examples():
    assert H.rho_t(1, 1) == 2
    assert H.rho_t(4, 1) == 9
    with pytest.raises(ValueError):
        H.rho_t(3, 5)
    assert H.wolfe_rho(3, 5) == 1
    assert H.RHO_T_BASE[(3, 5)] == 1


@pytest.mark.parametrize("r", range(0, 11))
def test_rho_t_closed_form(r):
    assert H.rho_t(r, 0) == H.rho(2 ** r)
    for t in range(1, r + 1):
        assert H.rho_t(r, t) == H.rho(2 ** (r - t)) + t


def test_sigma_s_examples():
    assert H.sigma_s(1, 1) == 3
    assert H.sigma_s(2, 3) == 1
    assert H.sigma_s(3, 0) == 6
    for s in (5, 6, 7):
        assert H.sigma_s(3, s) == 1
    with pytest.raises(ValueError):
        H.sigma_s(3, 3)


@pytest.mark.parametrize("r", range(1, 11))
def test_sigma_zero_consistency(r):
    assert H.sigma_s(r, 0) == H.rho(2 ** (r - 1)) + 2


def test_tau():
    assert [H.tau(r) for r in (0, 3, 4)] == [2, 8, 10]


def test_wolfe_functions_match_clifford_dimensions():
    for r in range(0, H.MAX_EXPONENT + 1):
        for c in range(0, H.MAX_COUNT + 1):
            v = H.wolfe_rho(r, c)
            if v is not None:
                assert v == oracles.wolfe_rho_oracle(r, c), (r, c)
            w = H.wolfe_sigma(r, c)
            if w is not None:
                assert w == oracles.wolfe_sigma_oracle(r, c), (r, c)


def test_ciatti_examples():
    assert H.ciatti_admissible(8, 0, 4)
    assert not H.ciatti_admissible(8, 1, 4)
    assert H.ciatti_admissible(3, 1, 5)


def test_ciatti_matches_form_search_oracle():
    for s in range(0, 10):
        for t in range(0, 10):
            if s + t == 0:
                continue
            d = oracles.clifford_irrep_dim(s, t)
            if d > 64:
                continue
            assert H.ciatti_admissible(s, t, d.bit_length() - 1) == oracles.irrep_admissible(s, t), (s, t)


def test_max_signature_examples():
    assert H.max_signature_s(4, 1) == 7
    assert H.max_signature_s(3, 4) == 3
    assert H.max_signature_s(1, 1) == 0
    assert H.max_signature_t(2, 1) == 2
    assert H.max_signature_t(3, 4) == 0
    assert H.max_signature_t(4, 0) == 8


def test_tables_reproduced():
    assert H.signature_table("s") == TABLE_MAX_S
    assert H.signature_table("t") == TABLE_MAX_T


def test_tables_match_module_oracle():
    for r in range(1, 7):
        for c in range(0, 7):
            assert H.max_signature_s(r, c) == oracles.max_s_oracle(r, c), (r, c)
            assert H.max_signature_t(r, c) == oracles.max_t_oracle(r, c), (r, c)


def test_is_realizable_matches_oracle():
    for r in range(1, 7):
        for s in range(0, 10):
            for t in range(0, 10):
                if s + t:
                    assert H.is_realizable(r, s, t) == oracles.realizable_oracle(r, s, t), (r, s, t)


def test_signature_input_caps():
    with pytest.raises(ValueError):
        H.max_signature_s(0, 1)
    with pytest.raises(ValueError):
        H.max_signature_s(H.MAX_EXPONENT + 1, 0)
    with pytest.raises(ValueError):
        H.max_signature_t(3, H.MAX_COUNT + 1)


def test_periodicity_exhaustive():
    limit = 2 ** 12
    for n in range(1, limit + 1):
        _, r = H.two_adic(n)
        R = r + 1
        while n + 2 ** R <= limit:
            assert H.rho(n + 2 ** R) == H.rho(n)
            R += 1


def test_periodicity_needs_larger_power():
    # adding a smaller power of two changes the 2-adic valuation
    assert H.rho(2 + 1) != H.rho(2)
    # and equal powers can also break it
    assert H.rho(12 + 4) != H.rho(12)


def test_telescoping():
    for r in range(1, 11):
        assert [H.rho(n) for n in range(1, 2 ** r)] == [H.rho(n) for n in range(2 ** r + 1, 2 ** (r + 1))]
