import pytest
from hypothesis import given
from hypothesis import strategies as st

from matrixavoid.exactnum import poly_bernoulli
from matrixavoid.formulas import (
    FORMULA_ALPHAS,
    PhiResult,
    function_count_identity_lhs,
    function_count_identity_rhs,
    phi,
    phi_c,
    phi_gamma,
    phi_gamma_c,
    phi_i,
    phi_jo,
    phi_l,
    phi_t,
    phi_tl,
)
from matrixavoid.patterns import AvoidanceSpec, count_avoiders

ALL_PHI = {
    "I": phi_i,
    "GAMMA": phi_gamma,
    "C": phi_c,
    "T": phi_t,
    "L": phi_l,
    "GAMMA,C": phi_gamma_c,
    "T,L": phi_tl,
    "J,O": phi_jo,
}

# the full 7x7 table of phi(k,n;J,O), rows k=1..7
TABLE_JO = (
    (2, 4, 8, 16, 32, 64, 128),
    (4, 14, 44, 128, 352, 928, 2368),
    (8, 44, 156, 408, 720, 720, 0),
    (16, 128, 408, 840, 720, 720, 0),
    (32, 352, 720, 720, 0, 0, 0),
    (64, 928, 720, 720, 0, 0, 0),
    (128, 2368, 0, 0, 0, 0, 0),
)


def test_boundary_conventions_everywhere():
    for fn in ALL_PHI.values():
        assert fn(0, 0) == 1
        for m in (1, 2, 5):
            assert fn(m, 0) == 0
            assert fn(0, m) == 0
        with pytest.raises(ValueError):
            fn(-1, 3)


def test_phi_i_is_poly_bernoulli():
    # the raw double sum is 1 on the axes, where the matrix count is 0,
    # so the identity is an interior statement
    for k in range(1, 6):
        for n in range(1, 6):
            assert phi_i(k, n) == poly_bernoulli(n, k)
    assert phi_i(2, 2) == 14
    assert phi_i(1, 1) == 2
    assert phi_i(4, 4) == 6902


def test_phi_gamma_values():
    assert phi_gamma(2, 2) == 12
    assert phi_gamma(3, 3) == 128
    assert phi_gamma(4, 4) == 2100
    assert phi_gamma(1, 3) == 8


def test_gamma_and_c_agree():
    for k in range(7):
        for n in range(7):
            assert phi_gamma(k, n) == phi_c(k, n)
            assert phi_gamma(k, n) == phi_gamma(n, k)


def test_phi_gamma_c_closed_form():
    for k in range(1, 8):
        for n in range(1, 8):
            assert phi_gamma_c(k, n) == 2 ** (k + n - 1)
    assert phi_gamma_c(2, 2) == 8


def test_phi_t_values():
    assert phi_t(2, 2) == 14
    assert phi_t(2, 3) == 44
    assert phi_t(3, 3) == 200
    assert phi_t(1, 4) == 16


def test_t_and_l_are_transposes():
    for k in range(7):
        for n in range(7):
            assert phi_t(k, n) == phi_l(n, k)


def test_phi_tl_branches():
    # single row / single column: everything avoids
    for n in range(1, 8):
        assert phi_tl(1, n) == 2**n
        assert phi_tl(n, 1) == 2**n
    assert phi_tl(2, 2) == 12
    assert phi_tl(3, 2) == 26
    assert phi_tl(3, 3) == 68
    assert phi_tl(4, 3) == 146
    assert phi_tl(4, 4) == 418


def test_phi_jo_reproduces_full_table():
    for k in range(1, 8):
        for n in range(1, 8):
            assert phi_jo(k, n) == TABLE_JO[k - 1][n - 1]


def test_phi_jo_symmetry_and_zero_region():
    for k in range(8):
        for n in range(8):
            assert phi_jo(k, n) == phi_jo(n, k)
    for k in range(5, 12):
        for n in range(5, 12):
            assert phi_jo(k, n) == 0


def test_every_formula_matches_oracle_small():
    for key, fn in ALL_PHI.items():
        spec = AvoidanceSpec.parse(key)
        for k in range(1, 13):
            for n in range(1, 12 // k + 1):
                assert fn(k, n) == count_avoiders(k, n, spec), (key, k, n)


def test_phi_dispatch_provenance():
    res = phi(3, 3, "gamma")
    assert isinstance(res, PhiResult)
    assert (res.k, res.n, res.value, res.provenance) == (3, 3, 128, "formula")
    assert res.alpha.canonical() == "GAMMA"

    forced = phi(3, 3, "gamma", force_oracle=True)
    assert forced.value == 128 and forced.provenance == "oracle"

    # {J} has no closed form and falls through to the oracle
    open_case = phi(3, 3, "J")
    assert open_case.value == 334 and open_case.provenance == "oracle"


def test_phi_dispatch_boundaries():
    for key in FORMULA_ALPHAS + ("J",):
        assert phi(0, 0, key).value == 1
        assert phi(2, 0, key).value == 0
        assert phi(0, 2, key).value == 0


@given(st.integers(0, 10), st.integers(0, 10))
def test_function_count_identity(k, n):
    assert function_count_identity_lhs(k, n) == function_count_identity_rhs(k, n)


def test_function_count_identity_value():
    # both sides count maps from a 2-set into a structured 2-set range
    assert function_count_identity_lhs(2, 2) == 6
