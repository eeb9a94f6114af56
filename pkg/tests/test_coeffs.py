"""The degree-(3,2) coefficient double sum against the genuine product
coefficients, plus the standard-coefficient collapse and twist plumbing."""

import random
from fractions import Fraction

import pytest

from rslab.arith import primes_up_to
from rslab.coeffs import (
    CoeffData,
    c_pi_tau,
    central_char,
    coefficient_rows,
    double_sum_check,
    lambda_double,
    lambda_rs,
    lambda_std,
    lambda_tau,
    standardcoeff_check,
    twist_compatibility_check,
)
from rslab.scalars import EXACT


def _anchor_data(p_max=120):
    """alpha = (1, 2, 3), gamma = (1, 2) at every prime: not unitary, but
    perfect for exact bookkeeping."""
    alphas = (Fraction(1), Fraction(2), Fraction(3))
    gammas = (Fraction(1), Fraction(2))
    return CoeffData.constant(alphas, gammas, p_max, EXACT)


def test_lambda_double_anchors():
    data = _anchor_data()
    # lambda_pi(p, 1) = s_{(1,1,0)}(alpha) = e_2(1,2,3) = 11
    assert lambda_double(2, 1, data) == 11
    # lambda_pi(1, p^2) = s_{(2,0,0)}(alpha) = h_2(1,2,3) = 25
    assert lambda_double(1, 4, data) == 25


def test_lambda_tau_anchor():
    data = _anchor_data()
    # lambda_tau(p^2) = h_2(1, 2) = 7
    assert lambda_tau(4, data) == 7


def test_c_pi_tau_anchors():
    data = _anchor_data()
    assert c_pi_tau(2, data) == 18
    assert c_pi_tau(4, data) == 197
    assert c_pi_tau(8, data) == 1710


def test_lambda_rs_anchor():
    data = _anchor_data()
    assert lambda_rs(8, data) == 1710
    # at squarefree n the pairing coefficient is the plain product
    assert lambda_rs(2, data) == lambda_std(2, data) * lambda_tau(2, data)
    assert lambda_rs(6, data) == lambda_std(6, data) * lambda_tau(6, data)
    # lambda_std(8) = h_3(1,2,3)
    assert lambda_std(8, data) == 90


def test_double_sum_identity_anchor_params():
    data = _anchor_data()
    for n in range(1, 101):
        assert c_pi_tau(n, data) == lambda_rs(n, data), n


def test_double_sum_identity_random_params():
    rng = random.Random(92)
    for _ in range(5):
        alphas = tuple(
            Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(3)
        )
        gammas = tuple(
            Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(2)
        )
        data = CoeffData.constant(alphas, gammas, 60, EXACT)
        for n in range(1, 61):
            assert double_sum_check(n, data) == 0, n


def test_central_char_is_gamma_product():
    data = _anchor_data()
    assert central_char(2, data) == Fraction(2)  # gamma_1 * gamma_2
    assert central_char(1, data) == Fraction(1)
    assert central_char(4, data) == Fraction(4)


def test_standardcoeff_collapse():
    """lambda_pi(1, n) is the standard coefficient lambda_pi(n)."""
    data = _anchor_data()
    for n in range(1, 121):
        assert standardcoeff_check(n, data) == 0, n
    for n in (1, 2, 4, 8, 3, 9, 6, 36):
        assert lambda_double(1, n, data) == lambda_std(n, data)


def test_lambda_double_multiplicative_in_coprime_pairs():
    data = _anchor_data()
    # joint multiplicativity across coprime supports
    assert lambda_double(2, 3, data) == lambda_double(2, 1, data) * lambda_double(1, 3, data)
    assert lambda_double(6, 1, data) == lambda_double(2, 1, data) * lambda_double(3, 1, data)


def test_lambda_double_requires_positive_indices():
    data = _anchor_data()
    with pytest.raises(ValueError):
        lambda_double(0, 1, data)


def test_coefficient_rows_shape():
    data = _anchor_data()
    rows = coefficient_rows(10, data)
    assert len(rows) == 10
    n, lam, c, pair, residual = rows[1]
    assert n == 2
    assert c == 18
    assert residual == 0
    assert all(r[4] == 0 for r in rows)


def test_twist_compatibility():
    """Twisting tau by units u_p multiplies c(n) and lambda(n) alike by u(n)."""
    data = _anchor_data(30)
    units = {p: Fraction(-1) for p in primes_up_to(30)}
    for n in (2, 3, 4, 6, 8, 12, 24):
        assert twist_compatibility_check(n, data, units) == 0, n
