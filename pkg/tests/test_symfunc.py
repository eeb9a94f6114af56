"""Schur polynomials in three variables, two-row specializations, and the
Cauchy-type expansion they satisfy."""

import random
from fractions import Fraction

from rslab.scalars import EXACT, FLOAT
from rslab.symfunc import (
    Partition3,
    cauchy_check,
    cauchy_two_row_check,
    complete_homogeneous,
    elementary_symmetric,
    partitions3_of,
    schur3,
    schur3_bialternant,
    schur3_jacobi_trudi,
    schur3_tableau,
    schur_gl2,
    schur_two_row,
    two_row_coeff,
)


def _rand_fracs(rng, k, lo=-9, hi=9, den=5):
    out = []
    while len(out) < k:
        f = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if f != 0:
            out.append(f)
    return out


def test_elementary_symmetric_anchor():
    xs = [Fraction(1), Fraction(2), Fraction(3)]
    assert elementary_symmetric(0, xs, EXACT) == 1
    assert elementary_symmetric(1, xs, EXACT) == 6
    assert elementary_symmetric(2, xs, EXACT) == 11
    assert elementary_symmetric(3, xs, EXACT) == 6
    assert elementary_symmetric(4, xs, EXACT) == 0


def test_complete_homogeneous_anchor():
    xs = [Fraction(1), Fraction(2)]
    # h_2(x, y) = x^2 + xy + y^2
    assert complete_homogeneous(2, xs, EXACT) == 7
    assert complete_homogeneous(0, xs, EXACT) == 1
    assert complete_homogeneous(-1, xs, EXACT) == 0


def test_schur_hook_anchor():
    """s_{2,1,0} at (1,1,1) counts standard-ish tableaux: dimension 8."""
    lam = Partition3(2, 1, 0)
    ones = [Fraction(1)] * 3
    assert schur3_jacobi_trudi(lam, ones, EXACT) == 8
    assert schur3_tableau(lam, ones, EXACT) == 8


def test_partitions3_of():
    parts = list(partitions3_of(4))
    assert Partition3(4, 0, 0) in parts
    assert Partition3(2, 1, 1) in parts
    assert all(p.size == 4 for p in parts)
    assert len(parts) == len(set(parts))
    # count of partitions of 4 into at most 3 parts is 4
    assert len(parts) == 4


def test_schur_routes_agree_random():
    rng = random.Random(310)
    for _ in range(40):
        lam = Partition3(rng.randint(2, 5), rng.randint(1, 2), rng.randint(0, 1))
        xs = _rand_fracs(rng, 3)
        a = schur3_jacobi_trudi(lam, xs, EXACT)
        b = schur3_tableau(lam, xs, EXACT)
        assert a == b


def test_bialternant_agrees_at_distinct_points():
    rng = random.Random(77)
    for _ in range(40):
        xs = _rand_fracs(rng, 3)
        if len({*xs}) < 3:
            continue
        a, b = sorted((rng.randint(1, 6), rng.randint(0, 3)), reverse=True)
        lam = Partition3(a, b, 0)
        assert schur3_bialternant(lam, xs, EXACT) == schur3_jacobi_trudi(lam, xs, EXACT)


def test_schur3_dispatch_handles_coincident_points():
    """The bialternant ratio degenerates at repeated coordinates; the
    dispatcher must still return the right value there."""
    xs = [Fraction(2), Fraction(2), Fraction(3)]
    lam = Partition3(3, 1, 0)
    assert schur3(lam, xs, EXACT) == schur3_jacobi_trudi(lam, xs, EXACT)
    xs = [Fraction(1, 2)] * 3
    assert schur3(lam, xs, EXACT) == schur3_jacobi_trudi(lam, xs, EXACT)


def test_schur_gl2_two_row():
    g = [Fraction(1), Fraction(2)]
    # s_f(g1, g2) = h_f for two variables
    for f in range(5):
        assert schur_gl2(f, g[0], g[1], EXACT) == complete_homogeneous(f, g, EXACT)
    assert schur_gl2(2, g[0], g[1], EXACT) == 7


def test_schur_two_row_factorization():
    """s_{(r+s, s)}(x, y) = (xy)^s h_r(x, y)."""
    rng = random.Random(19)
    for _ in range(30):
        x, y = _rand_fracs(rng, 2)
        r, s = rng.randint(0, 4), rng.randint(0, 3)
        got = schur_two_row(r + s, s, x, y, EXACT)
        want = (x * y) ** s * complete_homogeneous(r, [x, y], EXACT)
        assert got == want


def test_cauchy_check_exact_zero():
    rng = random.Random(4)
    for _ in range(5):
        alphas = _rand_fracs(rng, 3)
        gammas = _rand_fracs(rng, 2)
        residuals = cauchy_check(alphas, gammas, kmax=8, mode=EXACT)
        assert all(r == 0 for r in residuals)


def test_cauchy_check_float():
    rng = random.Random(8)
    alphas = [complex(rng.uniform(-0.5, 0.5)) for _ in range(3)]
    gammas = [complex(rng.uniform(-0.5, 0.5)) for _ in range(2)]
    residuals = cauchy_check(alphas, gammas, kmax=8, mode=FLOAT)
    assert max(abs(r) for r in residuals) < 1e-12


def test_two_row_coeff_and_check():
    rng = random.Random(104)
    alphas = _rand_fracs(rng, 3)
    gammas = _rand_fracs(rng, 2)
    residuals = cauchy_two_row_check(alphas, gammas, kmax=8, mode=EXACT)
    assert all(r == 0 for r in residuals)
    # two_row_coeff at degree 0 is 1
    assert two_row_coeff(0, alphas, gammas, EXACT) == 1


def test_partition3_validation():
    import pytest

    with pytest.raises(ValueError):
        Partition3(1, 2, 0)
    with pytest.raises(ValueError):
        Partition3(2, 1, -1)
