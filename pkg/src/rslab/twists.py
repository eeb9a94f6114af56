"""Additive twists, unit averages, and the twisted-series prefactor.

The unit average folds e(x) against an archimedean character over the
units congruent to 1 mod q (just {1} or {+-1} over Q); matching its parity
to a Dirichlet character makes the symmetrized additive twist reproduce
the plain multiplicative one, which is the decomposition checked here.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm, log, pi

from .arith import radical, valuation
from .characters import DirichletCharacter, gauss_beta
from .coeffs import CoeffData, lambda_rs, lambda_std, lambda_tau
from .cyclotomic import CycloElement
from .scalars import EXACT, FLOAT, RootOfUnity, check_mode


def unit_average(x, q: int, parity: int, t: float = 0.0, mode: str = FLOAT):
    """Average of e(ux) w(ux)^{-1} over units u = 1 mod q, w = sign^parity |.|^{it}.

    For q <= 2 every unit is congruent to 1 and the average is the single
    term e(x) sign(x)^parity |x|^{-it}; for q > 2 it is the mean of the two
    terms at +-x.  sign(0) counts as +1.  Exact mode requires t = 0 and
    returns a cyclotomic element.
    """
    check_mode(mode)
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    if q < 1:
        raise ValueError("q must be positive")
    if mode == EXACT:
        if t != 0:
            raise ValueError("exact mode needs t = 0")
        x = Fraction(x)
        s = 1 if x >= 0 else -1
        term = CycloElement.from_root(RootOfUnity.from_fraction(x)) * Fraction(s**parity)
        if q <= 2:
            return term
        term2 = CycloElement.from_root(RootOfUnity.from_fraction(-x)) * Fraction((-s) ** parity)
        return (term + term2) * Fraction(1, 2)
    xf = float(x)
    if xf == 0 and t != 0:
        raise ValueError("|x|^{-it} is undefined at x = 0")

    def one_term(y: float) -> complex:
        s = 1.0 if y >= 0 else -1.0
        mag = cmath.exp(-1j * t * log(abs(y))) if t != 0 else 1.0
        return cmath.exp(2j * pi * y) * s**parity * mag

    if q <= 2:
        return one_term(xf)
    return (one_term(xf) + one_term(-xf)) / 2


@dataclass
class AdditiveTwistSeries:
    """Coefficients a(n) = lam(n) * unit_average(n*beta) for n = 1..trunc."""

    beta: Fraction
    q: int
    parity: int
    t: float
    mode: str
    coeffs: list

    @property
    def trunc(self) -> int:
        return len(self.coeffs)

    def a(self, n: int):
        return self.coeffs[n - 1]


def gl31_twist(data: CoeffData, beta, q: int, parity: int, trunc: int,
               t: float = 0.0) -> AdditiveTwistSeries:
    """Additive twist of the degree-3 coefficient stream by e(n*beta)."""
    beta = Fraction(beta)
    coeffs = [
        lambda_std(n, data) * unit_average(n * beta, q, parity, t, data.mode)
        for n in range(1, trunc + 1)
    ]
    return AdditiveTwistSeries(beta, q, parity, t, data.mode, coeffs)


def gl31_decomposition_check(chi: DirichletCharacter, data: CoeffData, n: int) -> float:
    """Residual of  q * lam(n) chi(n) = tau(chi) * sum_r conj(chi)(-r) a_r(n),

    where a_r is the additive twist at beta = r/q with parity matched to chi.
    Exact data gives an exact verdict (0.0 or the size of the defect).  Float
    residuals are normalized by the scale q * |lam(n)| of the two sides, so
    the tolerance means the same thing at every n.
    """
    q = chi.group.q
    a = chi.parity
    mode = data.mode
    lam = lambda_std(n, data)
    scale = max(1.0, q * abs(complex(lam)))
    if mode == EXACT:
        acc = CycloElement.zero()
        for r in range(1, q + 1):
            z = chi.conjugate().value(-r)
            if z is None:
                continue
            acc = acc + CycloElement.from_root(z) * (
                lam * unit_average(Fraction(n * r, q), q, a, 0.0, EXACT)
            )
        tau = gauss_beta(chi, Fraction(1, q), EXACT)
        zn = chi.value(n)
        lhs = CycloElement.from_rational(q * lam) * (
            CycloElement.from_root(zn) if zn is not None else CycloElement.zero()
        )
        diff = lhs - tau * acc
        return 0.0 if diff.is_zero() else abs(diff.to_complex()) / scale
    acc = 0j
    for r in range(1, q + 1):
        zc = chi.conjugate().value_complex(-r)
        if zc == 0:
            continue
        acc += zc * lam * unit_average(n * r / q, q, a, 0.0, FLOAT)
    tau = gauss_beta(chi, Fraction(1, q), FLOAT)
    return abs(q * lam * chi.value_complex(n) - tau * acc) / scale


# -- the assembled twisted series -------------------------------------------


@dataclass
class TwistedSeries:
    prefactor: object
    coeffs: list
    mode: str
    q1: int
    q2: int
    zeta: int
    beta2: Fraction


def _validate_window(q: int, cond: int, q1: int, q2: int) -> None:
    top = lcm(cond, radical(q))
    if q2 < 1 or q2 % cond != 0 or top % q2 != 0:
        raise ValueError(f"q2={q2} violates {cond} | q2 | {top}")
    # every prime where q2 falls short of q must appear in q1 at full weight,
    # which is what makes lcm(q1, q2) = q
    forced = 1
    for p in _prime_divisors(q):
        if valuation(q2, p) < valuation(q, p):
            forced *= p ** valuation(q, p)
    if q1 < 1 or q1 % forced != 0 or q % q1 != 0:
        raise ValueError(f"q1={q1} violates {forced} | q1 | {q}")


def _prime_divisors(n: int):
    from .arith import factorize

    return [p for p, _ in factorize(n)] if n > 1 else []


def assemble_twisted_series(chi: DirichletCharacter, q1: int, q2: int, r: int,
                            zeta: int, data: CoeffData, trunc: int) -> TwistedSeries:
    """Prefactor and coefficient stream of the twisted-series identity.

    chi lives mod q (the level); its conductor and q1, q2 must satisfy the
    window conditions, beta2 = r/q2 with gcd(r, q2) = 1, and zeta must be
    supported on the primes dividing q (zeta = 1 unless the conductor is
    exactly q).  The prefactor is

        sqrt(q^2 zeta) / lcm(q1 zeta, q2) * tau_q(chi, beta2) * mu(zeta)

    with mu the degree-2 coefficient stream; the series coefficients are
    prefactor * lam_pair(n).  With zeta = 1 the prefactor collapses to
    tau_q(chi, beta2), and for level 1 it is exactly 1.
    """
    q = chi.group.q
    cond = chi.conductor()
    _validate_window(q, cond, q1, q2)
    if gcd(r, q2) != 1:
        raise ValueError("beta2 = r/q2 must have gcd(r, q2) = 1")
    if zeta < 1:
        raise ValueError("zeta must be a positive integer")
    if zeta > 1 and (q == 1 or any(q % p for p in _prime_divisors(zeta))):
        raise ValueError("zeta must be supported on primes dividing the level")
    if zeta != 1 and cond != q:
        raise ValueError("zeta != 1 requires conductor equal to the level")
    beta2 = Fraction(r, q2)
    mode = data.mode
    lam_zeta = lambda_tau(zeta, data)
    denom = lcm(q1 * zeta, q2)
    if mode == EXACT:
        root = isqrt(q * q * zeta)
        if root * root != q * q * zeta:
            raise ValueError("exact mode needs q^2 * zeta to be a perfect square")
        tau = gauss_beta(chi, beta2, EXACT)
        prefactor = tau * (Fraction(root, denom) * lam_zeta)
        coeffs = [prefactor * lambda_rs(n, data) for n in range(1, trunc + 1)]
    else:
        tau = gauss_beta(chi, beta2, FLOAT)
        prefactor = (q * q * zeta) ** 0.5 / denom * tau * lam_zeta
        coeffs = [prefactor * lambda_rs(n, data) for n in range(1, trunc + 1)]
    return TwistedSeries(prefactor, coeffs, mode, q1, q2, zeta, beta2)


def fe_root_number(eps_pi: complex, eps_tau: complex, chi_omega_pi_q: complex,
                   omega_tau_nq2: complex, lam_tau_tilde_q2: complex,
                   chi_tau: DirichletCharacter, beta2: Fraction,
                   beta2p: Fraction) -> complex:
    """The reflection constant

        eps_pi^2 eps_tau chi_{w_pi}(q) w_tau(n q^2) mu~(q^2)
            * conj(tau_q(chi, beta2')) / tau_q(chi, beta2).

    All inputs are plain numbers except the character and the two rational
    twist points; unitary inputs give |result| = 1.
    """
    tau_b = gauss_beta(chi_tau, Fraction(beta2), FLOAT)
    if abs(tau_b) < 1e-12:
        raise ValueError("tau_q(chi, beta2) vanishes; beta2 outside the window?")
    tau_bp = gauss_beta(chi_tau, Fraction(beta2p), FLOAT)
    return (
        eps_pi**2
        * eps_tau
        * chi_omega_pi_q
        * omega_tau_nq2
        * lam_tau_tilde_q2
        * tau_bp.conjugate()
        / tau_b
    )


def conductor_exponent_check(n: int, q: int, declared: int) -> tuple[bool, list]:
    """Check declared = n^2 q^3 prime by prime: exponent 2 ord_p(n) + 3 ord_p(q)."""
    if n < 1 or q < 1 or declared < 1:
        raise ValueError("all arguments must be positive")
    mism = []
    for p in sorted(set(_prime_divisors(n * q * declared))):
        want = 2 * valuation(n, p) + 3 * valuation(q, p)
        got = valuation(declared, p)
        if want != got:
            mism.append((p, want, got))
    return (not mism, mism)
