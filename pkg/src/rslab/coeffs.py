"""Coefficient streams for a 3 x 2 pairing of Euler products.

Two routes everywhere: double-indexed coefficients come from Schur
determinants, single-indexed streams from power-series expansion of the
inverse local factors.  The headline check is the convolution identity

    sum over m1^2 m2 = n of  lam(m1, m2) * mu(m2) * omega(m1)  =  lam_pair(n)

with lam_pair the coefficient of the expanded 6-factor product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .arith import factorize, primes_up_to
from .euler import EulerFactorPoly, expand_inverse, poly_mul
from .scalars import EXACT, check_mode, coerce, one, zero
from .symfunc import Partition3, schur3

_expansion_cache: dict[tuple, list] = {}


def _local_coeff(params: tuple, k: int, mode: str):
    """Coefficient of X^k in 1 / prod(1 - a X), cached per parameter tuple."""
    key = (params, mode)
    table = _expansion_cache.get(key)
    if table is None or len(table) <= k:
        poly = EulerFactorPoly.from_roots_inverse(params, mode)
        table = expand_inverse(poly, max(k, 16))
        _expansion_cache[key] = table
    return table[k]


def _pair_local_coeff(alphas: tuple, gammas: tuple, k: int, mode: str):
    """Coefficient of X^k in 1 / prod_{i,j} (1 - a_i g_j X), cached."""
    key = (alphas, gammas, mode)
    table = _expansion_cache.get(key)
    if table is None or len(table) <= k:
        poly = EulerFactorPoly.one(mode)
        for a in alphas:
            for g in gammas:
                poly = poly_mul(poly, EulerFactorPoly.from_roots_inverse([a * g], mode))
        table = expand_inverse(poly, max(k, 16))
        _expansion_cache[key] = table
    return table[k]


def modulus_convention_central(gammas, mode: str = EXACT):
    """Central value at p: g1 * g2 when both parameters are nonzero, else 0.

    The zero at ramified primes is a convention callers may override by
    supplying their own central table.
    """
    g1 = coerce(gammas[0], mode)
    g2 = coerce(gammas[1], mode)
    if g1 == 0 or g2 == 0:
        return zero(mode)
    return g1 * g2


@dataclass(frozen=True)
class CoeffData:
    """Per-prime parameter tables for the pairing.

    pi maps p to three parameters, tau to two; central maps p to the value
    of the central character at p (callers must supply it at ramified p --
    modulus_convention_central gives the conventional choice).
    """

    pi: Mapping[int, tuple]
    tau: Mapping[int, tuple]
    central: Mapping[int, object]
    mode: str = EXACT

    def __post_init__(self):
        check_mode(self.mode)
        for p, t in self.pi.items():
            if len(t) != 3:
                raise ValueError(f"pi needs 3 parameters at p={p}")
        for p, t in self.tau.items():
            if len(t) != 2:
                raise ValueError(f"tau needs 2 parameters at p={p}")
            if p not in self.central:
                raise ValueError(f"no central value supplied at p={p}")

    @classmethod
    def constant(cls, alphas, gammas, n_max: int, mode: str = EXACT) -> "CoeffData":
        """Same parameters at every prime up to n_max, central value g1*g2."""
        alphas = tuple(coerce(a, mode) for a in alphas)
        gammas = tuple(coerce(g, mode) for g in gammas)
        ps = primes_up_to(n_max)
        central = modulus_convention_central(gammas, mode)
        return cls(
            pi={p: alphas for p in ps},
            tau={p: gammas for p in ps},
            central={p: central for p in ps},
            mode=mode,
        )

    def pi_at(self, p: int) -> tuple:
        try:
            return self.pi[p]
        except KeyError:
            raise ValueError(f"no degree-3 parameters at p={p}") from None

    def tau_at(self, p: int) -> tuple:
        try:
            return self.tau[p]
        except KeyError:
            raise ValueError(f"no degree-2 parameters at p={p}") from None


_schur_cache: dict[tuple, object] = {}


def _schur_local(k1: int, k2: int, alphas: tuple, mode: str):
    key = (k1, k2, alphas, mode)
    val = _schur_cache.get(key)
    if val is None:
        val = schur3(Partition3(k1 + k2, k1, 0), alphas, mode)
        _schur_cache[key] = val
    return val


def lambda_double(m1: int, m2: int, data: CoeffData):
    """Double-indexed coefficient lam(m1, m2) = prod_p s_(k1+k2, k1, 0)(alpha_p)
    with k1 = v_p(m1), k2 = v_p(m2)."""
    if m1 < 1 or m2 < 1:
        raise ValueError("indices must be positive")
    acc = one(data.mode)
    exps: dict[int, list[int]] = {}
    for p, e in factorize(m1):
        exps[p] = [e, 0]
    for p, e in factorize(m2):
        exps.setdefault(p, [0, 0])[1] = e
    for p, (k1, k2) in exps.items():
        acc *= _schur_local(k1, k2, tuple(coerce(a, data.mode) for a in data.pi_at(p)), data.mode)
    return acc


def lambda_std(n: int, data: CoeffData):
    """Single-indexed degree-3 coefficient via power-series expansion."""
    if n < 1:
        raise ValueError("index must be positive")
    acc = one(data.mode)
    for p, e in factorize(n):
        acc *= _local_coeff(tuple(coerce(a, data.mode) for a in data.pi_at(p)), e, data.mode)
    return acc


def lambda_tau(n: int, data: CoeffData):
    """Single-indexed degree-2 coefficient via power-series expansion."""
    if n < 1:
        raise ValueError("index must be positive")
    acc = one(data.mode)
    for p, e in factorize(n):
        acc *= _local_coeff(tuple(coerce(g, data.mode) for g in data.tau_at(p)), e, data.mode)
    return acc


def central_char(n: int, data: CoeffData):
    """omega(n) = prod_p central(p)^{v_p(n)} (0^k = 0 for k >= 1)."""
    if n < 1:
        raise ValueError("index must be positive")
    acc = one(data.mode)
    for p, e in factorize(n):
        c = data.central.get(p)
        if c is None:
            raise ValueError(f"no central value supplied at p={p}")
        acc *= coerce(c, data.mode) ** e
    return acc


def standardcoeff_check(n: int, data: CoeffData):
    """Residual of lam(1, n) (Schur route) against the expansion route."""
    return lambda_double(1, n, data) - lambda_std(n, data)


def c_pi_tau(n: int, data: CoeffData):
    """The convolved coefficient sum_{m1^2 m2 = n} lam(m1, m2) mu(m2) omega(m1)."""
    if n < 1:
        raise ValueError("index must be positive")
    acc = zero(data.mode)
    m1 = 1
    while m1 * m1 <= n:
        if n % (m1 * m1) == 0:
            m2 = n // (m1 * m1)
            acc += lambda_double(m1, m2, data) * lambda_tau(m2, data) * central_char(m1, data)
        m1 += 1
    return acc


def lambda_rs(n: int, data: CoeffData):
    """Pairing coefficient from the expanded 6-factor local products."""
    if n < 1:
        raise ValueError("index must be positive")
    acc = one(data.mode)
    for p, e in factorize(n):
        alphas = tuple(coerce(a, data.mode) for a in data.pi_at(p))
        gammas = tuple(coerce(g, data.mode) for g in data.tau_at(p))
        acc *= _pair_local_coeff(alphas, gammas, e, data.mode)
    return acc


def double_sum_check(n: int, data: CoeffData):
    """Residual of the convolution identity at n (0 when it holds)."""
    return c_pi_tau(n, data) - lambda_rs(n, data)


def twist_tau(data: CoeffData, units: Mapping[int, object] | int | Fraction) -> CoeffData:
    """Twist the degree-2 side by unit values u_p: parameters scale by u_p,
    central values by u_p^2."""
    if not isinstance(units, Mapping):
        units = {p: units for p in data.tau}
    new_tau = {}
    new_central = {}
    for p, (g1, g2) in data.tau.items():
        u = coerce(units[p], data.mode)
        if u == 0:
            raise ValueError(f"twist value at p={p} must be a unit")
        new_tau[p] = (coerce(g1, data.mode) * u, coerce(g2, data.mode) * u)
        new_central[p] = coerce(data.central[p], data.mode) * u * u
    return CoeffData(pi=data.pi, tau=new_tau, central=new_central, mode=data.mode)


def unit_value_at(n: int, units: Mapping[int, object] | int | Fraction, data: CoeffData):
    if not isinstance(units, Mapping):
        units = {p: units for p in data.tau}
    acc = one(data.mode)
    for p, e in factorize(n):
        acc *= coerce(units[p], data.mode) ** e
    return acc


def twist_compatibility_check(n: int, data: CoeffData, units) -> object:
    """Residual of c_twisted(n) = u(n) * c(n) under an unramified unit twist."""
    twisted = twist_tau(data, units)
    return c_pi_tau(n, twisted) - unit_value_at(n, units, data) * c_pi_tau(n, data)


def coefficient_rows(n_max: int, data: CoeffData) -> list[tuple]:
    """Rows (n, lam_std, c, lam_pair, residual) for n = 1..n_max."""
    rows = []
    for n in range(1, n_max + 1):
        c = c_pi_tau(n, data)
        lam = lambda_rs(n, data)
        rows.append((n, lambda_std(n, data), c, lam, c - lam))
    return rows
