"""Dirichlet characters mod q with exact root-of-unity values.

The unit group mod q is split into prime-power components; each component
carries explicit generators and a discrete-log table, so a character is
just a tuple of exponents (one per generator).  Values come back as exact
roots of unity, and Gauss sums can be formed either as floats or as exact
cyclotomic elements.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm, pi

from .arith import euler_phi, factorize, primitive_root, radical, valuation
from .cyclotomic import CycloElement
from .scalars import EXACT, FLOAT, RootOfUnity, check_mode


class _Component:
    """One prime-power block p^e of (Z/q)^*, with generators and dlog table."""

    __slots__ = ("pe", "p", "e", "gens", "orders", "dlog")

    def __init__(self, p: int, e: int):
        self.p, self.e, self.pe = p, e, p**e
        if p == 2:
            if e == 1:
                self.gens, self.orders = (), ()
                self.dlog = {1: ()}
            elif e == 2:
                self.gens, self.orders = (3,), (2,)
                self.dlog = {1: (0,), 3: (1,)}
            else:
                half = 2 ** (e - 2)
                self.gens, self.orders = (self.pe - 1, 5), (2, half)
                self.dlog = {}
                for s in range(2):
                    for t in range(half):
                        r = (pow(-1, s, self.pe) * pow(5, t, self.pe)) % self.pe
                        self.dlog[r] = (s, t)
        else:
            g = primitive_root(self.pe)
            n = euler_phi(self.pe)
            self.gens, self.orders = (g,), (n,)
            self.dlog = {}
            r = 1
            for j in range(n):
                self.dlog[r] = (j,)
                r = r * g % self.pe


class CharGroup:
    """The character group of (Z/q)^*; characters are exponent tuples."""

    def __init__(self, q: int):
        if q < 1:
            raise ValueError("modulus must be positive")
        self.q = q
        self.components = [_Component(p, e) for p, e in factorize(q)]
        self.orders: tuple[int, ...] = tuple(
            n for comp in self.components for n in comp.orders
        )

    def __len__(self) -> int:
        return euler_phi(self.q)

    def character(self, exps) -> "DirichletCharacter":
        return DirichletCharacter(self, tuple(exps))

    def trivial(self) -> "DirichletCharacter":
        return self.character((0,) * len(self.orders))

    def characters(self):
        """All characters mod q (phi(q) of them)."""
        for exps in itertools.product(*(range(n) for n in self.orders)):
            yield self.character(exps)

    def generator_residues(self) -> list[int]:
        """CRT lifts of the component generators: g_i mod q, congruent to 1
        in every other component."""
        out = []
        for comp in self.components:
            rest = self.q // comp.pe
            for g in comp.gens:
                # x = g mod pe, x = 1 mod rest
                if rest == 1:
                    out.append(g % self.q)
                else:
                    inv = pow(comp.pe, -1, rest)
                    x = g + comp.pe * ((1 - g) * inv % rest)
                    out.append(x % self.q)
        return out


@lru_cache(maxsize=None)
def char_group(q: int) -> CharGroup:
    return CharGroup(q)


@dataclass(frozen=True)
class DirichletCharacter:
    group: CharGroup
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != len(self.group.orders):
            raise ValueError("wrong number of exponents for this modulus")
        object.__setattr__(
            self, "exps", tuple(e % n for e, n in zip(self.exps, self.group.orders))
        )

    @property
    def modulus(self) -> int:
        return self.group.q

    def value(self, a: int) -> RootOfUnity | None:
        """chi(a) as an exact root of unity; None when gcd(a, q) > 1."""
        q = self.group.q
        if q == 1:
            return RootOfUnity.one()
        a %= q
        if gcd(a, q) != 1:
            return None
        t = Fraction(0)
        slot = 0
        for comp in self.group.components:
            ds = comp.dlog[a % comp.pe]
            for d, n in zip(ds, comp.orders):
                t += Fraction(self.exps[slot] * d, n)
                slot += 1
        return RootOfUnity.from_fraction(t)

    def value_complex(self, a: int) -> complex:
        z = self.value(a)
        return 0j if z is None else z.to_complex()

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exps)

    @property
    def order(self) -> int:
        o = 1
        for e, n in zip(self.exps, self.group.orders):
            o = lcm(o, n // gcd(e, n))
        return o

    @property
    def parity(self) -> int:
        """0 for even (chi(-1) = 1), 1 for odd."""
        z = self.value(-1)
        assert z is not None
        return 0 if z.as_rational() == 1 else 1

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.group, tuple(-e for e in self.exps))

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if self.group.q != other.group.q:
            raise ValueError("characters live on different moduli")
        return DirichletCharacter(
            self.group, tuple(a + b for a, b in zip(self.exps, other.exps))
        )

    def conductor(self) -> int:
        """Smallest modulus the character factors through (computed from the
        component orders, no search)."""
        f = 1
        slot = 0
        for comp in self.group.components:
            if comp.p != 2:
                e, n = self.exps[slot], comp.orders[0]
                slot += 1
                if e == 0:
                    continue
                ordp = n // gcd(e, n)
                f *= comp.p ** (valuation(ordp, comp.p) + 1)
            elif comp.e == 1:
                continue
            elif comp.e == 2:
                (j,) = self.exps[slot : slot + 1]
                slot += 1
                if j:
                    f *= 4
            else:
                jm, j5 = self.exps[slot : slot + 2]
                slot += 2
                if j5 == 0:
                    if jm:
                        f *= 4
                else:
                    half = comp.orders[1]
                    w = valuation(half // gcd(j5, half), 2)
                    f *= 2 ** (w + 2)
        return f

    def is_primitive(self) -> bool:
        return self.conductor() == self.group.q

    def decompose(self) -> list["DirichletCharacter"]:
        """The prime-power component characters chi_p with prod chi_p = chi."""
        out = []
        slot = 0
        for comp in self.group.components:
            k = len(comp.orders)
            out.append(char_group(comp.pe).character(self.exps[slot : slot + k]))
            slot += k
        return out

    def __repr__(self):
        return f"chi(q={self.group.q}; {','.join(map(str, self.exps))})"


def induce_character(chi: DirichletCharacter, q: int) -> DirichletCharacter:
    """The character mod q agreeing with chi on everything coprime to q.

    Requires chi's modulus to divide q.  (Values at residues sharing a factor
    with q are dropped, as usual for induction to a larger modulus.)
    """
    c = chi.group.q
    if q % c != 0:
        raise ValueError(f"{c} does not divide {q}")
    grp = char_group(q)
    exps = []
    for g, n in zip(grp.generator_residues(), grp.orders):
        z = chi.value(g % c if c > 1 else 0)
        assert z is not None, "generator not coprime to the smaller modulus?"
        e = z.exponent * n
        assert e.denominator == 1, "induced exponent is not integral"
        exps.append(int(e))
    return grp.character(exps)


# -- Gauss sums ----------------------------------------------------------


def gauss_classical(chi: DirichletCharacter, mode: str = EXACT):
    """tau(chi) = sum_{a mod q} chi(a) e(a/q), exact or float."""
    return gauss_beta(chi, Fraction(1, chi.group.q), mode)


def gauss_beta(chi: DirichletCharacter, beta: Fraction, mode: str = EXACT):
    """tau_q(chi, beta) = sum over d in (Z/q)^* of chi(d) e(d * beta)."""
    check_mode(mode)
    q = chi.group.q
    beta = Fraction(beta)
    if mode == EXACT:
        acc = CycloElement.zero()
        for d in range(1, q + 1):
            z = chi.value(d)
            if z is None:
                continue
            acc = acc + CycloElement.from_root(z * RootOfUnity.from_fraction(d * beta))
        return acc
    acc = 0j
    for d in range(1, q + 1):
        z = chi.value(d)
        if z is None:
            continue
        acc += z.to_complex() * cmath.exp(2j * pi * float(d * beta))
    return acc


def nonvanishing_window_check(chi: DirichletCharacter, q2: int):
    """Exact nonvanishing of tau_q(chi, r/q2) over all r coprime to q2.

    q2 must sit in the window  cond(chi) | q2 | lcm(cond(chi), rad(q)).
    Returns (ok, failures) where failures lists the r with a vanishing sum.
    """
    q = chi.group.q
    c = chi.conductor()
    if q2 < 1 or q2 > q or c == 0:
        raise ValueError("bad window modulus")
    window_top = lcm(c, radical(q))
    if q2 % c != 0 or window_top % q2 != 0:
        raise ValueError(
            f"q2={q2} outside the window: need {c} | q2 and q2 | {window_top}"
        )
    failures = []
    for r in range(1, q2 + 1):
        if gcd(r, q2) != 1:
            continue
        val = gauss_beta(chi, Fraction(r, q2), EXACT)
        if val.is_zero():
            failures.append(r)
    return (not failures, failures)


def orthogonality_avg(gamma: Fraction, q1: int) -> Fraction:
    """(1/q1) * sum_{d mod q1} e(d * gamma), summed exactly.

    Detects integrality: 1 when gamma is an integer, 0 when its denominator
    divides q1 nontrivially; raises if the exact average is irrational.
    """
    if q1 < 1:
        raise ValueError("q1 must be positive")
    gamma = Fraction(gamma)
    acc = CycloElement.zero()
    for d in range(q1):
        acc = acc + CycloElement.from_root(RootOfUnity.from_fraction(d * gamma))
    r = acc.as_rational()
    if r is None:
        raise ValueError(f"average of e(d*{gamma}) over d mod {q1} is not rational")
    return r / q1


def addtomult_check(chi: DirichletCharacter, n: int, mode: str = FLOAT) -> float:
    """Residual of the additive-to-multiplicative identity at n.

    For primitive chi:  (tau(chi)/q) * sum_a conj(chi)(-a) e(a n / q) = chi(n),
    including chi(n) = 0 when gcd(n, q) > 1.  Returns |LHS - RHS| (0.0 when
    the exact route proves equality).
    """
    check_mode(mode)
    q = chi.group.q
    if not chi.is_primitive():
        raise ValueError("identity requires a primitive character")
    chibar = chi.conjugate()
    if mode == EXACT:
        acc = CycloElement.zero()
        for a in range(1, q + 1):
            z = chibar.value(-a)
            if z is None:
                continue
            acc = acc + CycloElement.from_root(z * RootOfUnity(a * n, q))
        lhs = gauss_classical(chi, EXACT) * acc * Fraction(1, q)
        zn = chi.value(n)
        rhs = CycloElement.zero() if zn is None else CycloElement.from_root(zn)
        diff = lhs - rhs
        return 0.0 if diff.is_zero() else abs(diff.to_complex())
    acc = 0j
    for a in range(1, q + 1):
        z = chibar.value(-a)
        if z is None:
            continue
        acc += z.to_complex() * cmath.exp(2j * pi * a * n / q)
    lhs = gauss_classical(chi, FLOAT) / q * acc
    return abs(lhs - chi.value_complex(n))


def dirichlet_root_number(chi: DirichletCharacter) -> complex:
    """epsilon(chi) = tau(chi) / (i^a sqrt(q)) for primitive chi; |eps| = 1."""
    if not chi.is_primitive():
        raise ValueError("root number needs a primitive character")
    q = chi.group.q
    tau = gauss_beta(chi, Fraction(1, q), FLOAT)
    return tau / (1j**chi.parity * q**0.5)


def gauss_factorization_residual(chi: DirichletCharacter) -> float:
    """|tau(chi) - prod over components| for chi of composite modulus.

    With q = q1 * q2 (coprime) and chi = chi1 * chi2 the classical Gauss sum
    factors as chi1(q2) chi2(q1) tau(chi1) tau(chi2); this applies the rule
    pairwise across all prime-power components.
    """
    comps = chi.decompose()
    q = chi.group.q
    prod = complex(1)
    for part in comps:
        pe = part.group.q
        prod *= gauss_classical(part, FLOAT) * part.value_complex(q // pe)
    return abs(gauss_classical(chi, FLOAT) - prod)
