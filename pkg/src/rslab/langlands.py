"""Local parameter bookkeeping for automorphic-style Euler products.

A representation is modeled prime by prime: a tuple of inverse-root
parameters (zeros padding the ramified directions), a conductor exponent,
and a root number.  Twisted-Steinberg blocks sigma_b(eta) supply the
essentially-square-integrable test cases; the interesting identity is the
divisibility of their full pairing factor by the naive parameter-pair
product.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import factorize, is_prime, primes_up_to, valuation
from .characters import DirichletCharacter, gauss_classical
from .euler import DirichletSeries, EulerFactorPoly, assemble_global, poly_divide_exact, poly_mul
from .scalars import EXACT, FLOAT, check_mode, coerce, format_scalar, is_zero, one, parse_scalar, zero


@dataclass(frozen=True)
class LocalData:
    """Parameters of one local component.

    params has one entry per dimension (zeros where the local rep has no
    unramified direction); m is the conductor exponent; root_number defaults
    to 1 and is only meaningful where callers seed it.
    """

    p: int
    params: tuple
    m: int = 0
    root_number: object = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.m < 0:
            raise ValueError("conductor exponent must be >= 0")
        if self.m == 0:
            if any(x == 0 for x in self.params):
                raise ValueError("an unramified component needs all parameters nonzero")
            if self.root_number != 1:
                raise ValueError("an unramified component has root number 1")

    @property
    def degree(self) -> int:
        return len(self.params)

    def local_factor(self, mode: str) -> EulerFactorPoly:
        return EulerFactorPoly.from_roots_inverse(self.params, mode)


@dataclass
class GlobalRep:
    """A degree-d Euler product known at all primes up to p_max."""

    degree: int
    mode: str
    p_max: int
    locals: dict[int, LocalData] = field(default_factory=dict)

    def __post_init__(self):
        check_mode(self.mode)
        for p, d in self.locals.items():
            if d.p != p:
                raise ValueError(f"local data at key {p} carries prime {d.p}")
            if d.degree != self.degree:
                raise ValueError(f"local degree {d.degree} != {self.degree} at p={p}")
        missing = [p for p in primes_up_to(self.p_max) if p not in self.locals]
        if missing:
            raise ValueError(f"missing local data at primes {missing[:10]}")

    def local(self, p: int) -> LocalData:
        return self.locals[p]

    def local_factor(self, p: int) -> EulerFactorPoly:
        return self.locals[p].local_factor(self.mode)

    def series(self, trunc: int) -> DirichletSeries:
        if trunc > self.p_max:
            raise ValueError(f"series up to {trunc} needs local data up to p_max >= {trunc}")
        factors = {p: self.local_factor(p) for p in self.locals if p <= trunc}
        return assemble_global(factors, trunc, self.mode)

    def conductor(self) -> int:
        n = 1
        for p, d in sorted(self.locals.items()):
            n *= p**d.m
        return n

    def epsilon(self):
        eps = one(self.mode)
        for _, d in sorted(self.locals.items()):
            eps = eps * coerce(d.root_number, self.mode)
        return eps


# -- twisted-Steinberg blocks ---------------------------------------------


@dataclass(frozen=True)
class SteinbergBlock:
    """sigma_b(eta): a b-dimensional block twisted by a character eta.

    eta is recorded by its value at p when unramified, or as None when
    ramified (the ramified data model fixes conductor exponent 1 for eta,
    hence b for the block).
    """

    b: int
    eta: object = 1

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("block size must be >= 1")
        if self.eta == 0:
            raise ValueError("eta must be a unit or None (ramified)")

    @property
    def ramified(self) -> bool:
        return self.eta is None


def block_params(blk: SteinbergBlock, p: int, mode: str) -> tuple:
    """Inverse-root parameters of sigma_b(eta) at p, zero-padded to length b."""
    check_mode(mode)
    if blk.ramified:
        return (zero(mode),) * blk.b
    u = coerce(blk.eta, mode)
    lead = u * coerce(Fraction(1, p ** (blk.b - 1)), mode)
    return (lead,) + (zero(mode),) * (blk.b - 1)


def block_local_data(blk: SteinbergBlock, p: int, mode: str) -> LocalData:
    m = blk.b if blk.ramified else blk.b - 1
    return LocalData(p, block_params(blk, p, mode), m)


def rs_naive_local(params_a, params_b, mode: str) -> EulerFactorPoly:
    """prod over parameter pairs of (1 - alpha*beta*X); zero pairs drop out."""
    check_mode(mode)
    out = EulerFactorPoly.one(mode)
    for a in params_a:
        a = coerce(a, mode)
        if is_zero(a, mode):
            continue
        for b in params_b:
            b = coerce(b, mode)
            if is_zero(b, mode):
                continue
            out = poly_mul(out, EulerFactorPoly.from_roots_inverse([a * b], mode))
    return out


def rs_full_local(blk1: SteinbergBlock, blk2: SteinbergBlock, p: int, mode: str) -> EulerFactorPoly:
    """The complete pairing factor of sigma_b(eta1) x sigma_m(eta2) at p.

    For unramified twists it is
        prod_{i=0}^{min(b,m)-1} (1 - u1 u2 p^{-(max(b,m)-1+i)} X),
    and it degenerates to 1 as soon as either twist is ramified.
    """
    check_mode(mode)
    if blk1.ramified or blk2.ramified:
        return EulerFactorPoly.one(mode)
    u = coerce(blk1.eta, mode) * coerce(blk2.eta, mode)
    lo, hi = sorted((blk1.b, blk2.b))
    out = EulerFactorPoly.one(mode)
    for i in range(lo):
        root = u * coerce(Fraction(1, p ** (hi - 1 + i)), mode)
        out = poly_mul(out, EulerFactorPoly.from_roots_inverse([root], mode))
    return out


def rs_quotient_poly(blk1: SteinbergBlock, blk2: SteinbergBlock, p: int, mode: str) -> EulerFactorPoly:
    """Full factor divided by the naive factor; raises if not divisible."""
    full = rs_full_local(blk1, blk2, p, mode)
    naive = rs_naive_local(block_params(blk1, p, mode), block_params(blk2, p, mode), mode)
    return poly_divide_exact(full, naive)


def degenerate_factor_check(blk1: SteinbergBlock, blk2: SteinbergBlock, p: int, mode: str = EXACT) -> bool:
    """When either block is a single line (b = 1), full and naive coincide."""
    if min(blk1.b, blk2.b) != 1 and not (blk1.ramified or blk2.ramified):
        raise ValueError("degenerate case needs a 1-dimensional or ramified block")
    return rs_quotient_poly(blk1, blk2, p, mode).is_one()


def isobaric_local(d1: LocalData, d2: LocalData) -> LocalData:
    """Local data of an isobaric sum: parameters concatenate, conductor
    exponents add, root numbers multiply."""
    if d1.p != d2.p:
        raise ValueError("isobaric sum needs matching primes")
    m = d1.m + d2.m
    root = 1 if m == 0 else d1.root_number * d2.root_number
    return LocalData(d1.p, d1.params + d2.params, m, root)


def contragredient_params(params) -> tuple:
    """Inverse parameters (zeros stay zero); exact inputs stay exact."""
    out = []
    for x in params:
        if x == 0:
            out.append(x)
        elif isinstance(x, (int, Fraction)):
            out.append(Fraction(1) / Fraction(x))
        else:
            out.append(1 / x)
    return tuple(out)


def twist_unramified(rep: GlobalRep, t) -> GlobalRep:
    """Scale every local parameter at p by u_p.

    t may be a real number (u_p = p^{-it}, float mode only) or a mapping
    p -> nonzero value.  Coefficients of the twisted series pick up the
    completely multiplicative factor u(n).
    """
    def unit(p: int):
        if isinstance(t, Mapping):
            u = t[p]
        else:
            if t == 0:
                return one(rep.mode)
            if rep.mode == EXACT:
                raise ValueError("a real twist parameter needs float mode")
            u = p ** (-1j * t)
        u = coerce(u, rep.mode)
        if u == 0:
            raise ValueError(f"twist value at p={p} must be nonzero")
        return u

    locs = {}
    for p, d in rep.locals.items():
        u = unit(p)
        params = tuple(x if x == 0 else coerce(x, rep.mode) * u for x in d.params)
        locs[p] = LocalData(p, params, d.m, d.root_number)
    return GlobalRep(rep.degree, rep.mode, rep.p_max, locs)


# -- rep files --------------------------------------------------------------


def parse_rep_file(text: str, degree: int, mode: str, p_max: int) -> GlobalRep:
    """Parse 'p m root a_1 ... a_degree' lines into a GlobalRep.

    '#' starts a comment; scalars use the usual mode syntax ('a/b' exact,
    're,im' or a plain real in float mode).
    """
    check_mode(mode)
    locals_: dict[int, LocalData] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 3 + degree:
            raise ValueError(
                f"line {lineno}: expected 'p m root' plus {degree} parameters, got {len(toks)} fields"
            )
        p, m = int(toks[0]), int(toks[1])
        root = parse_scalar(toks[2], mode)
        params = tuple(parse_scalar(t, mode) for t in toks[3:])
        if p in locals_:
            raise ValueError(f"line {lineno}: duplicate prime {p}")
        locals_[p] = LocalData(p, params, m, root)
    return GlobalRep(degree, mode, p_max, locals_)


def format_rep_file(rep: GlobalRep) -> str:
    lines = [f"# degree {rep.degree}, mode {rep.mode}, primes up to {rep.p_max}"]
    for p in sorted(rep.locals):
        d = rep.locals[p]
        fields = [str(p), str(d.m), format_scalar(coerce(d.root_number, rep.mode), rep.mode)]
        fields += [format_scalar(coerce(x, rep.mode), rep.mode) for x in d.params]
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


# -- degree-1 seeding from a character --------------------------------------


def gl1_rep_from_character(chi: DirichletCharacter, p_max: int) -> GlobalRep:
    """The degree-1 Euler product of a primitive character, root numbers seeded
    so that the product of local root numbers is the classical normalized
    Gauss sum tau(chi) / (i^a sqrt(q)).

    Local pieces at ramified p are tau(chi_p) chi_p(q / p^e) / (i^{a_p} sqrt(p^e));
    the leftover archimedean phase i^{a - sum a_p} is folded into the smallest
    ramified prime so the global product comes out on the nose.
    """
    if not chi.is_primitive():
        raise ValueError("seeding expects a primitive character")
    q = chi.group.q
    locals_: dict[int, LocalData] = {}
    comps = {part.group.q: part for part in chi.decompose()}
    phase_all = sum(part.parity for part in comps.values())
    correction_at = min((p for p, _ in factorize(q)), default=None)
    for p in primes_up_to(p_max):
        if q % p != 0:
            locals_[p] = LocalData(p, (chi.value_complex(p),), 0, 1)
            continue
        e = valuation(q, p)
        part = comps[p**e]
        eps_p = (
            gauss_classical(part, FLOAT)
            * part.value_complex(q // p**e)
            / (1j**part.parity * (p**e) ** 0.5)
        )
        if p == correction_at:
            eps_p *= 1j ** ((chi.parity - phase_all) % 4)
        locals_[p] = LocalData(p, (0j,), e, eps_p)
    return GlobalRep(1, FLOAT, p_max, locals_)
