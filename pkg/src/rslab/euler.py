"""Euler-factor polynomials and truncated Dirichlet series.

An inverse local factor L_p(s)^{-1} is a polynomial in X = p^{-s} with
constant term 1; expanding 1/poly gives the local coefficient stream
a_p(0)=1, a_p(1), ...  Global series are assembled multiplicatively.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import factorize
from .scalars import EXACT, check_mode, coerce, is_zero, one, zero

DEFAULT_TRUNC = 10000


class NotDivisibleError(ArithmeticError):
    """Raised by poly_divide_exact; carries the offending remainder."""

    def __init__(self, remainder):
        super().__init__(f"polynomial division left a nonzero remainder {remainder}")
        self.remainder = remainder


class EulerFactorPoly:
    """A polynomial in X = p^{-s} with constant term 1, in a fixed scalar mode."""

    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs, mode: str):
        check_mode(mode)
        cs = [coerce(c, mode) for c in coeffs]
        if not cs:
            cs = [one(mode)]
        scale = max((abs(complex(c)) for c in cs), default=1.0)
        while len(cs) > 1 and is_zero(cs[-1], mode, scale=scale):
            cs.pop()
        if mode == EXACT:
            if cs[0] != 1:
                raise ValueError(f"constant term must be 1, got {cs[0]!r}")
            cs[0] = one(mode)
        else:
            c0 = cs[0]
            if abs(c0 - 1) > 1e-9 * max(1.0, scale):
                raise ValueError(f"constant term must be 1, got {c0!r}")
            # normalize away the roundoff so the invariant holds exactly
            cs = [c / c0 for c in cs]
            cs[0] = one(mode)
        self.coeffs = tuple(cs)
        self.mode = mode

    @classmethod
    def one(cls, mode: str) -> "EulerFactorPoly":
        return cls([one(mode)], mode)

    @classmethod
    def from_roots_inverse(cls, alphas, mode: str) -> "EulerFactorPoly":
        """prod_i (1 - alpha_i X); zero alphas contribute nothing."""
        coeffs = [one(mode)]
        for a in alphas:
            a = coerce(a, mode)
            if is_zero(a, mode):
                continue
            nxt = [zero(mode)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i] += c
                nxt[i + 1] -= c * a
            coeffs = nxt
        return cls(coeffs, mode)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EulerFactorPoly)
            and self.mode == other.mode
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.mode, self.coeffs))

    def __repr__(self):
        return f"EulerFactorPoly({list(self.coeffs)!r}, mode={self.mode!r})"

    def __call__(self, x):
        x = coerce(x, self.mode)
        acc = zero(self.mode)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_one(self) -> bool:
        return self.degree == 0


def _require_same_mode(f: EulerFactorPoly, g: EulerFactorPoly) -> str:
    if f.mode != g.mode:
        raise TypeError(f"mode mismatch: {f.mode} vs {g.mode}")
    return f.mode


def poly_mul(f: EulerFactorPoly, g: EulerFactorPoly) -> EulerFactorPoly:
    mode = _require_same_mode(f, g)
    out = [zero(mode)] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return EulerFactorPoly(out, mode)


def expand_inverse(f: EulerFactorPoly, kmax: int) -> list:
    """Power-series coefficients of 1/f up to X^kmax (a list of kmax+1 scalars).

    Uses the convolution recurrence c_0 = 1, c_k = -sum_{j>=1} f_j c_{k-j}.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    mode = f.mode
    out = [one(mode)]
    for k in range(1, kmax + 1):
        acc = zero(mode)
        for j in range(1, min(k, f.degree) + 1):
            acc += f.coeffs[j] * out[k - j]
        out.append(-acc)
    return out


def poly_divide_exact(f: EulerFactorPoly, g: EulerFactorPoly) -> EulerFactorPoly:
    """The quotient f/g when g divides f; raises NotDivisibleError otherwise.

    In float mode the remainder only has to vanish to relative tolerance
    FLOAT_TOL (relative to the largest coefficient of f).
    """
    mode = _require_same_mode(f, g)
    rem = list(f.coeffs)
    dg = g.degree
    qdeg = len(rem) - 1 - dg
    if qdeg < 0:
        raise NotDivisibleError(list(f.coeffs))
    quot = [zero(mode)] * (qdeg + 1)
    lead = g.coeffs[-1]
    for i in range(qdeg, -1, -1):
        c = rem[i + dg] / lead
        quot[i] = c
        for j, b in enumerate(g.coeffs):
            rem[i + j] -= c * b
    scale = max((abs(complex(c)) for c in f.coeffs), default=1.0)
    if any(not is_zero(r, mode, scale=scale) for r in rem[:dg]):
        raise NotDivisibleError(rem[:dg])
    return EulerFactorPoly(quot, mode)


class DirichletSeries:
    """Coefficients a(1..N) of a Dirichlet series, with a(1) = 1."""

    __slots__ = ("trunc", "coeffs", "mode")

    def __init__(self, coeffs, mode: str, trunc: int | None = None):
        check_mode(mode)
        cs = [coerce(c, mode) for c in coeffs]
        if not cs or cs[0] != one(mode):
            raise ValueError("a Dirichlet series must start with a(1) = 1")
        self.trunc = trunc if trunc is not None else len(cs)
        if self.trunc != len(cs):
            raise ValueError(f"expected {self.trunc} coefficients, got {len(cs)}")
        self.coeffs = cs
        self.mode = mode

    def a(self, n: int):
        if not 1 <= n <= self.trunc:
            raise IndexError(f"coefficient index {n} outside 1..{self.trunc}")
        return self.coeffs[n - 1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DirichletSeries)
            and self.mode == other.mode
            and self.trunc == other.trunc
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"DirichletSeries([{head}, ...], N={self.trunc})"


def assemble_global(local_factors: dict[int, EulerFactorPoly], trunc: int = DEFAULT_TRUNC,
                    mode: str = EXACT) -> DirichletSeries:
    """Multiplicative assembly a(n) = prod_{p^k || n} a_p(k) for n <= trunc.

    `local_factors` maps p -> inverse local factor; every prime <= trunc must be
    present.
    """
    check_mode(mode)
    missing = [p for p in _primes_needed(trunc) if p not in local_factors]
    if missing:
        raise ValueError(f"missing local factors at primes {missing[:10]} (need all p <= {trunc})")
    tables: dict[int, list] = {}
    for p, f in local_factors.items():
        if p > trunc:
            continue
        if f.mode != mode:
            raise TypeError(f"local factor at {p} is in mode {f.mode}, expected {mode}")
        kmax = 0
        pk = p
        while pk <= trunc:
            kmax += 1
            pk *= p
        tables[p] = expand_inverse(f, kmax)
    coeffs = [one(mode)] * trunc
    for n in range(2, trunc + 1):
        acc = one(mode)
        for p, e in factorize(n):
            acc *= tables[p][e]
        coeffs[n - 1] = acc
    return DirichletSeries(coeffs, mode, trunc)


def _primes_needed(trunc: int) -> list[int]:
    from .arith import primes_up_to

    return primes_up_to(trunc)


def local_coefficient(f: EulerFactorPoly, k: int):
    """k-th power-series coefficient of 1/f (convenience wrapper)."""
    return expand_inverse(f, k)[k]


def geometric_factor(alpha, mode: str) -> EulerFactorPoly:
    """(1 - alpha X), the inverse factor of a single parameter."""
    return EulerFactorPoly.from_roots_inverse([alpha], mode)


def rational(a: int, b: int = 1) -> Fraction:
    """Shorthand used throughout the tests."""
    return Fraction(a, b)
