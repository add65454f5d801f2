"""Arbitrary-precision numerics: Li_m, the one-valued CL_m, zeta, roots.

Everything here takes an explicit PrecisionPolicy; the policy owns a private
mpmath context (its working precision in decimal digits plus guard digits),
so there is no global precision state and calls are safe to run in parallel.

CL_m is the one-valued polylogarithm: the Bernoulli-weighted combination

    CL_m(z) = Re_m( sum_{r=0}^{m-1} (2^r B_r / r!) log^r|z| Li_{m-r}(z) ),

real part for odd m, imaginary part for even m, extended by the inversion
relation CL_m(z) = (-1)^(m-1) CL_m(1/z) to |z| > 1 and by continuity to
{0, 1, infinity}.  Li_m itself is evaluated by region: direct series for
|z| <= 1/2, the log-expansion with zeta-value coefficients (and the
distinguished log term at degree m-1) for 1/2 < |z| <= 2, and the inversion
continuation formula beyond.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple

from .exact import DomainError
from .ratfunc import INFINITY, RatFunc

__all__ = [
    "PrecisionPolicy",
    "BranchAmbiguityError",
    "PoleError",
    "RootFindingError",
    "bernoulli",
    "bernoulli_poly_coeffs",
    "zeta_int",
    "li_m",
    "cl_m",
    "cl_apply",
    "poly_roots",
]


class BranchAmbiguityError(ValueError):
    """Li_m requested on the cut [1, oo) where the branch is ambiguous."""


class PoleError(ValueError):
    pass


class RootFindingError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Precision policy
# ---------------------------------------------------------------------------

@dataclass
class PrecisionPolicy:
    """Working precision P (decimal digits), guard digits, tolerance slack.

    tolerance = 10^(-P + t_slack) is the pass threshold for numeric
    verification; internal arithmetic runs at P + guard digits.
    """

    working_digits: int = 50
    guard_digits: int = 10
    t_slack: int = 15
    _ctx: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.working_digits < 10:
            raise DomainError("working precision must be at least 10 digits")
        if self.working_digits <= self.guard_digits + self.t_slack:
            raise DomainError("working precision must exceed guard + slack digits")

    @staticmethod
    def for_digits(digits: int) -> "PrecisionPolicy":
        """Policy for any working precision >= 10, scaling guard/slack down
        so the invariant P > guard + slack always holds."""
        guard = min(10, max(2, digits // 4))
        slack = min(15, max(1, digits - guard - 1, 1))
        slack = min(slack, digits - guard - 1)
        return PrecisionPolicy(digits, guard_digits=guard, t_slack=max(1, slack))

    @property
    def context(self):
        if self._ctx is None:
            from mpmath.ctx_mp import MPContext

            ctx = MPContext()
            ctx.dps = self.working_digits + self.guard_digits
            object.__setattr__(self, "_ctx", ctx)
        return self._ctx

    @property
    def tolerance(self):
        ctx = self.context
        return ctx.mpf(10) ** (-self.working_digits + self.t_slack)

    def real(self, value):
        ctx = self.context
        if isinstance(value, Fraction):
            return ctx.mpf(value.numerator) / ctx.mpf(value.denominator)
        return ctx.mpf(value)

    def complex(self, value):
        ctx = self.context
        if isinstance(value, Fraction):
            return ctx.mpc(self.real(value))
        if isinstance(value, complex):
            return ctx.mpc(value.real, value.imag)
        if isinstance(value, RatFunc):
            return ctx.mpc(self.real(value.constant_value()))
        return ctx.mpc(value)


# ---------------------------------------------------------------------------
# Bernoulli numbers and zeta values
# ---------------------------------------------------------------------------

_bernoulli_cache: List[Fraction] = [Fraction(1)]


def bernoulli(r: int) -> Fraction:
    """Exact Bernoulli number B_r, convention B_1 = -1/2."""
    if r < 0:
        raise DomainError("Bernoulli numbers need r >= 0")
    while len(_bernoulli_cache) <= r:
        n = len(_bernoulli_cache)
        acc = Fraction(0)
        for j in range(n):
            acc += comb(n + 1, j) * _bernoulli_cache[j]
        _bernoulli_cache.append(-acc / (n + 1))
    return _bernoulli_cache[r]


@lru_cache(maxsize=None)
def bernoulli_poly_coeffs(m: int) -> Tuple[Fraction, ...]:
    """Coefficients of the Bernoulli polynomial B_m(x), highest degree first."""
    return tuple(comb(m, k) * bernoulli(k) for k in range(m + 1))


_zeta_cache: Dict[Tuple[int, int], object] = {}


def zeta_int(k: int, policy: PrecisionPolicy):
    """zeta(k) for integer k >= 2, via Borwein's accelerated alternating series.

    eta(s) = sum (-1)^(n-1) n^-s is evaluated with the Chebyshev-weighted
    partial sums (error ~ (3+sqrt(8))^-n), then zeta(s) = eta(s)/(1-2^(1-s)).
    """
    if k < 2:
        raise DomainError("zeta_int needs k >= 2")
    ctx = policy.context
    key = (k, ctx.dps)
    cached = _zeta_cache.get(key)
    if cached is not None:
        return cached
    n = int(1.32 * ctx.dps) + 6
    # d_j = n * sum_{i<=j} (n+i-1)! 4^i / ((n-i)! (2i)!), exact integers
    d = [0] * (n + 1)
    acc = 0
    num = 1  # (n+i-1)! / (n-i)! / (2i)! * 4^i, maintained incrementally
    for i in range(n + 1):
        if i == 0:
            num = 1
        else:
            num = num * (n + i - 1) * (n - i + 1) * 4
            num //= (2 * i) * (2 * i - 1)
        acc += num
        d[i] = n * acc
    total = ctx.mpf(0)
    for j in range(n):
        term = ctx.mpf(d[j] - d[n]) / ctx.mpf((j + 1) ** k)
        total += term if j % 2 == 0 else -term
    eta = -total / ctx.mpf(d[n])
    value = eta / (1 - ctx.mpf(2) ** (1 - k))
    if len(_zeta_cache) < 10_000:
        _zeta_cache[key] = value
    return value


def _zeta_rational(j: int) -> Fraction:
    """Exact zeta at integers <= 0: zeta(0) = -1/2, zeta(-n) = -B_(n+1)/(n+1)."""
    if j > 0:
        raise ValueError("only non-positive integers here")
    if j == 0:
        return Fraction(-1, 2)
    n = -j
    return -bernoulli(n + 1) / (n + 1)


@lru_cache(maxsize=None)
def _harmonic(m: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, m + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# Li_m
# ---------------------------------------------------------------------------

def _li_series(m: int, z, ctx):
    """Direct power series, |z| <= 1/2 (geometric tail bound)."""
    tol = ctx.mpf(10) ** (-ctx.dps - 3)
    a = abs(z)
    total = ctx.mpc(0)
    power = ctx.mpc(1)
    n = 0
    while True:
        n += 1
        power *= z
        total += power / ctx.mpf(n) ** m
        if abs(power) / (1 - a) < tol:
            return total


def _li_unit_circle(m: int, z, ctx, policy):
    """Log-expansion around z = 1: valid for |log z| < 2*pi.

    Li_m(e^w) = sum_{k != m-1} zeta(m-k) w^k / k!
                + w^(m-1)/(m-1)! (H_(m-1) - log(-w)).
    """
    w = ctx.log(z)
    tol = ctx.mpf(10) ** (-ctx.dps - 3)
    total = ctx.mpc(0)
    wk = ctx.mpc(1)  # w^k / k!
    k = 0
    small_streak = 0
    while True:
        if k == m - 1:
            if w != 0:
                total += wk * (policy.real(_harmonic(m - 1)) - ctx.log(-w))
        else:
            j = m - k
            if j >= 2:
                zv = zeta_int(j, policy)
                contrib = wk * zv
                total += contrib
            else:
                q = _zeta_rational(j)
                if q != 0:
                    contrib = wk * policy.real(q)
                    total += contrib
                else:
                    contrib = ctx.mpf(0)
            if k > m + 3:
                small_streak = small_streak + 1 if abs(contrib) < tol else 0
                if small_streak >= 3:
                    return total
        k += 1
        wk = wk * w / k
        if k > 40 * ctx.dps + 200:
            raise RootFindingError("log-expansion of Li did not converge")


def _li_continuation(m: int, z, ctx, policy):
    """Inversion continuation for |z| > 2 (principal branch off [1, oo))."""
    twopij = 2j * ctx.pi
    u = ctx.log(z) / twopij
    coeffs = bernoulli_poly_coeffs(m)
    bern = ctx.mpc(0)
    for c in coeffs:
        bern = bern * u + policy.real(c)
    a = -(twopij ** m) / policy.real(Fraction(_factorial(m))) * bern
    if z.imag == 0 and z.real < 0:
        a = ctx.mpc(a.real)
    if z.imag < 0 or (z.imag == 0 and z.real >= 1):
        a -= twopij * ctx.log(z) ** (m - 1) / _factorial(m - 1)
    inner = li_m(m, 1 / z, policy)
    return (-1) ** (m + 1) * inner + a


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def li_m(m: int, z, policy: PrecisionPolicy):
    """Principal-branch Li_m(z), continued through C - [1, oo).

    m = 1 is -log(1-z) (pole at z = 1); for m >= 2 the point z = 1 itself
    gives zeta(m), while real z > 1 raises BranchAmbiguityError (use CL_m,
    which is one-valued, on the cut).
    """
    if m < 1:
        raise DomainError("li_m needs m >= 1")
    ctx = policy.context
    z = policy.complex(z)
    if m == 1:
        if z == 1:
            raise PoleError("Li_1 has a pole at z = 1")
        return -ctx.log(1 - z)
    if z == 0:
        return ctx.mpc(0)
    if z == 1:
        return ctx.mpc(zeta_int(m, policy))
    if z.imag == 0 and z.real > 1:
        raise BranchAmbiguityError(
            "Li_m is branch-ambiguous on (1, oo); evaluate CL_m instead"
        )
    a = abs(z)
    if a <= 0.5:
        return _li_series(m, z, ctx)
    if a <= 2:
        return _li_unit_circle(m, z, ctx, policy)
    return _li_continuation(m, z, ctx, policy)


# ---------------------------------------------------------------------------
# CL_m
# ---------------------------------------------------------------------------

def cl_m(m: int, z, policy: PrecisionPolicy):
    """One-valued CL_m: total on P^1(C), real-valued, inversion-(anti)symmetric.

    Accepts complex values, rationals, INFINITY, and constant RatFuncs.
    Continuity values: 0 at 0 and infinity; zeta(m) at 1 for odd m, 0 for
    even m.
    """
    if m < 2:
        raise DomainError("cl_m needs m >= 2 (m = 1 is excluded)")
    ctx = policy.context
    if z is INFINITY:
        return ctx.mpf(0)
    z = policy.complex(z)
    if z == 0:
        return ctx.mpf(0)
    if z == 1:
        return +zeta_int(m, policy) if m % 2 == 1 else ctx.mpf(0)
    a = abs(z)
    if a > 1:
        inner = cl_m(m, 1 / z, policy)
        return inner if m % 2 == 1 else -inner
    logabs = ctx.log(a)
    # |Li_j(z)| <= |z|/(1-|z|) for |z| < 1: skip terms that cannot matter
    li_bound = a / (1 - a) if a < 1 else ctx.mpf(4)
    floor = ctx.mpf(10) ** (-ctx.dps - 3)
    acc = ctx.mpc(0)
    for r in range(m):
        br = bernoulli(r)
        if br == 0:
            continue
        coeff = policy.real(Fraction(2 ** r) * br / _factorial(r))
        weight = coeff * logabs ** r
        if a < 0.5 and abs(weight) * li_bound < floor:
            continue
        acc += weight * li_m(m - r, z, policy)
    return acc.real if m % 2 == 1 else acc.imag


def cl_apply(m: int, terms, policy: PrecisionPolicy):
    """Linear extension: sum of coeff * CL_m(argument) over constant terms.

    ``terms`` is a FormalSum over constants or an iterable of
    (coefficient, value) pairs; values may be complex, Fraction, INFINITY.
    """
    ctx = policy.context
    total = ctx.mpf(0)
    for coeff, value in terms:
        if isinstance(value, RatFunc):
            if not value.is_constant():
                raise DomainError("cl_apply needs constant arguments")
            value = value.constant_value()
        total += policy.real(Fraction(coeff)) * cl_m(m, value, policy)
    return total


# ---------------------------------------------------------------------------
# Polynomial roots
# ---------------------------------------------------------------------------

def poly_roots(coefficients: Sequence, policy: PrecisionPolicy) -> List:
    """All complex roots (with multiplicity) of sum coefficients[i] * x^i.

    Simultaneous iteration (mpmath's Durand-Kerner engine at doubled
    precision) followed by a per-root Newton polish; near-coincident roots
    are clustered at tolerance 10^(-P/2) and replaced by their centroid.
    Roots come back sorted by (re, im).
    """
    import mpmath

    ctx = policy.context
    coeffs = [policy.complex(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise DomainError("poly_roots needs degree >= 1 with nonzero leading coefficient")
    deg = len(coeffs) - 1
    descending = list(reversed(coeffs))
    try:
        roots, err = ctx.polyroots(
            descending, maxsteps=200, extraprec=ctx.prec, error=True
        )
    except mpmath.libmp.NoConvergence as exc:  # pragma: no cover - defensive
        raise RootFindingError(f"root iteration failed to converge: {exc}") from exc

    def horner(x):
        val = ctx.mpc(0)
        dval = ctx.mpc(0)
        for c in descending:
            dval = dval * x + val
            val = val * x + c
        return val, dval

    cluster_tol = ctx.mpf(10) ** (-policy.working_digits // 2)
    polished = []
    for r in roots:
        x = ctx.mpc(r)
        for _ in range(4):
            val, dval = horner(x)
            if abs(dval) < cluster_tol:
                break
            step = val / dval
            x -= step
            if abs(step) < ctx.mpf(10) ** (-ctx.dps):
                break
        polished.append(x)

    polished.sort(key=lambda c: (c.real, c.imag))
    clustered: List = []
    i = 0
    while i < len(polished):
        j = i + 1
        while j < len(polished) and abs(polished[j] - polished[i]) < cluster_tol:
            j += 1
        group = polished[i:j]
        centroid = sum(group, ctx.mpc(0)) / len(group)
        clustered.extend([centroid] * len(group))
        i = j

    scale = max(abs(c) for c in coeffs)
    residual_tol = (
        ctx.mpf(10) ** (-policy.working_digits + policy.guard_digits) * scale
    )
    for x in {(c.real, c.imag) for c in clustered}:
        val, _ = horner(ctx.mpc(*x))
        bound = residual_tol * max(ctx.mpf(1), abs(ctx.mpc(*x))) ** deg
        if abs(val) > bound:
            raise RootFindingError(
                f"root {x} has residual {abs(val)} above tolerance {bound}"
            )
    clustered.sort(key=lambda c: (c.real, c.imag))
    return clustered
