"""Numeric verification drivers: equation sums, preimage families, roots.

All drivers sample complex points from the annulus 0.2 < |z| < 5 (excluding
a small disk around 1), resample on degeneracy, and test vanishing against
the policy tolerance 10^(-P + slack).  Sampling is driven by split PRNG
streams, one per sample index, so verdicts do not depend on evaluation
order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Sequence

from .catalog import EquationSpec, get_equation
from .criterion import Verdict
from .exact import DomainError, SplitMix64
from .formal import FormalSum
from .numeric import PrecisionPolicy, cl_apply, cl_m, poly_roots
from .poly import MultiPoly
from .ratfunc import INFINITY, RatFunc

__all__ = [
    "sample_complex",
    "verify_numeric",
    "verify_numeric_sum",
    "verify_dilog_general",
    "verify_trilog_theorem",
    "verify_wojtkowiak",
    "verify_fourlog_numeric",
    "preimages",
    "cr_num",
    "random_phi",
]


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------

_R_LO, _R_HI = 0.2, 5.0


def sample_complex(rng: SplitMix64, ctx):
    """One point from the annulus 0.2 < |z| < 5, excluding |z - 1| < 0.1."""
    while True:
        r = math.exp(math.log(_R_LO) + rng.next_unit() * (math.log(_R_HI) - math.log(_R_LO)))
        theta = 2 * math.pi * rng.next_unit()
        z = complex(r * math.cos(theta), r * math.sin(theta))
        if abs(z - 1) < 0.1:
            continue
        return ctx.mpc(z.real, z.imag)


def _coerce(ctx):
    return lambda fr: ctx.mpf(fr.numerator) / ctx.mpf(fr.denominator)


def _evaluate_terms(s: FormalSum, binding: Dict[str, object], ctx):
    """Evaluate every argument; None signals a degenerate draw."""
    co = _coerce(ctx)
    out = []
    for c, a in s:
        if a.is_constant():
            out.append((c, a.constant_value()))
            continue
        val, ok = a.evaluate_in(binding, co)
        if not ok:
            return None
        mag = abs(val)
        if mag < 1e-8 or mag > 1e8 or abs(val - 1) < 1e-8:
            return None
        out.append((c, val))
    return out


def verify_numeric_sum(
    s: FormalSum,
    weight: int,
    points: int = 20,
    policy: PrecisionPolicy | None = None,
    seed: int = 0,
) -> Verdict:
    """CL_weight vanishes on the sum at ``points`` random complex samples."""
    policy = policy or PrecisionPolicy(50)
    ctx = policy.context
    root = SplitMix64(seed)
    variables = s.variables()
    tol = policy.tolerance
    worst = ctx.mpf(0)
    for i in range(points):
        rng = root.split("pt", i)
        terms = None
        binding = {}
        for _ in range(80):
            binding = {v: sample_complex(rng, ctx) for v in variables}
            terms = _evaluate_terms(s, binding, ctx)
            if terms is not None:
                break
        if terms is None:
            raise DomainError(f"persistent degeneracy while sampling point {i}")
        value = abs(cl_apply(weight, terms, policy))
        worst = max(worst, value)
        if value >= tol:
            witness = {
                "point": {v: str(binding[v]) for v in variables},
                "value": float(value),
                "index": i,
            }
            return Verdict(
                "fail",
                witness,
                {"points": points, "seed": seed, "precision": policy.working_digits},
            )
    return Verdict(
        "pass",
        None,
        {
            "points": points,
            "seed": seed,
            "precision": policy.working_digits,
            "max_abs_value": float(worst),
        },
    )


def verify_numeric(
    eq: EquationSpec,
    points: int = 20,
    policy: PrecisionPolicy | None = None,
    seed: int = 0,
) -> Verdict:
    """Numeric verification of a catalog entry (root-bound for the 4-log family)."""
    if eq.name.startswith("fourlog_n"):
        n = int(eq.name.rsplit("n", 1)[1])
        return verify_fourlog_numeric(n, points=points, policy=policy, seed=seed)
    return verify_numeric_sum(eq.sum, eq.weight, points=points, policy=policy, seed=seed)


# ---------------------------------------------------------------------------
# Preimages and numeric cross ratios
# ---------------------------------------------------------------------------

def _univariate_coeffs(p: MultiPoly, var: str) -> List[Fraction]:
    for v in p.vars:
        if v != var and p.degree_in(v) > 0:
            raise DomainError(f"polynomial is not univariate in {var}")
    deg = p.degree_in(var)
    out = [Fraction(0)] * (deg + 1)
    if var in p.vars:
        i = p.vars.index(var)
        for exp, c in p.terms.items():
            out[exp[i]] += c
    else:
        for exp, c in p.terms.items():
            out[0] += c
    return out


def preimages(phi: RatFunc, w, policy: PrecisionPolicy) -> List:
    """phi^(-1)(w) with multiplicity, including infinite preimages.

    ``w`` may be a complex value, a Fraction, or INFINITY.  The degree of phi
    is max(deg num, deg den); degree drop in the target polynomial puts the
    missing preimages at infinity.
    """
    ctx = policy.context
    var = next(v for v in phi.vars if phi.num.degree_in(v) or phi.den.degree_in(v))
    num_c = _univariate_coeffs(phi.num, var)
    den_c = _univariate_coeffs(phi.den, var)
    deg = max(len(num_c), len(den_c)) - 1
    co = _coerce(ctx)
    if w is INFINITY:
        coeffs = [co(c) for c in den_c]
    else:
        wv = policy.complex(w)
        size = max(len(num_c), len(den_c))
        coeffs = []
        for i in range(size):
            cn = co(num_c[i]) if i < len(num_c) else ctx.mpf(0)
            cd = co(den_c[i]) if i < len(den_c) else ctx.mpf(0)
            coeffs.append(cn - wv * cd)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    finite = poly_roots(coeffs, policy) if len(coeffs) >= 2 else []
    inf_mult = deg - (len(coeffs) - 1 if coeffs else 0)
    return finite + [INFINITY] * max(inf_mult, 0)


def phi_value(phi: RatFunc, x, policy: PrecisionPolicy):
    """Numeric value of a one-variable rational map (INFINITY at poles)."""
    ctx = policy.context
    if x is INFINITY:
        var = next(v for v in phi.vars if phi.num.degree_in(v) or phi.den.degree_in(v))
        dn, dd = phi.num.degree_in(var), phi.den.degree_in(var)
        if dn > dd:
            return INFINITY
        if dn < dd:
            return ctx.mpc(0)
        num_c = _univariate_coeffs(phi.num, var)
        den_c = _univariate_coeffs(phi.den, var)
        co = _coerce(ctx)
        return co(num_c[-1]) / co(den_c[-1])
    var = next(iter(phi.vars))
    binding = {v: policy.complex(x) for v in phi.vars}
    val, ok = phi.evaluate_in(binding, _coerce(ctx))
    return val if ok else INFINITY


def cr_num(ctx, x, y, z, w):
    """Numeric cross ratio with the infinity conventions of the symbolic one."""
    pts = [x, y, z, w]

    def same(a, b):
        if a is INFINITY or b is INFINITY:
            return a is b
        return a == b

    if same(x, z) or same(y, w):
        return ctx.mpc(0)
    if same(x, w) or same(y, z):
        return INFINITY
    if same(x, y) or same(z, w):
        return ctx.mpc(1)
    num = ctx.mpc(1)
    den = ctx.mpc(1)
    if x is not INFINITY and z is not INFINITY:
        num *= x - z
    if y is not INFINITY and w is not INFINITY:
        num *= y - w
    if x is not INFINITY and w is not INFINITY:
        den *= x - w
    if y is not INFINITY and z is not INFINITY:
        den *= y - z
    if den == 0:
        return INFINITY
    return num / den


# ---------------------------------------------------------------------------
# Preimage-family verifications
# ---------------------------------------------------------------------------

def verify_dilog_general(
    phi: RatFunc, alpha, B, C, D, policy: PrecisionPolicy | None = None
) -> Verdict:
    """sum over preimages CL_2(cr(alpha, beta, gamma, delta)) equals
    deg(phi) * CL_2(cr(phi(alpha), B, C, D))."""
    policy = policy or PrecisionPolicy(50)
    ctx = policy.context
    var = next(v for v in phi.vars if phi.num.degree_in(v) or phi.den.degree_in(v))
    deg = max(phi.num.degree_in(var), phi.den.degree_in(var))
    a_val = phi_value(phi, alpha, policy)
    betas = preimages(phi, B, policy)
    gammas = preimages(phi, C, policy)
    deltas = preimages(phi, D, policy)
    alpha_v = alpha if alpha is INFINITY else policy.complex(alpha)
    total = ctx.mpf(0)
    for b in betas:
        for g in gammas:
            for d in deltas:
                total += cl_m(2, cr_num(ctx, alpha_v, b, g, d), policy)
    rhs = deg * cl_m(2, cr_num(ctx, a_val, _pt(B, policy), _pt(C, policy), _pt(D, policy)), policy)
    err = abs(total - rhs)
    meta = {"degree": deg, "precision": policy.working_digits, "error": float(err)}
    if err < policy.tolerance:
        return Verdict("pass", None, meta)
    return Verdict("fail", {"error": float(err)}, meta)


def _pt(v, policy):
    return v if v is INFINITY else policy.complex(v)


def verify_trilog_theorem(
    phi: RatFunc,
    A_pts: Sequence,
    B_pts: Sequence,
    C_pts: Sequence,
    D_pts: Sequence,
    policy: PrecisionPolicy | None = None,
) -> Verdict:
    """The alternating 16-fold combination over preimage families vanishes."""
    policy = policy or PrecisionPolicy(50)
    ctx = policy.context
    var = next(v for v in phi.vars if phi.num.degree_in(v) or phi.den.degree_in(v))
    deg = max(phi.num.degree_in(var), phi.den.degree_in(var))
    pre = {
        "A": [preimages(phi, p, policy) for p in A_pts],
        "B": [preimages(phi, p, policy) for p in B_pts],
        "C": [preimages(phi, p, policy) for p in C_pts],
        "D": [preimages(phi, p, policy) for p in D_pts],
    }
    total = ctx.mpf(0)
    for i in (0, 1):
        for j in (0, 1):
            for k in (0, 1):
                for l in (0, 1):
                    sign = (-1) ** (i + j + k + l)
                    inner = ctx.mpf(0)
                    for a in pre["A"][i]:
                        for b in pre["B"][j]:
                            for c in pre["C"][k]:
                                for d in pre["D"][l]:
                                    inner += cl_m(3, cr_num(ctx, a, b, c, d), policy)
                    inner -= deg * cl_m(
                        3,
                        cr_num(
                            ctx,
                            _pt(A_pts[i], policy),
                            _pt(B_pts[j], policy),
                            _pt(C_pts[k], policy),
                            _pt(D_pts[l], policy),
                        ),
                        policy,
                    )
                    total += sign * inner
    err = abs(total)
    meta = {"degree": deg, "precision": policy.working_digits, "error": float(err)}
    return Verdict("pass" if err < policy.tolerance else "fail",
                   None if err < policy.tolerance else {"error": float(err)}, meta)


def verify_wojtkowiak(
    phi: RatFunc, A, B, C, x1, x2, policy: PrecisionPolicy | None = None
) -> Verdict:
    """The one-variable specialization is independent of x: evaluate the
    combination at two points and compare."""
    policy = policy or PrecisionPolicy(50)
    ctx = policy.context
    als = preimages(phi, A, policy)
    bes = preimages(phi, B, policy)
    gas = preimages(phi, C, policy)

    def value(x):
        xv = policy.complex(x)
        total = cl_m(3, cr_num(ctx, phi_value(phi, x, policy), _pt(C, policy), _pt(B, policy), _pt(A, policy)), policy)
        for g in gas:
            for b in bes:
                for a in als:
                    total -= cl_m(3, cr_num(ctx, xv, g, b, a), policy)
        for a1 in als:
            for a2 in als:
                for g in gas:
                    total -= cl_m(3, cr_num(ctx, xv, a1, a2, g), policy)
        for b1 in bes:
            for b2 in bes:
                for g in gas:
                    total -= cl_m(3, cr_num(ctx, xv, b1, b2, g), policy)
        for a1 in als:
            for a2 in als:
                for b in bes:
                    total += cl_m(3, cr_num(ctx, xv, a1, a2, b), policy)
        for b1 in bes:
            for b2 in bes:
                for a in als:
                    total += cl_m(3, cr_num(ctx, xv, b1, b2, a), policy)
        return total

    err = abs(value(x1) - value(x2))
    meta = {"precision": policy.working_digits, "error": float(err)}
    return Verdict("pass" if err < policy.tolerance else "fail",
                   None if err < policy.tolerance else {"error": float(err)}, meta)


def verify_fourlog_numeric(
    n: int,
    points: int = 20,
    policy: PrecisionPolicy | None = None,
    seed: int = 0,
) -> Verdict:
    """Bind the weight-4 template to the preimages of random (t, u) and test
    CL_4 vanishing; the preimage map is z^(n-1)(z-1)."""
    policy = policy or PrecisionPolicy(60)
    ctx = policy.context
    eq = get_equation(f"fourlog_n{n}")
    root = SplitMix64(seed)
    tol = policy.tolerance
    worst = ctx.mpf(0)
    for i in range(points):
        rng = root.split("4log", n, i)
        terms = None
        for _ in range(60):
            tv = sample_complex(rng, ctx)
            uv = sample_complex(rng, ctx)
            # roots of z^n - z^(n-1) - t and of z^n - z^(n-1) - u
            def rts(target):
                coeffs = [ctx.mpc(0)] * (n + 1)
                coeffs[0] = -target
                coeffs[n - 1] = ctx.mpc(-1)
                coeffs[n] = ctx.mpc(1)
                return poly_roots(coeffs, policy)

            xs, ys = rts(tv), rts(uv)
            if any(abs(r) < 1e-6 or abs(r - 1) < 1e-6 for r in xs + ys):
                continue
            binding = {f"x{k+1}": xs[k] for k in range(n)}
            binding.update({f"y{k+1}": ys[k] for k in range(n)})
            terms = _evaluate_terms(eq.sum, binding, ctx)
            if terms is not None:
                break
        if terms is None:
            raise DomainError(f"persistent degeneracy in weight-4 sampling, n={n}")
        value = abs(cl_apply(4, terms, policy))
        worst = max(worst, value)
        if value >= tol:
            return Verdict(
                "fail",
                {"t": str(tv), "u": str(uv), "value": float(value), "index": i},
                {"n": n, "points": points, "seed": seed, "precision": policy.working_digits},
            )
    return Verdict(
        "pass",
        None,
        {
            "n": n,
            "points": points,
            "seed": seed,
            "precision": policy.working_digits,
            "max_abs_value": float(worst),
        },
    )


def random_phi(rng: SplitMix64, degree: int = 3, height: int = 5) -> RatFunc:
    """Random squarefree polynomial map with small rational coefficients."""
    from .exact import random_rational

    z = RatFunc.var("z")
    while True:
        coeffs = [random_rational(height, rng) for _ in range(degree)] + [Fraction(1)]
        phi = RatFunc.from_value(0)
        power = RatFunc.from_value(1)
        for c in coeffs:
            phi = phi + power * c
            power = power * z
        pol = PrecisionPolicy(30)
        roots = poly_roots([Fraction(c) for c in coeffs], pol)
        distinct = all(
            abs(roots[i] - roots[j]) > 1e-6
            for i in range(len(roots))
            for j in range(i + 1, len(roots))
        )
        if distinct:
            return phi
