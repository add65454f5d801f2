"""Symbolic kernel test for functional equations.

The weight-m criterion maps [x] to x^(sym m-2) (x ^ (1-x)) inside
Sym^(m-2) Q(x)* tensor Lambda^2 Q(x)*.  After specializing the equation's
variables at rational points, multiplicative structure becomes prime
factorization (signs and roots of unity are torsion and get dropped), and
zero-ness of the tensor is certified by pairing against random rational dual
functionals: theta applied through the symmetric power, (phi, psi) through
the wedge.  A true kernel element passes every pairing exactly; a non-member
is caught with high probability (Schwartz-Zippel over the functional
values), and every failure carries a reproducible witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from .exact import DomainError, SplitMix64, factor_rational, random_rational
from .formal import FormalSum, SpecializeResult

__all__ = [
    "PrimeVector",
    "DualFunctional",
    "Verdict",
    "log_vector",
    "beta_pairing",
    "kernel_test",
    "expand_tensor",
]


# ---------------------------------------------------------------------------
# Additive prime coordinates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeVector:
    """Element of Q tensor Q^x: sparse map prime -> rational exponent.

    The sign of the underlying rational is torsion and is discarded.
    """

    coords: Tuple[Tuple[int, Fraction], ...]

    @staticmethod
    def from_map(m: Mapping[int, Fraction]) -> "PrimeVector":
        return PrimeVector(tuple(sorted((p, Fraction(e)) for p, e in m.items() if e != 0)))

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.coords)

    def __neg__(self) -> "PrimeVector":
        return PrimeVector(tuple((p, -e) for p, e in self.coords))

    def __add__(self, other: "PrimeVector") -> "PrimeVector":
        out = dict(self.coords)
        for p, e in other.coords:
            out[p] = out.get(p, Fraction(0)) + e
        return PrimeVector.from_map(out)

    def support(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.coords)

    def is_zero(self) -> bool:
        return not self.coords


def log_vector(q: Fraction | int) -> PrimeVector:
    """Additive coordinates of a nonzero rational (sign torsion discarded)."""
    q = Fraction(q)
    if q == 0:
        raise DomainError("log_vector of zero")
    fac = factor_rational(q)
    return PrimeVector.from_map({p: Fraction(e) for p, e in fac.factors.items()})


class DualFunctional:
    """Rational linear functional on prime coordinates (0 on unseen primes)."""

    __slots__ = ("values",)

    def __init__(self, values: Mapping[int, Fraction]):
        self.values = {int(p): Fraction(v) for p, v in values.items() if v != 0}

    def __call__(self, v: PrimeVector) -> Fraction:
        total = Fraction(0)
        for p, e in v.coords:
            w = self.values.get(p)
            if w is not None:
                total += w * e
        return total

    def __repr__(self) -> str:
        return f"DualFunctional({self.values})"


# ---------------------------------------------------------------------------
# Pairing
# ---------------------------------------------------------------------------

def _constant_terms(s) -> List[Tuple[Fraction, Fraction]]:
    """Normalize input to (coefficient, rational value) pairs."""
    out = []
    if isinstance(s, FormalSum):
        for c, a in s:
            if not a.is_constant():
                raise DomainError("beta_pairing needs a specialized (constant) sum")
            out.append((c, a.constant_value()))
    else:
        for c, v in s:
            out.append((Fraction(c), Fraction(v)))
    return out


def beta_pairing(s, m: int, theta: DualFunctional, phi: DualFunctional, psi: DualFunctional) -> Fraction:
    """Exact pairing of the weight-m tensor of ``s`` with theta^(m-2) (phi ^ psi).

    ``s`` is a FormalSum over constants (or (coeff, rational) pairs).  The
    result is sum_x coeff * theta(log x)^(m-2) * (phi(log x) psi(log(1-x)) -
    phi(log(1-x)) psi(log x)).  Arguments equal to 1 contribute zero by
    convention (1-x = 0 has no prime vector) and are skipped; an argument
    equal to 0 is a domain error.
    """
    if m < 2:
        raise DomainError("beta pairing needs m >= 2")
    total = Fraction(0)
    for coeff, x in _constant_terms(s):
        if x == 0:
            raise DomainError("beta_pairing argument 0 is outside the domain")
        if x == 1:
            continue
        v = log_vector(x)
        w = log_vector(1 - x)
        tv = theta(v)
        if m > 2 and tv == 0:
            continue
        wedge = phi(v) * psi(w) - phi(w) * psi(v)
        total += coeff * tv ** (m - 2) * wedge
    return total


def expand_tensor(s, m: int) -> Dict[Tuple, Fraction]:
    """Full sparse expansion of the weight-m tensor (debug mode, m <= 4).

    Keys are (sym_part, wedge_pair): sym_part is a sorted tuple of m-2
    primes, wedge_pair an ordered prime pair p < q.  The sum is in the kernel
    iff the expansion is empty.
    """
    if not 2 <= m <= 4:
        raise DomainError("full tensor expansion is implemented for 2 <= m <= 4 only")
    out: Dict[Tuple, Fraction] = {}

    def bump(key: Tuple, c: Fraction):
        acc = out.get(key, Fraction(0)) + c
        if acc == 0:
            out.pop(key, None)
        else:
            out[key] = acc

    for coeff, x in _constant_terms(s):
        if x == 0:
            raise DomainError("tensor expansion argument 0 is outside the domain")
        if x == 1:
            continue
        v = log_vector(x).as_dict()
        w = log_vector(1 - x).as_dict()
        wedge: Dict[Tuple[int, int], Fraction] = {}
        for p, ev in v.items():
            for q, ew in w.items():
                if p == q:
                    continue
                key, sign = ((p, q), 1) if p < q else ((q, p), -1)
                acc = wedge.get(key, Fraction(0)) + sign * ev * ew
                if acc == 0:
                    wedge.pop(key, None)
                else:
                    wedge[key] = acc
        if m == 2:
            for pair, c in wedge.items():
                bump(((), pair), coeff * c)
        elif m == 3:
            for r, er in v.items():
                for pair, c in wedge.items():
                    bump(((r,), pair), coeff * er * c)
        else:
            for r1, e1 in v.items():
                for r2, e2 in v.items():
                    if r1 > r2:
                        continue
                    mult = 2 if r1 != r2 else 1
                    for pair, c in wedge.items():
                        bump(((r1, r2), pair), coeff * mult * e1 * e2 * c)
    return out


# ---------------------------------------------------------------------------
# Kernel test
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    """Outcome of a probabilistic symbolic or numeric verification."""

    status: str  # "pass" | "fail"
    witness: Optional[dict] = None
    trials: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"status": self.status, "witness": self.witness, "trials": self.trials}


def _random_functional(support: Tuple[int, ...], rng: SplitMix64, height: int) -> DualFunctional:
    for _ in range(64):
        values = {p: Fraction(rng.next_int(-height, height)) for p in support}
        if any(v != 0 for v in values.values()):
            return DualFunctional(values)
    return DualFunctional({support[0]: Fraction(1)}) if support else DualFunctional({})


def kernel_test(
    s: FormalSum,
    m: int,
    trials: int = 10,
    functionals: int = 5,
    height: int = 40,
    seed: int = 0,
    specialization_height: int | None = None,
) -> Verdict:
    """Probabilistic kernel membership test for a formal sum in variables.

    Runs ``trials`` independent rational specializations (resampling while
    degenerate), pairing each against ``functionals`` random dual-functional
    triples with integer values of height <= ``height``.  Passes iff every
    pairing is exactly zero; the first nonzero pairing is returned as a
    reproducible witness.  Soundness: true kernel elements always pass.
    """
    root = SplitMix64(seed)
    variables = s.variables()
    spec_height = specialization_height or height
    n_trials = trials if variables else 1
    meta = {
        "trials": n_trials,
        "functionals": functionals,
        "height": height,
        "specialization_height": spec_height,
        "seed": seed,
        "weight": m,
    }
    for r in range(n_trials):
        spec_rng = root.split("spec", r)
        binding = None
        specialized: SpecializeResult | None = None
        if variables:
            for _ in range(300):
                binding = {
                    v: random_rational(spec_height, spec_rng) for v in variables
                }
                specialized = s.specialize(binding)
                if not specialized.degenerate:
                    break
            else:
                raise DomainError(
                    f"no non-degenerate specialization found after 300 tries (trial {r})"
                )
            spec_sum = specialized.sum
        else:
            spec_sum = s
            binding = {}
        terms = []
        support_set = set()
        for coeff, arg in spec_sum:
            x = arg.constant_value()
            if x == 1:
                continue
            terms.append((coeff, x))
            support_set.update(log_vector(x).support())
            support_set.update(log_vector(1 - x).support())
        support = tuple(sorted(support_set))
        for k in range(functionals):
            fun_rng = root.split("fun", r, k)
            theta = _random_functional(support, fun_rng, height)
            phi = _random_functional(support, fun_rng, height)
            psi = _random_functional(support, fun_rng, height)
            value = beta_pairing(terms, m, theta, phi, psi)
            if value != 0:
                witness = {
                    "specialization": {v: str(q) for v, q in binding.items()},
                    "theta": {p: str(c) for p, c in theta.values.items()},
                    "phi": {p: str(c) for p, c in phi.values.items()},
                    "psi": {p: str(c) for p, c in psi.values.items()},
                    "value": str(value),
                    "trial": r,
                    "functional_index": k,
                }
                return Verdict("fail", witness, meta)
    return Verdict("pass", None, meta)
