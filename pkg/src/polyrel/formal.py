"""Formal rational-linear combinations of rational-function arguments.

A FormalSum is a finite Q-linear combination of RatFunc arguments, the
working representation of elements of Z[F] / Q[F].  Canonicalization merges
arguments that are equal *as functions* (cross-multiplication equality,
accelerated by evaluation fingerprints) and drops zero coefficients; constant
arguments such as [1] are kept as constant RatFunc entries.

Field automorphisms are stored by their images on the variables, composed
exactly, and bred into finite groups / orbits by breadth-first closure.
Automorphism images are kept gcd-cancelled: without cancellation the images
of iterated compositions grow exponentially and closure cannot terminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .exact import DomainError, SplitMix64
from .ratfunc import INDETERMINATE, POLE, RatFunc

__all__ = [
    "FormalSum",
    "Automorphism",
    "SpecializeResult",
    "group_closure",
    "orbit",
    "inversion_class_key",
    "ClosureBoundExceeded",
]


class ClosureBoundExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Evaluation fingerprints (bucketing helper for cross-multiplication equality)
# ---------------------------------------------------------------------------

_FP_POINTS = 2
_fp_value_cache: Dict[Tuple[str, int], Fraction] = {}


def _fp_value(var: str, k: int) -> Fraction:
    key = (var, k)
    v = _fp_value_cache.get(key)
    if v is None:
        rng = SplitMix64(0xF1A9).split(var, k)
        v = Fraction(rng.next_int(2, 127), rng.next_int(3, 113))
        _fp_value_cache[key] = v
    return v


def _fingerprint(f: RatFunc) -> Tuple:
    out = []
    for k in range(_FP_POINTS):
        point = {v: _fp_value(v, k) for v in f.vars}
        val = f.evaluate(point)
        if val is INDETERMINATE:
            # uncancelled common factor vanished at the probe point; fall back
            # to the reduced form so equal functions share fingerprints
            red = f.cancelled()
            val = red.evaluate({v: _fp_value(v, k) for v in red.vars})
        out.append("pole" if val is POLE else val)
    return tuple(out)


def inversion_class_key(f: RatFunc) -> str:
    """Canonical key of the argument class {f, 1/f} (sign-blind on inversion)."""
    if f._class_key is not None:
        return f._class_key
    red = f.cancelled()
    s = red.serialize()
    if red.is_zero():
        key = s
    else:
        key = min(s, red.inv().serialize())
    f._class_key = key
    return key


# ---------------------------------------------------------------------------
# FormalSum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecializeResult:
    """Outcome of FormalSum.specialize.

    ``degenerate`` is set when a non-constant argument evaluated to 0, 1, a
    pole, or 0/0 under the strict policy; with allow_degenerate such terms
    are dropped instead and listed in ``dropped`` as (argument, reason,
    coefficient) so callers can reconstruct the constant bookkeeping.
    """

    degenerate: bool
    sum: "FormalSum | None"
    dropped: Tuple[Tuple[str, str, str], ...] = ()

    def dropped_ones_coefficient(self) -> Fraction:
        """Net coefficient of arguments that degenerated to 1."""
        return sum(
            (Fraction(c) for _, reason, c in self.dropped if reason == "one"),
            Fraction(0),
        )


class FormalSum:
    """Canonical Q-linear combination of RatFunc arguments."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[Tuple[Fraction, RatFunc]] = ()):
        buckets: Dict[Tuple, List[Tuple[RatFunc, Fraction]]] = {}
        for coeff, arg in terms:
            c = Fraction(coeff)
            if c == 0:
                continue
            fp = _fingerprint(arg)
            merged = False
            for i, (rep, acc) in enumerate(buckets.get(fp, [])):
                if rep.equivalent(arg):
                    buckets[fp][i] = (rep, acc + c)
                    merged = True
                    break
            if not merged:
                buckets.setdefault(fp, []).append((arg, c))
        collected = [
            (acc, rep)
            for entries in buckets.values()
            for rep, acc in entries
            if acc != 0
        ]
        collected.sort(key=lambda t: t[1].serialize())
        self.terms = tuple(collected)
        self._hash = None

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def single(arg: RatFunc, coeff=1) -> "FormalSum":
        return FormalSum([(Fraction(coeff), arg)])

    @staticmethod
    def of(*args: RatFunc) -> "FormalSum":
        return FormalSum([(Fraction(1), a) for a in args])

    # -- linear structure -------------------------------------------------------

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(list(self.terms) + list(other.terms))

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + other.scale(-1)

    def __neg__(self) -> "FormalSum":
        return self.scale(-1)

    def scale(self, c) -> "FormalSum":
        c = Fraction(c)
        return FormalSum([(coeff * c, arg) for coeff, arg in self.terms])

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple((c, a.serialize()) for c, a in self.terms))
        return self._hash

    # -- structure ---------------------------------------------------------------

    def variables(self) -> Tuple[str, ...]:
        vs = set()
        for _, arg in self.terms:
            vs.update(v for v in arg.vars if arg.num.degree_in(v) or arg.den.degree_in(v))
        return tuple(sorted(vs))

    def constant_part(self) -> "FormalSum":
        return FormalSum([(c, a) for c, a in self.terms if a.is_constant()])

    def nonconstant_part(self) -> "FormalSum":
        return FormalSum([(c, a) for c, a in self.terms if not a.is_constant()])

    def coefficient_of(self, arg: RatFunc) -> Fraction:
        for c, a in self.terms:
            if a.equivalent(arg):
                return c
        return Fraction(0)

    def assert_integral(self) -> "FormalSum":
        for c, _ in self.terms:
            if c.denominator != 1:
                raise AssertionError(f"non-integral coefficient {c}")
        return self

    # -- argument maps -------------------------------------------------------------

    def map_arguments(self, sigma: "Automorphism") -> "FormalSum":
        return FormalSum([(c, sigma.apply(a)) for c, a in self.terms])

    def substitute_arguments(self, binding: Mapping[str, RatFunc]) -> "FormalSum":
        """Apply a variable substitution to every non-constant argument."""
        out = []
        for c, a in self.terms:
            if a.is_constant():
                out.append((c, a))
            else:
                out.append((c, a.substitute({v: binding[v] for v in a.vars})))
        return FormalSum(out)

    def specialize(
        self, binding: Mapping[str, Fraction], allow_degenerate: bool = False
    ) -> SpecializeResult:
        """Substitute rational values for (some or all) variables exactly.

        Constant arguments (e.g. the [1] terms the trilogarithm relations
        carry) pass through unchanged.  A non-constant argument that becomes
        0, 1, a pole, or 0/0 makes the specialization degenerate.  Partial
        bindings leave symbolic arguments behind, which is how one-variable
        specializations of multi-variable blocks (t = 0, t = 1) are taken.
        """
        from .ratfunc import ZeroDenominator

        new_terms: List[Tuple[Fraction, RatFunc]] = []
        dropped: List[Tuple[str, str, str]] = []
        for c, a in self.terms:
            if a.is_constant():
                new_terms.append((c, a))
                continue
            live = [
                v
                for v in a.vars
                if (a.num.degree_in(v) or a.den.degree_in(v)) and v not in binding
            ]
            reason = None
            if not live:
                val = a.evaluate({v: binding.get(v, Fraction(0)) for v in a.vars})
                if val is POLE:
                    reason = "pole"
                elif val is INDETERMINATE:
                    reason = "indeterminate"
                elif val == 0:
                    reason = "zero"
                elif val == 1:
                    reason = "one"
                image = None if reason else RatFunc.from_value(val)
            else:
                sub = {v: binding[v] for v in a.vars if v in binding}
                for v in a.vars:
                    sub.setdefault(v, RatFunc.var(v))
                try:
                    image = a.substitute(sub)
                except ZeroDenominator:
                    image, reason = None, "pole"
                if image is not None and not any(
                    image.depends_on(v) for v in image.vars
                ):
                    # constant in disguise (possibly uncancelled, e.g. a/a)
                    val = image.cancelled().constant_value()
                    if val == 0:
                        image, reason = None, "zero"
                    elif val == 1:
                        image, reason = None, "one"
                    else:
                        image = RatFunc.from_value(val)
            if reason is None:
                new_terms.append((c, image))
            elif allow_degenerate:
                dropped.append((a.serialize(), reason, str(c)))
            else:
                return SpecializeResult(True, None, ((a.serialize(), reason, str(c)),))
        return SpecializeResult(False, FormalSum(new_terms), tuple(dropped))

    # -- inversion classes -----------------------------------------------------------

    def inversion_class_vector(self) -> Dict[str, Fraction]:
        """Class key -> total coefficient, identifying [z] with [1/z].

        Coefficients add across an inversion class, the correct merge for odd
        weights (CL_m is inversion-even for odd m).
        """
        out: Dict[str, Fraction] = {}
        for c, a in self.terms:
            key = inversion_class_key(a)
            acc = out.get(key, Fraction(0)) + c
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
        return out

    def count_distinct_up_to_inversion(self) -> int:
        """Number of non-constant argument classes under inversion (sign-blind)."""
        keys = {inversion_class_key(a) for _, a in self.terms if not a.is_constant()}
        return len(keys)

    def serialize_terms(self) -> List[Dict[str, str]]:
        return [
            {"coeff": _frac_str(c), "arg": a.serialize()} for c, a in self.terms
        ]

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*[{a.serialize()}]" for c, a in self.terms[:6])
        extra = f" ... ({len(self.terms)} terms)" if len(self.terms) > 6 else ""
        return f"FormalSum({inner}{extra})"


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# Automorphisms, closure, orbits
# ---------------------------------------------------------------------------

class Automorphism:
    """Field automorphism of Q(vars), given by its images on the variables.

    Images are stored gcd-cancelled so every automorphism has one canonical
    representation; equality and hashing use that form directly.
    """

    __slots__ = ("variables", "images", "_key")

    def __init__(self, images: Mapping[str, RatFunc | int | Fraction]):
        self.variables = tuple(sorted(images))
        self.images = {
            v: RatFunc.coerce(images[v]).cancelled() for v in self.variables
        }
        self._key = tuple(self.images[v].serialize() for v in self.variables)

    @staticmethod
    def identity(variables: Sequence[str]) -> "Automorphism":
        return Automorphism({v: RatFunc.var(v) for v in variables})

    def apply(self, f: RatFunc) -> RatFunc:
        binding = {v: self.images[v] for v in f.vars if v in self.images}
        missing = [v for v in f.vars if v not in self.images
                   and (f.num.degree_in(v) or f.den.degree_in(v))]
        if missing:
            raise DomainError(f"automorphism does not cover variables {missing}")
        for v in f.vars:
            binding.setdefault(v, RatFunc.var(v))
        return f.substitute(binding)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: (self.compose(other)).apply(f) == self.apply(other.apply(f))."""
        if self.variables != other.variables:
            raise DomainError("automorphisms act on different variable sets")
        return Automorphism({v: self.apply(other.images[v]) for v in self.variables})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        parts = ", ".join(f"{v} -> {self.images[v].serialize()}" for v in self.variables)
        return f"Automorphism({parts})"


def group_closure(generators: Sequence[Automorphism], bound: int = 1024) -> List[Automorphism]:
    """Full closure of the generators under composition, including identity.

    Breadth-first multiplication by the generators; raises
    ClosureBoundExceeded if more than ``bound`` elements appear.  The result
    is sorted by canonical image key, so its order is deterministic.
    """
    if not generators:
        raise DomainError("need at least one generator")
    variables = generators[0].variables
    ident = Automorphism.identity(variables)
    seen: Dict[Tuple, Automorphism] = {ident._key: ident}
    frontier = []
    for g in generators:
        if g._key not in seen:
            seen[g._key] = g
            frontier.append(g)
    while frontier:
        new_frontier = []
        for g in generators:
            for x in frontier:
                composed = g.compose(x)
                if composed._key not in seen:
                    seen[composed._key] = composed
                    new_frontier.append(composed)
                    if len(seen) > bound:
                        raise ClosureBoundExceeded(
                            f"closure exceeded the bound of {bound} elements"
                        )
        frontier = new_frontier
    return sorted(seen.values(), key=lambda a: a._key)


def orbit(
    x: RatFunc,
    group: Sequence[Automorphism],
    up_to_inversion: bool = False,
) -> List[RatFunc]:
    """Distinct images of x under the group (optionally identifying [z]~[1/z]).

    Returns cancelled representatives sorted by serialization.
    """
    reps: Dict[str, RatFunc] = {}
    for sigma in group:
        image = sigma.apply(x).cancelled()
        key = inversion_class_key(image) if up_to_inversion else image.serialize()
        reps.setdefault(key, image)
    return [reps[k] for k in sorted(reps)]
