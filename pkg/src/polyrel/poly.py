"""Sparse multivariate polynomials over the rationals.

A polynomial carries a sorted tuple of variable names and a sparse map from
exponent vectors to nonzero Fraction coefficients.  The canonical term order
is graded lexicographic over the sorted variable table, which fixes a unique
leading monomial and a reproducible serialization for every polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Iterable, Mapping, Tuple

__all__ = ["MultiPoly", "grlex_key"]

Exponent = Tuple[int, ...]


def grlex_key(exp: Exponent) -> Tuple[int, Exponent]:
    """Graded-lex sort key: total degree first, then lex on exponents."""
    return (sum(exp), exp)


class MultiPoly:
    """Immutable sparse polynomial with Fraction coefficients.

    Zero coefficients are never stored; the zero polynomial has an empty term
    map.  Variables are kept sorted, so two polynomials over the same
    variable set have directly comparable exponent vectors.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponent, Fraction]):
        vs = tuple(variables)
        if list(vs) != sorted(vs):
            raise ValueError("variables must be sorted")
        cleaned = {}
        for exp, c in terms.items():
            if len(exp) != len(vs):
                raise ValueError("exponent arity mismatch")
            if c != 0:
                cleaned[tuple(exp)] = Fraction(c)
        self.vars = vs
        self.terms = cleaned
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables: Iterable[str] = ()) -> "MultiPoly":
        return MultiPoly(sorted(variables), {})

    @staticmethod
    def const(value, variables: Iterable[str] = ()) -> "MultiPoly":
        vs = sorted(variables)
        c = Fraction(value)
        if c == 0:
            return MultiPoly(vs, {})
        return MultiPoly(vs, {(0,) * len(vs): c})

    @staticmethod
    def var(name: str, variables: Iterable[str] | None = None) -> "MultiPoly":
        vs = sorted(set(variables) | {name}) if variables else [name]
        exp = tuple(1 if v == name else 0 for v in vs)
        return MultiPoly(vs, {exp: Fraction(1)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def leading(self) -> Tuple[Exponent, Fraction]:
        """Leading (exponent, coefficient) in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and coprime; 0 for zero."""
        if not self.terms:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm // gcd(den_lcm, c.denominator) * c.denominator
        return Fraction(num_gcd, den_lcm)

    def embed(self, variables: Iterable[str]) -> "MultiPoly":
        """Reinterpret over a superset of variables."""
        vs = tuple(sorted(variables))
        if vs == self.vars:
            return self
        if not set(self.vars) <= set(vs):
            raise ValueError("embedding must not drop variables")
        pos = [vs.index(v) for v in self.vars]
        terms: Dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            new = [0] * len(vs)
            for p, e in zip(pos, exp):
                new[p] = e
            terms[tuple(new)] = c
        return MultiPoly(vs, terms)

    @staticmethod
    def align(p: "MultiPoly", q: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        if p.vars == q.vars:
            return p, q
        vs = sorted(set(p.vars) | set(q.vars))
        return p.embed(vs), q.embed(vs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        p, q = MultiPoly.align(self, other)
        out = dict(p.terms)
        for exp, c in q.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        return MultiPoly(p.vars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return MultiPoly(self.vars, {})
            return MultiPoly(self.vars, {e: k * c for e, k in self.terms.items()})
        p, q = MultiPoly.align(self, other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in p.terms.items():
            for e2, c2 in q.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return MultiPoly(p.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "MultiPoly":
        return self * Fraction(c)

    def derivative(self, name: str) -> "MultiPoly":
        if name not in self.vars:
            return MultiPoly(self.vars, {})
        i = self.vars.index(name)
        out: Dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            out[tuple(new)] = c * exp[i]
        return MultiPoly(self.vars, out)

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Exact evaluation at rational values (all variables bound)."""
        vals = [Fraction(point[v]) for v in self.vars]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(vals, exp):
                if e:
                    term *= v ** e
            total += term
        return total

    def evaluate_in(self, point: Mapping[str, object], coerce: Callable) -> object:
        """Evaluation in an arbitrary coefficient domain.

        ``coerce`` maps a Fraction into the target domain; point values must
        already live there.  Used for arbitrary-precision complex evaluation.
        """
        vals = [point[v] for v in self.vars]
        total = coerce(Fraction(0))
        for exp, c in self.terms.items():
            term = coerce(c)
            for v, e in zip(vals, exp):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    # -- equality / hashing / display ---------------------------------------

    def _key(self):
        return (self.vars, tuple(sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if set(self.vars) != set(other.vars):
            p, q = MultiPoly.align(self, other)
            return p.terms == q.terms
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def to_expr_string(self) -> str:
        """Serialize in the expression grammar (identifiers, + - * / ^)."""
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            coeff = abs(c)
            if not factors:
                body = _frac_str(coeff)
            elif coeff == 1:
                body = "*".join(factors)
            else:
                body = _frac_str(coeff) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_expr_string()!r})"


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
