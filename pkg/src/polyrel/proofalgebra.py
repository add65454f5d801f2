"""Formal log-symbol model for the 4-logarithm family, verified exactly per n.

The model has basis symbols xi_1..xi_n, eta_1..eta_n ("log x_i", "log y_j"),
zeta_{lm} ("log(x_l - y_m)") and one shared symbol Z, subject to the lattice
of relations  sum_i zeta_{im} = sum_j zeta_{lj} = Z  for every row l and
column m.  The quotient is realized by eliminating the last zeta row and
column (a fixed echelon basis), so reduction to canonical coordinates is a
projection and all arithmetic is exact rational.

Tensors live in Sym^2(L) (x) Lambda^2(L); the mixed notation "A^3 ^ B" of the
weight-4 calculus means A (sym) A (x) (A ^ B) and is provided both directly
(cube_wedge) and through the symmetric-power expansion (sym3_wedge), whose
agreement is itself a verified identity.

Everything the per-n verification needs is assembled here: the formal
beta_4 images of the six argument families, the T_1..T_4 decomposition, the
bookkeeping identities, and the exact vanishing of the full combination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

from .exact import DomainError

__all__ = [
    "LogSpace",
    "FormalTensor",
    "beta4_formal",
    "derived_symbols",
    "verify_identities",
    "verify_claim_and_theorem",
    "ARG_KINDS",
]

Name = Tuple
Vec = Dict[Name, Fraction]


def _vadd(*vs: Vec) -> Vec:
    out: Vec = {}
    for v in vs:
        for k, c in v.items():
            acc = out.get(k, Fraction(0)) + c
            if acc == 0:
                out.pop(k, None)
            else:
                out[k] = acc
    return out


def _vscale(v: Vec, c) -> Vec:
    c = Fraction(c)
    if c == 0:
        return {}
    return {k: x * c for k, x in v.items()}


def _vneg(v: Vec) -> Vec:
    return {k: -x for k, x in v.items()}


class LogSpace:
    """Quotient space of formal log symbols for fixed n >= 2."""

    def __init__(self, n: int):
        if n < 2:
            raise DomainError("LogSpace needs n >= 2")
        self.n = n

    # basis constructors ----------------------------------------------------

    def xi(self, i: int) -> Vec:
        self._check(i)
        return {("xi", i): Fraction(1)}

    def eta(self, j: int) -> Vec:
        self._check(j)
        return {("eta", j): Fraction(1)}

    def Z(self) -> Vec:
        return {("Z",): Fraction(1)}

    def zeta(self, l: int, m: int) -> Vec:
        """Reduced coordinates of zeta_{lm}; the last row/column eliminate via
        the row/column relations, and the corner via both (consistently)."""
        self._check(l)
        self._check(m)
        n = self.n
        if l < n and m < n:
            return {("zeta", l, m): Fraction(1)}
        if l < n:  # m == n: row relation sum_j zeta_{lj} = Z
            out = {("Z",): Fraction(1)}
            for j in range(1, n):
                out[("zeta", l, j)] = Fraction(-1)
            return out
        if m < n:  # l == n: column relation sum_i zeta_{im} = Z
            out = {("Z",): Fraction(1)}
            for i in range(1, n):
                out[("zeta", i, m)] = Fraction(-1)
            return out
        out = {("Z",): Fraction(2 - n)}
        for i in range(1, n):
            for j in range(1, n):
                out[("zeta", i, j)] = Fraction(1)
        return out

    # derived symbols ----------------------------------------------------------

    def xi_sum(self) -> Vec:
        return _vadd(*(self.xi(i) for i in range(1, self.n + 1)))

    def eta_sum(self) -> Vec:
        return _vadd(*(self.eta(j) for j in range(1, self.n + 1)))

    def S(self) -> Vec:
        return _vadd(self.xi_sum(), _vneg(self.eta_sum()))

    def s(self, l: int, m: int) -> Vec:
        return _vadd(self.xi(l), _vneg(self.eta(m)))

    def _check(self, i: int):
        if not 1 <= i <= self.n:
            raise DomainError(f"index {i} out of range 1..{self.n}")


# ---------------------------------------------------------------------------
# Wedge / symmetric pieces and the tensor space Sym^2 (x) Lambda^2
# ---------------------------------------------------------------------------

def wedge(u: Vec, v: Vec) -> Dict[Tuple[Name, Name], Fraction]:
    out: Dict[Tuple[Name, Name], Fraction] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            if a == b:
                continue
            key, sign = ((a, b), 1) if a < b else ((b, a), -1)
            acc = out.get(key, Fraction(0)) + sign * ca * cb
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
    return out


def sym(u: Vec, v: Vec) -> Dict[Tuple[Name, Name], Fraction]:
    out: Dict[Tuple[Name, Name], Fraction] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            key = (a, b) if a <= b else (b, a)
            acc = out.get(key, Fraction(0)) + ca * cb
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
    return out


def lam2_add(*ws):
    out = {}
    for w in ws:
        for k, c in w.items():
            acc = out.get(k, Fraction(0)) + c
            if acc == 0:
                out.pop(k, None)
            else:
                out[k] = acc
    return out


class FormalTensor:
    """Sparse element of Sym^2(L) (x) Lambda^2(L) with rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Dict[Tuple, Fraction] | None = None):
        self.coords = {k: c for k, c in (coords or {}).items() if c != 0}

    @staticmethod
    def product(sym_part: Dict, wedge_part: Dict) -> "FormalTensor":
        out: Dict[Tuple, Fraction] = {}
        for sk, sc in sym_part.items():
            for wk, wc in wedge_part.items():
                key = (sk, wk)
                acc = out.get(key, Fraction(0)) + sc * wc
                if acc == 0:
                    out.pop(key, None)
                else:
                    out[key] = acc
        return FormalTensor(out)

    @staticmethod
    def sym2_wedge(a: Vec, b: Vec, c: Vec, d: Vec) -> "FormalTensor":
        """a (sym) b (x) (c ^ d)."""
        return FormalTensor.product(sym(a, b), wedge(c, d))

    @staticmethod
    def cube_wedge(a: Vec, b: Vec) -> "FormalTensor":
        """The mixed notation a^3 ^ b  :=  a (sym) a (x) (a ^ b)."""
        return FormalTensor.sym2_wedge(a, a, a, b)

    @staticmethod
    def sym3_wedge(a: Vec, b: Vec, c: Vec, d: Vec) -> "FormalTensor":
        """Image of the Sym^3 monomial a.b.c (x) d under the conversion map
        x.y.z (x) w  ->  (xy (x) z^w + xz (x) y^w + yz (x) x^w)/3."""
        total = FormalTensor.sym2_wedge(a, b, c, d)
        total = total + FormalTensor.sym2_wedge(a, c, b, d)
        total = total + FormalTensor.sym2_wedge(b, c, a, d)
        return total.scale(Fraction(1, 3))

    def __add__(self, other: "FormalTensor") -> "FormalTensor":
        out = dict(self.coords)
        for k, c in other.coords.items():
            acc = out.get(k, Fraction(0)) + c
            if acc == 0:
                out.pop(k, None)
            else:
                out[k] = acc
        return FormalTensor(out)

    def __sub__(self, other: "FormalTensor") -> "FormalTensor":
        return self + other.scale(-1)

    def scale(self, c) -> "FormalTensor":
        c = Fraction(c)
        if c == 0:
            return FormalTensor()
        return FormalTensor({k: x * c for k, x in self.coords.items()})

    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalTensor):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def kinds_per_coord(self) -> List[Tuple[str, ...]]:
        out = []
        for (sk, wk) in self.coords:
            names = (*sk, *wk)
            out.append(tuple(sorted({name[0] for name in names})))
        return out

    def is_pure_xi_eta(self) -> bool:
        """Every coordinate touches only xi-symbols or only eta-symbols."""
        return all(kinds in (("xi",), ("eta",)) for kinds in self.kinds_per_coord())

    def __repr__(self):
        return f"FormalTensor({len(self.coords)} coords)"


# ---------------------------------------------------------------------------
# beta_4 images of the argument families
# ---------------------------------------------------------------------------

ARG_KINDS = (
    "X/Y-ratio",
    "(1-x^-1)/(1-y^-1)",
    "(1-x)/(1-y)",
    "x_l/y_m",
    "1-1/x_l",
    "1-1/y_m",
)


def _beta4_pair(space: LogSpace, kind: str, l: int, m: int) -> Tuple[Vec, Vec]:
    """(log of the argument, log of 1 - argument), modulo torsion."""
    n = space.n
    if kind == "X/Y-ratio":
        return space.S(), _vadd(space.Z(), _vneg(space.eta_sum()))
    if kind == "(1-x)/(1-y)":
        v = _vadd(space.S(), _vscale(space.s(l, m), -(n - 1)))
        w = _vadd(space.zeta(l, m), _vneg(space.eta_sum()), _vscale(space.eta(m), n - 1))
        return v, w
    if kind == "(1-x^-1)/(1-y^-1)":
        v = _vadd(space.S(), _vscale(space.s(l, m), -n))
        w = _vadd(
            space.zeta(l, m),
            _vneg(space.xi(l)),
            _vneg(space.eta_sum()),
            _vscale(space.eta(m), n - 1),
        )
        return v, w
    if kind == "x_l/y_m":
        return space.s(l, m), _vadd(space.zeta(l, m), _vneg(space.eta(m)))
    if kind == "1-1/x_l":
        v = _vadd(space.xi_sum(), _vscale(space.xi(l), -n))
        return v, _vneg(space.xi(l))
    if kind == "1-1/y_m":
        v = _vadd(space.eta_sum(), _vscale(space.eta(m), -n))
        return v, _vneg(space.eta(m))
    raise DomainError(f"unknown argument kind {kind!r}")


def beta4_formal(kind: str, l: int, m: int, n: int) -> FormalTensor:
    """Exact formal beta_4 image of one argument of the weight-4 family.

    Uses the log assignments log(1-x_l) = xi - (n-1) xi_l,
    log(1-1/x_l) = xi - n xi_l, log(x_l - y_m) = zeta_{lm} (mod torsion).
    """
    space = LogSpace(n)
    v, w = _beta4_pair(space, kind, l, m)
    return FormalTensor.sym2_wedge(v, v, v, w)


def derived_symbols(n: int) -> dict:
    """The shorthand vectors: xi, eta, S, s_{lm} and Z, in quotient coordinates."""
    space = LogSpace(n)
    return {
        "xi": space.xi_sum(),
        "eta": space.eta_sum(),
        "S": space.S(),
        "s": {(l, m): space.s(l, m) for l in range(1, n + 1) for m in range(1, n + 1)},
        "Z": space.Z(),
    }


# ---------------------------------------------------------------------------
# T-terms
# ---------------------------------------------------------------------------

def _kronecker_wedge(space: LogSpace, l: int, m: int) -> Dict:
    """sum_{i,j} (2-n)^(delta_il + delta_jm) xi_i ^ eta_j."""
    n = space.n
    parts = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c = Fraction(2 - n) ** ((1 if i == l else 0) + (1 if j == m else 0))
            parts.append({k: c * x for k, x in wedge(space.xi(i), space.eta(j)).items()})
    return lam2_add(*parts)


def _t_terms(space: LogSpace, l: int, m: int) -> Tuple[FormalTensor, ...]:
    n = space.n
    S = space.S()
    s = space.s(l, m)
    z = space.zeta(l, m)
    a1 = _vadd(S, _vscale(s, -(n - 1)))
    a2 = _vadd(S, _vscale(s, -n))
    t1 = (
        FormalTensor.sym3_wedge(S, S, S, z).scale(2 * n - 1)
        + FormalTensor.sym3_wedge(S, S, s, z).scale(-3 * n * (n - 1))
        + FormalTensor.sym3_wedge(s, s, s, z).scale(n * n * (n - 1) ** 2)
    )
    kron = _kronecker_wedge(space, l, m)
    sym_mix = {}
    for key, c in sym(a1, a1).items():
        sym_mix[key] = sym_mix.get(key, Fraction(0)) + n * n * c
    for key, c in sym(a2, a2).items():
        acc = sym_mix.get(key, Fraction(0)) - (n - 1) ** 2 * c
        if acc == 0:
            sym_mix.pop(key, None)
        else:
            sym_mix[key] = acc
    t2 = FormalTensor.product(sym_mix, kron).scale(-1)
    t3 = FormalTensor.product(sym(a2, a2), wedge(space.eta(m), space.xi(l))).scale((n - 1) ** 2)
    t4_wedge = lam2_add(
        wedge(space.xi_sum(), space.xi(l)), wedge(space.eta(m), space.eta_sum())
    )
    t4 = FormalTensor.product(sym(a2, a2), t4_wedge).scale((n - 1) ** 2)
    return t1, t2, t3, t4


# ---------------------------------------------------------------------------
# Verification drivers
# ---------------------------------------------------------------------------

def verify_identities(n: int, altered_eq15: bool = False) -> Dict[str, bool]:
    """Exact expansion of the bookkeeping identities in the quotient space.

    ``altered_eq15`` switches the distribution identity's base from (2-n) to
    (3-n): the documented negative control, which must fail.
    """
    space = LogSpace(n)
    report: Dict[str, bool] = {}

    ok = True
    for l in range(1, n + 1):
        for m in range(1, n + 1):
            lhs = wedge(
                _vadd(space.xi_sum(), _vscale(space.xi(l), -(n - 1))),
                _vadd(space.eta_sum(), _vscale(space.eta(m), -(n - 1))),
            )
            rhs = _kronecker_wedge(space, l, m)
            ok = ok and lhs == rhs
    report["eq11_kronecker_wedge"] = ok

    z_vec = space.Z()
    ok = True
    for m in range(1, n + 1):
        ok = ok and _vadd(*(space.zeta(i, m) for i in range(1, n + 1))) == z_vec
    for l in range(1, n + 1):
        ok = ok and _vadd(*(space.zeta(l, j) for j in range(1, n + 1))) == z_vec
    total = _vadd(*(space.zeta(i, j) for i in range(1, n + 1) for j in range(1, n + 1)))
    ok = ok and total == _vscale(z_vec, n)
    report["eq12_row_column_sums"] = ok

    s_total = _vadd(*(space.s(i, j) for i in range(1, n + 1) for j in range(1, n + 1)))
    report["eq13_S_as_average"] = _vscale(s_total, Fraction(1, n)) == space.S()

    left = _vadd(*(
        _vadd(space.xi_sum(), _vscale(space.xi(m), -n)) for m in range(1, n + 1)
    ))
    right = _vadd(*(
        _vadd(space.eta_sum(), _vscale(space.eta(l), -n)) for l in range(1, n + 1)
    ))
    report["eq14_centered_sums_vanish"] = not left and not right

    base = Fraction(3 - n) if altered_eq15 else Fraction(2 - n)
    ok = True
    for l in range(1, n + 1):
        for m in range(1, n + 1):
            double = sum(
                base ** ((1 if i == l else 0) + (1 if j == m else 0))
                for i in range(1, n + 1)
                for j in range(1, n + 1)
            )
            single = sum(base ** (1 if i == l else 0) for i in range(1, n + 1))
            ok = ok and double == 1 and single == 1
    report["eq15_distribution_scalars"] = ok

    ok = True
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            acc: Vec = {}
            for l in range(1, n + 1):
                for m in range(1, n + 1):
                    c = Fraction(2 - n) ** ((1 if i == l else 0) + (1 if j == m else 0))
                    acc = _vadd(acc, _vscale(space.s(l, m), c))
            expected = _vadd(space.S(), _vscale(space.s(i, j), -(n - 1)))
            ok = ok and acc == expected
    report["eq16_weighted_s_sum"] = ok

    # conversion check between the two views of the mixed cube notation
    S, sv = space.S(), space.s(1, min(2, n))
    z = space.zeta(1, 1)
    direct = FormalTensor.cube_wedge(_vadd(S, _vscale(sv, -3)), z)
    expanded = (
        FormalTensor.sym3_wedge(S, S, S, z)
        + FormalTensor.sym3_wedge(S, S, sv, z).scale(-9)
        + FormalTensor.sym3_wedge(S, sv, sv, z).scale(27)
        + FormalTensor.sym3_wedge(sv, sv, sv, z).scale(-27)
    )
    report["cube_views_agree"] = direct == expanded

    return report


def verify_claim_and_theorem(n: int, perturb_coefficient: bool = False) -> Dict[str, bool]:
    """The per-(l,m) T-decomposition, the claim's aggregation, and the exact
    vanishing of the full weight-4 combination.

    ``perturb_coefficient`` replaces n(n-2) by n(n-3) in the full
    combination: the documented negative control, which must fail.
    """
    space = LogSpace(n)
    report: Dict[str, bool] = {}

    sum_t = [FormalTensor() for _ in range(4)]
    decomposition_ok = True
    for l in range(1, n + 1):
        for m in range(1, n + 1):
            ts = _t_terms(space, l, m)
            lhs = (
                beta4_formal("(1-x)/(1-y)", l, m, n).scale(n * n)
                - beta4_formal("(1-x^-1)/(1-y^-1)", l, m, n).scale((n - 1) ** 2)
            )
            total = ts[0] + ts[1] + ts[2] + ts[3]
            decomposition_ok = decomposition_ok and lhs == total
            for i in range(4):
                sum_t[i] = sum_t[i] + ts[i]
    report["t_decomposition"] = decomposition_ok

    S = space.S()
    Z = space.Z()
    xi_eta = lam2_add(*(
        wedge(space.xi(l), space.eta(m))
        for l in range(1, n + 1)
        for m in range(1, n + 1)
    ))
    first_line = (
        FormalTensor.cube_wedge(S, Z).scale(-1) + FormalTensor.product(sym(S, S), xi_eta)
    ).scale(n * (n - 2))
    second_line = FormalTensor()
    for l in range(1, n + 1):
        for m in range(1, n + 1):
            s = space.s(l, m)
            second_line = second_line + FormalTensor.cube_wedge(s, space.zeta(l, m))
            second_line = second_line - FormalTensor.product(
                sym(s, s), wedge(space.xi(l), space.eta(m))
            )
    second_line = second_line.scale(n * n * (n - 1) ** 2)
    report["claim_first_lines"] = (sum_t[0] + sum_t[1] + sum_t[2]) == first_line + second_line

    # aggregation noted in the proof: the first two pieces of sum T_1 combine
    first_two = FormalTensor()
    for l in range(1, n + 1):
        for m in range(1, n + 1):
            z = space.zeta(l, m)
            first_two = first_two + FormalTensor.sym3_wedge(S, S, S, z).scale(2 * n - 1)
            first_two = first_two + FormalTensor.sym3_wedge(
                S, S, space.s(l, m), z
            ).scale(-3 * n * (n - 1))
    report["t1_first_two_aggregate"] = first_two == FormalTensor.cube_wedge(S, Z).scale(
        -n * (n - 2)
    )

    s_zeta = lam2_add(*(
        wedge(space.s(l, m), space.zeta(l, m))
        for l in range(1, n + 1)
        for m in range(1, n + 1)
    ))
    report["s_wedge_zeta_aggregates"] = s_zeta == wedge(S, Z)

    one_var = FormalTensor()
    for i in range(1, n + 1):
        one_var = one_var + beta4_formal("1-1/x_l", i, i, n)
        one_var = one_var - beta4_formal("1-1/y_m", i, i, n)
    report["t4_matches_beta4"] = sum_t[3] == one_var.scale(-n * (n - 1) ** 2)
    report["t4_pure"] = sum_t[3].is_pure_xi_eta()

    lead = n * (n - 3) if perturb_coefficient else n * (n - 2)
    combo = beta4_formal("X/Y-ratio", 1, 1, n).scale(lead)
    for l in range(1, n + 1):
        for m in range(1, n + 1):
            combo = combo - beta4_formal("(1-x^-1)/(1-y^-1)", l, m, n).scale((n - 1) ** 2)
            combo = combo + beta4_formal("(1-x)/(1-y)", l, m, n).scale(n * n)
            combo = combo - beta4_formal("x_l/y_m", l, m, n).scale(n * n * (n - 1) ** 2)
    combo = combo + one_var.scale(n * (n - 1) ** 2)
    report["theorem_zero"] = combo.is_zero()
    return report


def report_json(n: int) -> dict:
    """JSON report per the external interface: identity and claim verdicts."""
    identities = verify_identities(n)
    claim = verify_claim_and_theorem(n)
    return {
        "n": n,
        "identities": identities,
        "claim_parts": {k: v for k, v in claim.items() if k != "theorem_zero"},
        "theorem_zero": claim["theorem_zero"],
    }
