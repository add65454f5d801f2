"""Acceptance suite and machine-readable run reports.

Each criterion function returns a dict with a stable shape: id, name,
passed, details, and seconds.  run_acceptance executes them all (optionally
in a thread pool; every criterion owns pre-split seeds, so scheduling cannot
change any verdict) and assembles a RunReport whose JSON is byte-identical
across runs with the same seed once timings are stripped.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

from . import __version__
from .catalog import XI7_BLOCKS, a_k_sets, get_equation, theta, weight_wt
from .checks import (
    check_22_to_34_substitution,
    check_34_from_wojtkowiak,
    check_gamma21_identity,
    check_Gprime_correspondence,
    check_q_equations,
    class_vector_with_reps,
    group_generators,
)
from .criterion import DualFunctional, beta_pairing, kernel_test, log_vector
from .exact import SplitMix64, random_rational
from .formal import FormalSum, group_closure, inversion_class_key, orbit
from .numeric import PrecisionPolicy, cl_m
from .proofalgebra import verify_claim_and_theorem, verify_identities
from .ratfunc import RatFunc
from .verify import (
    random_phi,
    sample_complex,
    verify_dilog_general,
    verify_fourlog_numeric,
    verify_numeric,
    verify_numeric_sum,
    verify_trilog_theorem,
    verify_wojtkowiak,
)

REPORT_SCHEMA = "polyrel/report/1"


@dataclass
class RunReport:
    command: str
    seed: int
    checks: List[dict] = field(default_factory=list)
    policy: dict = field(default_factory=dict)

    def all_passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_json(self, include_timings: bool = True) -> dict:
        checks = []
        for c in self.checks:
            c = dict(c)
            if not include_timings:
                c.pop("seconds", None)
            checks.append(c)
        return {
            "schema": REPORT_SCHEMA,
            "version": __version__,
            "command": self.command,
            "seed": self.seed,
            "policy": self.policy,
            "checks": checks,
            "all_passed": self.all_passed(),
        }

    def render_json(self, include_timings: bool = True) -> str:
        return json.dumps(self.to_json(include_timings), indent=2, sort_keys=True)

    def render_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c["passed"] else "FAIL"
            extra = " (expected failure, see notes)" if c.get("expected_failure") else ""
            lines.append(f"[{status}] {c['name']} ({c.get('seconds', 0):.1f}s){extra}")
        summary = "all checks passed" if self.all_passed() else "some checks FAILED"
        lines.append(f"-- {summary} --")
        return "\n".join(lines)


def _wrap(id_: str, name: str, fn: Callable[[], dict]) -> dict:
    start = time.time()
    try:
        out = fn()
    except Exception as exc:  # pragma: no cover - surfaced to the report
        out = {"passed": False, "details": {"error": f"{type(exc).__name__}: {exc}"}}
    out.setdefault("details", {})
    entry = {
        "id": id_,
        "name": name,
        "passed": bool(out["passed"]),
        "details": out["details"],
        "seconds": round(time.time() - start, 3),
    }
    if out.get("expected_failure"):
        entry["expected_failure"] = True
    return entry


# ---------------------------------------------------------------------------
# Acceptance criteria
# ---------------------------------------------------------------------------

def criterion_1_five_term(seed: int, points: int = 100) -> dict:
    policy = PrecisionPolicy(50)
    verdict = verify_numeric_sum(
        get_equation("five_term").sum, 2, points=points, policy=policy, seed=seed
    )
    return {"passed": verdict.passed, "details": verdict.to_json()}


def criterion_2_goncharov22(seed: int, points: int = 50) -> dict:
    eq = get_equation("goncharov22")
    kv = kernel_test(eq.sum, 3, trials=10, functionals=5, seed=seed)
    nv = verify_numeric_sum(eq.sum, 3, points=points, policy=PrecisionPolicy(50), seed=seed)
    return {
        "passed": kv.passed and nv.passed,
        "details": {"kernel": kv.to_json(), "numeric": nv.to_json()},
    }


def criterion_3_symmetric_equivalences(seed: int) -> dict:
    gens = group_generators()
    details: Dict[str, object] = {}
    alpha_G = group_closure(gens["alpha"], bound=512)
    t_G = group_closure(gens["t"], bound=512)
    yz_G = group_closure(gens["yz"], bound=256)
    details["alpha_group_order"] = len(alpha_G)
    details["t_group_order"] = len(t_G)
    details["yz_group_order"] = len(yz_G)

    y1 = RatFunc.var("y1")
    from .checks import _triple_product

    prod = _triple_product()
    details["orbit_y1_plain"] = len(orbit(y1, yz_G))
    details["orbit_product_plain"] = len(orbit(prod, yz_G))
    # inversion collapses the orbits to 6 and 16 only after the A/B
    # parametrization; the substituted class counts live in the G' check below
    details["orbit_y1_up_to_inversion_yz"] = len(orbit(y1, yz_G, up_to_inversion=True))

    # the order-192 action partitions both presentations into 16 + 6 classes
    a1, a3 = RatFunc.var("a1"), RatFunc.var("a3")
    beta1 = 1 - a1 + a1 * a3
    g22 = get_equation("goncharov22")
    orb16 = orbit(1 / a1, alpha_G, up_to_inversion=True)
    orb6 = orbit(beta1 / a3, alpha_G, up_to_inversion=True)
    g22_classes = {
        inversion_class_key(a) for _, a in g22.sum if not a.is_constant()
    }
    k16 = {inversion_class_key(g) for g in orb16}
    k6 = {inversion_class_key(g) for g in orb6}
    v22 = class_vector_with_reps(g22.sum)
    details["alpha_partition"] = (
        len(orb16) == 16
        and len(orb6) == 6
        and (k16 | k6) == g22_classes
        and not (k16 & k6)
        and all(v22[k][0] == 1 for k in k16)
        and all(v22[k][0] == -1 for k in k6)
    )

    t1, t2 = RatFunc.var("t1"), RatFunc.var("t2")
    sym = get_equation("goncharov22_sym")
    orb16t = orbit(t1, t_G, up_to_inversion=True)
    orb6t = orbit(t1 * t2, t_G, up_to_inversion=True)
    sym_classes = {
        inversion_class_key(a) for _, a in sym.sum if not a.is_constant()
    }
    k16t = {inversion_class_key(g) for g in orb16t}
    k6t = {inversion_class_key(g) for g in orb6t}
    vsym = class_vector_with_reps(sym.sum)
    details["t_partition"] = (
        len(orb16t) == 16
        and len(orb6t) == 6
        and (k16t | k6t) == sym_classes
        and not (k16t & k6t)
        and all(vsym[k][0] == 1 for k in k16t)
        and all(vsym[k][0] == -1 for k in k6t)
    )

    gp = check_Gprime_correspondence()
    details["gprime"] = gp.details
    passed = (
        len(alpha_G) == 192
        and len(t_G) == 192
        and len(yz_G) == 96
        and details["orbit_y1_plain"] == 12
        and details["orbit_product_plain"] == 32
        and details["orbit_y1_up_to_inversion_yz"] == 6
        and gp.details["classes_up_to_inversion_short"] == 6
        and gp.details["classes_up_to_inversion_long"] == 16
        and details["alpha_partition"]
        and details["t_partition"]
        and gp.passed
    )
    return {"passed": passed, "details": details}


def criterion_4_q_equations(seed: int) -> dict:
    rep = check_q_equations()
    return {"passed": rep.passed, "details": rep.details}


def criterion_5_relation34(seed: int, points: int = 30) -> dict:
    eq = get_equation("relation34")
    kv = kernel_test(eq.sum, 3, trials=8, functionals=4, seed=seed)
    nv = verify_numeric_sum(eq.sum, 3, points=points, policy=PrecisionPolicy(50), seed=seed)
    wojt = check_34_from_wojtkowiak()
    sub = check_22_to_34_substitution()
    return {
        "passed": kv.passed and nv.passed and wojt.passed and sub.passed,
        "details": {
            "kernel": kv.to_json(),
            "numeric": nv.to_json(),
            "wojt_34_match": wojt.details,
            "sub_22_to_34": sub.details,
        },
    }


def criterion_6_gamma21(seed: int) -> dict:
    rep = check_gamma21_identity(seed=seed)
    clause_classes = (
        rep.details["rhs_nonconstant_classes"] == 21
        and rep.details["rhs_coefficients_in_pm1_pm2"]
    )
    out = {
        "passed": rep.passed and clause_classes,
        "details": dict(rep.details, class_clause=clause_classes),
    }
    if clause_classes and not rep.passed:
        out["expected_failure"] = True
    return out


def criterion_7_preimage_families(seed: int) -> dict:
    policy = PrecisionPolicy(50, t_slack=20)  # tolerance 1e-30 (root noise budget)
    ctx = policy.context
    rng = SplitMix64(seed).split("crit7")
    z = RatFunc.var("z")
    phis = {
        "z(1-z)": z * (1 - z),
        "z^2": z * z,
        "random_cubic": random_phi(rng.split("cubic")),
    }
    details = {}
    passed = True
    for name, phi in phis.items():
        prng = rng.split(name)
        pts = [sample_complex(prng, ctx) for _ in range(10)]
        d1 = verify_dilog_general(phi, pts[0], pts[1], pts[2], pts[3], policy)
        d2 = verify_trilog_theorem(
            phi, pts[0:2], pts[2:4], pts[4:6], pts[6:8], policy
        )
        d3 = verify_wojtkowiak(phi, pts[0], pts[1], pts[2], pts[8], pts[9], policy)
        details[name] = {
            "dilog_general": d1.to_json(),
            "trilog_theorem": d2.to_json(),
            "wojtkowiak": d3.to_json(),
        }
        passed = passed and d1.passed and d2.passed and d3.passed
    from .ratfunc import INFINITY

    special = verify_dilog_general(
        z * (1 - z), policy.complex(complex(0.4, 0.7)), 1, 0, INFINITY, policy
    )
    details["five_term_special_case"] = special.to_json()
    passed = passed and special.passed
    return {"passed": passed, "details": details}


def criterion_8_fourlog(seed: int, points: int = 20, n_max: int = 5) -> dict:
    policy = PrecisionPolicy(60, t_slack=20)  # tolerance 1e-40
    details = {}
    passed = True
    for n in range(2, n_max + 1):
        v = verify_fourlog_numeric(n, points=points, policy=policy, seed=seed)
        details[f"numeric_n{n}"] = v.to_json()
        passed = passed and v.passed
    for n in range(2, 7):
        ids = verify_identities(n)
        claim = verify_claim_and_theorem(n)
        ok = all(ids.values()) and all(claim.values())
        details[f"exact_n{n}"] = {"identities": ids, "claim": claim}
        passed = passed and ok
    return {"passed": passed, "details": details}


def criterion_9_xi7(seed: int, points: int = 10) -> dict:
    details: Dict[str, object] = {}
    explicit = get_equation("xi7_explicit")
    symmetric = get_equation("xi7_symmetric")

    details["term_count"] = explicit.sum.count_distinct_up_to_inversion()

    from .catalog import _block_sum

    weights_ok = True
    multiplicity_ok = True
    for first, _, (a, b, c, d) in XI7_BLOCKS:
        weights_ok = weights_ok and weight_wt(a, b) == weight_wt(c, d)
        # every argument class inside the block occurs with one shared
        # multiplicity, equal to the denominator of the first coefficient factor
        block = FormalSum(_block_sum(a, b, c, d))
        mults: Dict[str, Fraction] = {}
        for coeff, arg in block:
            key = inversion_class_key(arg)
            mults[key] = mults.get(key, Fraction(0)) + coeff
        multiplicity_ok = multiplicity_ok and {int(m) for m in mults.values()} == {
            first.denominator
        }
    details["weight_balance"] = weights_ok
    details["multiplicity_rule"] = multiplicity_ok

    details["sixty_identity"] = (
        explicit.sum.scale(60).inversion_class_vector()
        == symmetric.sum.inversion_class_vector()
    )

    kv = kernel_test(
        explicit.sum, 7, trials=8, functionals=3, seed=seed, specialization_height=7
    )
    details["kernel"] = kv.to_json()
    kv_sym = kernel_test(
        symmetric.sum, 7, trials=3, functionals=2, seed=seed + 1, specialization_height=7
    )
    details["kernel_symmetric"] = kv_sym.to_json()

    nv = verify_numeric(explicit, points=points, policy=PrecisionPolicy(60), seed=seed)
    details["numeric"] = nv.to_json()

    theta_ok = True
    for a in range(-4, 5):
        for b in range(-4, 5):
            image = theta((a, b, -a - b))
            theta_ok = theta_ok and image[0] == image[1]
    details["theta_maps_sum_zero_to_repeated"] = theta_ok
    sets = a_k_sets()
    details["a_k_sets_match"] = (
        sorted(sets["A1"])
        == sorted(
            {(1, 1, -2), (-1, -1, 2), (-1, -1, 1), (1, 1, -1), (0, 0, 1), (0, 0, -1)}
        )
        and sorted(sets["A2"]) == sorted({(2, 2, -3), (-1, -1, 3), (-1, -1, 0)})
        and sorted(sets["A3"])
        == sorted(
            {(-1, -1, -1), (-1, -1, 4), (-2, -2, 5), (-2, -2, 1), (3, 3, -4), (3, 3, -5)}
        )
    )

    passed = (
        details["term_count"] == 274
        and weights_ok
        and multiplicity_ok
        and details["sixty_identity"]
        and kv.passed
        and kv_sym.passed
        and nv.passed
        and theta_ok
        and details["a_k_sets_match"]
    )
    return {"passed": passed, "details": details}


def criterion_10_invariants(seed: int, points: int = 50) -> dict:
    policy = PrecisionPolicy(50)
    ctx = policy.context
    root = SplitMix64(seed)
    tol = policy.tolerance
    details = {}
    passed = True
    for m in range(2, 8):
        worst = ctx.mpf(0)
        rng = root.split("inv", m)
        for _ in range(points):
            zv = sample_complex(rng, ctx)
            sign = (-1) ** (m - 1)
            worst = max(worst, abs(cl_m(m, zv, policy) - sign * cl_m(m, 1 / zv, policy)))
            worst = max(
                worst, abs(cl_m(m, ctx.conj(zv), policy) - sign * cl_m(m, zv, policy))
            )
            worst = max(
                worst,
                abs(
                    cl_m(m, zv * zv, policy)
                    - 2 ** (m - 1) * (cl_m(m, zv, policy) + cl_m(m, -zv, policy))
                ),
            )
        details[f"m{m}_worst"] = float(worst)
        passed = passed and worst < tol

    # beta-pairing antisymmetry and linearity, exact
    rng = root.split("beta")
    exact_ok = True
    for _ in range(20):
        x = random_rational(25, rng, {Fraction(-1)})
        y = random_rational(25, rng, {Fraction(-1), x})
        support = set()
        for v in (x, 1 - x, y, 1 - y):
            support.update(log_vector(v).support())
        support = tuple(sorted(support))
        fplit = rng.split("f", int(x.numerator))
        draw = lambda: DualFunctional(
            {p: Fraction(fplit.next_int(-20, 20)) for p in support}
        )
        th, ph, ps = draw(), draw(), draw()
        a = beta_pairing([(Fraction(1), x)], 4, th, ph, ps)
        b = beta_pairing([(Fraction(1), y)], 4, th, ph, ps)
        combo = beta_pairing([(Fraction(5), x), (Fraction(-3), y)], 4, th, ph, ps)
        exact_ok = exact_ok and combo == 5 * a - 3 * b
        exact_ok = exact_ok and beta_pairing([(Fraction(1), x)], 4, th, ps, ph) == -a
    details["beta_pairing_exact_properties"] = exact_ok
    return {"passed": passed and exact_ok, "details": details}


def criterion_11_negative_controls(seed: int) -> dict:
    details = {}
    policy = PrecisionPolicy(40)

    def perturb_and_test(name: str, weight: int, spec_height: int):
        eq = get_equation(name)
        first_arg = eq.sum.terms[0][1]
        perturbed = eq.sum + FormalSum.single(first_arg, 1)
        kv = kernel_test(
            perturbed,
            weight,
            trials=4,
            functionals=3,
            seed=seed,
            specialization_height=spec_height,
        )
        nv = verify_numeric_sum(perturbed, weight, points=4, policy=policy, seed=seed)
        worst = 0.0
        if nv.witness:
            worst = nv.witness.get("value", 0.0)
        return {
            "kernel_fails": not kv.passed,
            "kernel_witness": kv.witness is not None,
            "numeric_fails": not nv.passed,
            "numeric_value": worst,
            "numeric_above_1e-10": (not nv.passed) and worst > 1e-10,
        }

    details["xi7_perturbed"] = perturb_and_test("xi7_explicit", 7, 7)
    details["goncharov22_perturbed"] = perturb_and_test("goncharov22", 3, 40)
    passed = all(
        d["kernel_fails"] and d["kernel_witness"] and d["numeric_above_1e-10"]
        for d in details.values()
    )
    return {"passed": passed, "details": details}


CRITERIA: List = [
    ("1", "five-term relation numeric (100 points, P=50)", criterion_1_five_term),
    ("2", "22-term relation kernel + numeric", criterion_2_goncharov22),
    ("3", "symmetric-form equivalences and group orbits", criterion_3_symmetric_equivalences),
    ("4", "q-equations and squares-level description", criterion_4_q_equations),
    ("5", "34-term relation and its two structural checks", criterion_5_relation34),
    ("6", "21-term symmetrization (three-level)", criterion_6_gamma21),
    ("7", "dilog/trilog preimage families", criterion_7_preimage_families),
    ("8", "weight-4 family: numeric n=2..5 and exact n=2..6", criterion_8_fourlog),
    ("9", "weight-7 equation: counts, identities, kernel, numeric", criterion_9_xi7),
    ("10", "CL_m invariant suites and pairing properties", criterion_10_invariants),
    ("11", "negative controls (perturbed coefficients)", criterion_11_negative_controls),
]


def run_acceptance(
    seed: int = 0,
    jobs: int = 1,
    only: List[str] | None = None,
) -> RunReport:
    """Run the full acceptance suite (or a subset of criterion ids)."""
    report = RunReport(command="report --all", seed=seed)
    selected = [c for c in CRITERIA if only is None or c[0] in only]

    def run_one(entry):
        cid, name, fn = entry
        return _wrap(cid, name, lambda: fn(SplitMix64(seed).split("criterion", cid).seed))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_one, selected))
    else:
        results = [run_one(e) for e in selected]
    report.checks.extend(results)
    return report
