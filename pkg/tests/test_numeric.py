from fractions import Fraction

import mpmath
import pytest

from polyrel.exact import DomainError, SplitMix64
from polyrel.numeric import (
    BranchAmbiguityError,
    PoleError,
    PrecisionPolicy,
    bernoulli,
    cl_apply,
    cl_m,
    li_m,
    poly_roots,
    zeta_int,
)
from polyrel.ratfunc import INFINITY

POLICY = PrecisionPolicy(50)
CTX = POLICY.context


def close(a, b, digits=45):
    return abs(a - b) < CTX.mpf(10) ** (-digits)


# -- Bernoulli ---------------------------------------------------------------

def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_odd_vanish():
    assert all(bernoulli(r) == 0 for r in range(3, 31, 2))


def test_bernoulli_recurrence_oracle():
    # sum_k C(r+1, k) B_k = 0 for r >= 1
    from math import comb

    for r in range(1, 20):
        assert sum(comb(r + 1, k) * bernoulli(k) for k in range(r + 1)) == 0


# -- zeta ----------------------------------------------------------------------

def test_zeta_2_closed_form():
    assert close(zeta_int(2, POLICY), CTX.pi ** 2 / 6, 55)


def test_zeta_4_closed_form():
    assert close(zeta_int(4, POLICY), CTX.pi ** 4 / 90, 55)


def test_zeta_3_frozen_digits():
    # Apery's constant, frozen from an independent evaluation
    expected = CTX.mpf("1.2020569031595942853997381615114499907649862923405")
    assert close(zeta_int(3, POLICY), expected, 48)


def test_zeta_matches_mpmath_oracle():
    mpmath.mp.dps = 60
    for k in range(2, 12):
        ref = CTX.mpf(mpmath.nstr(mpmath.zeta(k), 55))
        assert close(zeta_int(k, POLICY), ref, 50)


def test_zeta_domain():
    with pytest.raises(DomainError):
        zeta_int(1, POLICY)


# -- Li -------------------------------------------------------------------------

def test_li1_is_log():
    assert close(li_m(1, 0.5, POLICY), CTX.log(2))


def test_li2_at_one_is_zeta2():
    assert close(li_m(2, 1, POLICY), CTX.pi ** 2 / 6)


def test_li2_half_series_oracle():
    # direct series at 1/2, summed independently
    s = CTX.mpf(0)
    for n in range(1, 200):
        s += CTX.mpf(1) / (CTX.mpf(2) ** n * n * n)
    assert close(li_m(2, Fraction(1, 2), POLICY), s)
    closed = CTX.pi ** 2 / 12 - CTX.log(2) ** 2 / 2
    assert close(li_m(2, Fraction(1, 2), POLICY), closed)


def test_li_branch_cut_error():
    with pytest.raises(BranchAmbiguityError):
        li_m(2, 1.5, POLICY)
    with pytest.raises(PoleError):
        li_m(1, 1, POLICY)


@pytest.mark.parametrize("m", range(1, 8))
def test_li_against_mpmath(m):
    mpmath.mp.dps = 70
    rng = SplitMix64(90 + m)
    for _ in range(8):
        re = rng.next_int(-300, 300) / 100
        im = rng.next_int(-300, 300) / 100 or 0.17
        z = complex(re, im)
        mine = li_m(m, z, POLICY)
        ref = mpmath.polylog(m, mpmath.mpc(z))
        got = abs(complex(mine.real, mine.imag) - complex(ref))
        assert got < 1e-12  # float-level cross-check; digit-level below
        ref_hi = CTX.mpc(mpmath.nstr(ref.real, 58), mpmath.nstr(ref.imag, 58))
        assert abs(mine - ref_hi) < CTX.mpf(10) ** -50


# -- CL ---------------------------------------------------------------------------

def test_cl2_real_axis_vanishes():
    for q in (Fraction(3, 7), Fraction(-5, 2), Fraction(9, 4)):
        assert abs(cl_m(2, q, POLICY)) < POLICY.tolerance


def test_cl2_at_i_is_catalan():
    catalan = CTX.mpf("0.91596559417721901505460351493238411077414937428167")
    assert close(cl_m(2, 1j, POLICY), catalan, 48)


def test_cl3_at_one_is_zeta3():
    assert close(cl_m(3, 1, POLICY), zeta_int(3, POLICY))


def test_cl_even_at_one_is_zero():
    assert cl_m(4, 1, POLICY) == 0


def test_cl_continuity_values():
    assert cl_m(5, 0, POLICY) == 0
    assert cl_m(6, INFINITY, POLICY) == 0


def test_cl_continuity_by_approach():
    # approach 0, 1, infinity along a ray; values must converge to the
    # assigned constants
    for m in (2, 3):
        target = zeta_int(m, POLICY) if m % 2 else CTX.mpf(0)
        seq = [cl_m(m, 1 + 10 ** -k * (0.3 + 0.4j), POLICY) for k in (4, 6, 8)]
        assert abs(seq[-1] - target) < 1e-6
        # near 0 and infinity CL_m ~ z log^(m-1)|z|, so loose bounds suffice
        assert abs(cl_m(m, 1e-12 + 1e-13j, POLICY)) < 1e-8
        assert abs(cl_m(m, 1e12 + 1e11j, POLICY)) < 1e-8


@pytest.mark.parametrize("m", range(2, 8))
def test_cl_inversion_conjugation_distribution(m):
    rng = SplitMix64(1000 + m)
    for _ in range(6):
        z = CTX.mpc(rng.next_int(-250, 250) / 100, rng.next_int(-250, 250) / 100 or 0.31)
        if abs(z) < 0.1 or abs(z - 1) < 0.1:
            continue
        sign = (-1) ** (m - 1)
        assert abs(cl_m(m, z, POLICY) - sign * cl_m(m, 1 / z, POLICY)) < POLICY.tolerance
        assert abs(cl_m(m, CTX.conj(z), POLICY) - sign * cl_m(m, z, POLICY)) < POLICY.tolerance
        dist = cl_m(m, z * z, POLICY) - 2 ** (m - 1) * (
            cl_m(m, z, POLICY) + cl_m(m, -z, POLICY)
        )
        assert abs(dist) < POLICY.tolerance


def test_cl_two_routes_agree_on_annulus():
    # |z| slightly below vs above 1: inversion route and direct route agree
    for m in (2, 5):
        z = CTX.mpc("0.999", "0.02")
        a = cl_m(m, z, POLICY)
        b = (-1) ** (m - 1) * cl_m(m, 1 / z, POLICY)
        assert abs(a - b) < POLICY.tolerance


def test_precision_scaling():
    hi = PrecisionPolicy(70)
    z = 0.37 + 0.58j
    for m in (2, 4, 7):
        a = cl_m(m, z, POLICY)
        b = cl_m(m, z, hi)
        assert abs(a - hi.context.mpf(mpmath.nstr(b, 75))) < CTX.mpf(10) ** (
            -POLICY.working_digits + POLICY.guard_digits
        )


def test_cl_apply_five_term():
    x, y = CTX.mpc(2, 1), CTX.mpc(1, -2)
    terms = [
        (Fraction(1), x * y),
        (Fraction(-1), x),
        (Fraction(-1), y),
        (Fraction(-1), (1 - x) / (1 - 1 / y)),
        (Fraction(-1), (1 - y) / (1 - 1 / x)),
    ]
    assert abs(cl_apply(2, terms, POLICY)) < POLICY.tolerance


def test_cl_apply_inversion_combination():
    z = CTX.mpc(2, 1)
    terms = [(Fraction(1), z), (Fraction(1), 1 / z), (Fraction(-2), z)]
    assert abs(cl_apply(3, terms, POLICY)) < POLICY.tolerance


def test_cl_apply_conjugation_pair():
    z = CTX.mpc(2, 1)
    terms = [(Fraction(1), CTX.conj(z)), (Fraction(1), z)]
    assert abs(cl_apply(2, terms, POLICY)) < POLICY.tolerance


# -- roots -------------------------------------------------------------------------

def test_roots_quadratic():
    roots = poly_roots([-1, 0, 1], POLICY)  # x^2 - 1
    assert len(roots) == 2
    assert close(roots[0], CTX.mpc(-1), 45) and close(roots[1], CTX.mpc(1), 45)


def test_roots_phi_preimage_quadratic():
    # x^2 - x - t at t = 3/4 has roots 3/2, -1/2
    roots = poly_roots([Fraction(-3, 4), Fraction(-1), Fraction(1)], POLICY)
    assert close(roots[0], POLICY.complex(Fraction(-1, 2)), 45)
    assert close(roots[1], POLICY.complex(Fraction(3, 2)), 45)


def test_roots_multiplicity():
    roots = poly_roots([4, -4, 1], POLICY)  # (x-2)^2
    assert len(roots) == 2
    assert roots[0] == roots[1]
    assert close(roots[0], CTX.mpc(2), 20)


def test_roots_sum_product_invariant():
    rng = SplitMix64(17)
    for _ in range(5):
        coeffs = [Fraction(rng.next_int(-9, 9) or 1) for _ in range(5)]
        roots = poly_roots(coeffs, POLICY)
        total = sum(roots, CTX.mpc(0))
        prod = CTX.mpc(1)
        for r in roots:
            prod *= r
        d = len(coeffs) - 1
        assert abs(total + POLICY.complex(coeffs[d - 1] / coeffs[d])) < POLICY.tolerance
        expected = (-1) ** d * POLICY.complex(coeffs[0] / coeffs[d])
        assert abs(prod - expected) < POLICY.tolerance


def test_roots_rejects_degenerate_input():
    with pytest.raises(DomainError):
        poly_roots([3], POLICY)
    with pytest.raises(DomainError):
        poly_roots([1, 0, 0], POLICY)  # zero leading coefficients stripped
