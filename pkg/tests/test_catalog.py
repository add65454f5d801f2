from fractions import Fraction

import pytest

from polyrel.catalog import (
    XI7_BLOCKS,
    a_k_sets,
    equation_from_json,
    equation_names,
    get_equation,
    omega,
    phi_alpha,
    s3_cosets,
    theta,
    weight_wt,
)
from polyrel.criterion import kernel_test
from polyrel.exact import DomainError
from polyrel.formal import inversion_class_key
from polyrel.ratfunc import RatFunc


# -- builder shape -------------------------------------------------------------

def test_five_term_has_five_arguments():
    eq = get_equation("five_term")
    assert len(eq.sum) == 5
    assert eq.sum.count_distinct_up_to_inversion() == 5


def test_three_term_structure():
    eq = get_equation("three_term")
    assert eq.sum.count_distinct_up_to_inversion() == 3
    assert eq.sum.coefficient_of(RatFunc.from_value(1)) == -1


def test_goncharov22_counts():
    eq = get_equation("goncharov22")
    assert eq.sum.count_distinct_up_to_inversion() == 22
    assert eq.sum.coefficient_of(RatFunc.from_value(1)) == -3


def test_goncharov22_sym_counts():
    eq = get_equation("goncharov22_sym")
    assert eq.sum.count_distinct_up_to_inversion() == 22
    # 28 exact non-constant arguments before inversion-class merging
    assert len(eq.sum.nonconstant_part()) == 28


def test_f17_and_relation34_counts():
    assert len(get_equation("f17").sum) == 17
    assert get_equation("f17").sum.count_distinct_up_to_inversion() == 17
    assert not get_equation("f17").is_equation
    r34 = get_equation("relation34")
    assert len(r34.sum) == 34
    assert r34.sum.count_distinct_up_to_inversion() == 34


def test_gamma21_symmetrized_classes_and_coefficients():
    eq = get_equation("gamma21_symmetrized")
    assert eq.sum.count_distinct_up_to_inversion() == 21
    assert all(c in (1, -1, 2, -2) for c, _ in eq.sum)


def test_fourlog_term_structure():
    eq = get_equation("fourlog_n2")
    assert eq.numeric_only
    # n(n-2) = 0 kills the product term for n = 2: 3n^2 + 2n = 16 terms
    assert len(eq.sum) == 16
    eq3 = get_equation("fourlog_n3")
    assert len(eq3.sum) == 3 * 9 + 1 + 6


# -- weight-7 entries -------------------------------------------------------------

def test_xi7_class_count():
    assert get_equation("xi7_explicit").sum.count_distinct_up_to_inversion() == 274
    assert get_equation("xi7_symmetric").sum.count_distinct_up_to_inversion() == 274


def test_xi7_sixty_identity():
    lhs = get_equation("xi7_explicit").sum.scale(60).inversion_class_vector()
    rhs = get_equation("xi7_symmetric").sum.inversion_class_vector()
    assert lhs == rhs


def test_xi7_weight_balance():
    for _, _, (a, b, c, d) in XI7_BLOCKS:
        assert weight_wt(a, b) == weight_wt(c, d)


def test_xi7_block_multiplicities_match_first_factor():
    from polyrel.catalog import _block_sum
    from polyrel.formal import FormalSum

    for first, _, (a, b, c, d) in XI7_BLOCKS[:8]:
        block = FormalSum(_block_sum(a, b, c, d))
        mults = {}
        for coeff, arg in block:
            key = inversion_class_key(arg)
            mults[key] = mults.get(key, Fraction(0)) + coeff
        assert {int(m) for m in mults.values()} == {first.denominator}


# -- exponent-family helpers --------------------------------------------------------

def test_theta_examples():
    assert theta((1, -1, 0)) == (1, 1, -2)
    assert theta((-1, -2, 3)) == (-1, -1, -1)


def test_theta_maps_sum_zero_into_repeated_plane():
    for a in range(-3, 4):
        for b in range(-3, 4):
            img = theta((a, b, -a - b))
            assert img[0] == img[1]


def test_a_k_sets_match_display():
    sets = a_k_sets()
    assert set(sets["A1"]) == {
        (1, 1, -2), (-1, -1, 2), (-1, -1, 1), (1, 1, -1), (0, 0, 1), (0, 0, -1),
    }
    assert set(sets["A2"]) == {(2, 2, -3), (-1, -1, 3), (-1, -1, 0)}
    assert set(sets["A3"]) == {
        (-1, -1, -1), (-1, -1, 4), (-2, -2, 5), (-2, -2, 1), (3, 3, -4), (3, 3, -5),
    }
    assert sets["delta"] == (-1, -1, -1)


def test_omega_values_and_domain():
    assert omega((-1, -1, 4)) == Fraction(-1, 5)
    with pytest.raises(DomainError):
        omega((-1, -1, -1))


def test_weight_wt_examples():
    assert weight_wt(1, 0) == 2
    assert weight_wt(-2, 3) == 2
    assert weight_wt(0, 1) == 1


def test_s3_cosets():
    assert len(s3_cosets((1, 1, -2))) == 3
    assert len(s3_cosets((-1, -1, -1))) == 1


def test_phi_alpha_delta_is_inverse_of_f():
    z = RatFunc.var("z")
    f = -(z * z * (1 - z) ** 2) / (1 - z + z * z) ** 3  # f = -f1 f2 f3
    assert phi_alpha((-1, -1, -1)).equivalent(1 / f)


def test_phi_alpha_unit_exponents():
    z = RatFunc.var("z")
    C = 1 - z + z * z
    assert phi_alpha((1, 0, 0)).equivalent(z / C)        # -f1
    assert phi_alpha((0, 1, 0)).equivalent((z - 1) / C)  # f2
    assert phi_alpha((0, 0, 1)).equivalent(z * (1 - z) / C)


# -- kernel soundness sweep (reduced parameters; acceptance runs full) ---------------

@pytest.mark.parametrize(
    "name",
    ["five_term", "three_term", "goncharov22", "goncharov22_sym", "relation34", "gamma21"],
)
def test_equation_kernel_membership(name):
    eq = get_equation(name)
    verdict = kernel_test(eq.sum, eq.weight, trials=3, functionals=3, seed=17)
    assert verdict.passed


def test_xi7_kernel_membership():
    eq = get_equation("xi7_explicit")
    verdict = kernel_test(
        eq.sum, 7, trials=2, functionals=2, seed=17, specialization_height=7
    )
    assert verdict.passed


def test_every_equation_passes_numeric_soundness():
    # global soundness: every entry flagged as an equation vanishes
    # numerically (reduced point counts; the acceptance suite runs full ones)
    from polyrel.numeric import PrecisionPolicy
    from polyrel.verify import verify_numeric

    policy = PrecisionPolicy(40)
    for name in equation_names():
        eq = get_equation(name)
        if not eq.is_equation:
            continue
        points = 2 if eq.weight >= 7 else 3
        verdict = verify_numeric(eq, points=points, policy=policy, seed=23)
        assert verdict.passed, (name, verdict.witness)


def test_unknown_equation_rejected():
    with pytest.raises(DomainError):
        get_equation("nope")
    assert "xi7_explicit" in equation_names()


def test_equation_json_roundtrip():
    for name in ("five_term", "goncharov22", "f17"):
        eq = get_equation(name)
        back = equation_from_json(eq.to_json())
        assert back.sum == eq.sum
        assert back.weight == eq.weight
        assert back.variables == eq.variables
