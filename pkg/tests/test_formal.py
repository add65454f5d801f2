from fractions import Fraction

import pytest

from polyrel.formal import (
    Automorphism,
    ClosureBoundExceeded,
    FormalSum,
    group_closure,
    orbit,
)
from polyrel.ratfunc import RatFunc

x = RatFunc.var("x")
y = RatFunc.var("y")
one = RatFunc.from_value(1)


def test_cancelling_terms_vanish():
    s = FormalSum([(1, x), (-1, x)])
    assert s.is_zero()


def test_scale():
    s = FormalSum([(1, x), (1, y)]).scale(2)
    assert s.coefficient_of(x) == 2 and s.coefficient_of(y) == 2


def test_merge_requires_function_equality_not_representation():
    unreduced = (x * y) / y  # same function as x, different representation
    s = FormalSum([(1, x), (1, unreduced)])
    assert len(s) == 1
    assert s.coefficient_of(x) == 2


def test_map_arguments_shift():
    sigma = Automorphism({"t1": RatFunc.var("t2"), "t2": RatFunc.var("t3"), "t3": RatFunc.var("t1")})
    s = FormalSum.single(RatFunc.var("t1"))
    mapped = s.map_arguments(sigma)
    assert mapped.coefficient_of(RatFunc.var("t2")) == 1


def test_map_arguments_composition_order():
    a = Automorphism({"x": RatFunc.var("x") + 1})
    b = Automorphism({"x": 2 * RatFunc.var("x")})
    s = FormalSum.single(x)
    via_compose = s.map_arguments(a.compose(b))
    stepwise = s.map_arguments(b).map_arguments(a)
    assert via_compose == stepwise


def test_specialize_five_point_sum():
    args = [x, y, x * y, (1 - x) / (1 - 1 / y), (1 - y) / (1 - 1 / x)]
    s = FormalSum([(1, a) for a in args])
    res = s.specialize({"x": Fraction(1, 2), "y": Fraction(1, 3)})
    assert not res.degenerate
    assert len(res.sum) == 5
    assert all(a.is_constant() for _, a in res.sum)


def test_specialize_pole_is_degenerate():
    s = FormalSum.single(1 / (1 - x))
    res = s.specialize({"x": Fraction(1)})
    assert res.degenerate
    assert res.dropped[0][1] == "pole"


def test_specialize_keeps_constant_terms():
    s = FormalSum([(Fraction(-3), one), (1, x)])
    res = s.specialize({"x": Fraction(2, 5)})
    assert not res.degenerate
    assert res.sum.coefficient_of(one) == -3


def test_specialize_allow_degenerate_drops_and_reports():
    s = FormalSum([(1, x), (1, x * x)])
    res = s.specialize({"x": Fraction(1)}, allow_degenerate=True)
    assert not res.degenerate
    assert res.sum.is_zero()
    assert len(res.dropped) == 2


def test_count_distinct_up_to_inversion():
    s = FormalSum([(1, x), (1, one / x)])
    assert s.count_distinct_up_to_inversion() == 1
    t = FormalSum([(1, x), (1, y), (Fraction(2), one)])
    assert t.count_distinct_up_to_inversion() == 2  # constants ignored


def test_closure_identity_only():
    ident = Automorphism.identity(["x"])
    assert len(group_closure([ident])) == 1


def test_closure_of_involution_and_shift():
    # <z -> 1/z, z -> 1-z> generates S3 on P^1
    inv = Automorphism({"z": 1 / RatFunc.var("z")})
    flip = Automorphism({"z": 1 - RatFunc.var("z")})
    group = group_closure([inv, flip])
    assert len(group) == 6


def test_closure_bound_enforced():
    inv = Automorphism({"z": 1 / RatFunc.var("z")})
    flip = Automorphism({"z": 1 - RatFunc.var("z")})
    with pytest.raises(ClosureBoundExceeded):
        group_closure([inv, flip], bound=3)


def test_closure_is_composition_closed():
    inv = Automorphism({"z": 1 / RatFunc.var("z")})
    flip = Automorphism({"z": 1 - RatFunc.var("z")})
    group = group_closure([inv, flip])
    keys = {g._key for g in group}
    for a in group:
        for b in group:
            assert a.compose(b)._key in keys


def test_orbit_of_constant():
    inv = Automorphism({"z": 1 / RatFunc.var("z")})
    group = group_closure([inv])
    assert len(orbit(RatFunc.from_value(1), group)) == 1


def test_orbit_s3_on_f_factors():
    # the S3 action permutes the f_i and fixes f
    z = RatFunc.var("z")
    inv = Automorphism({"z": 1 / z})
    flip = Automorphism({"z": 1 - z})
    group = group_closure([inv, flip])
    f1 = -z / (1 - z + z * z)
    f = z * z * (1 - z) ** 2 / (1 - z + z * z) ** 3
    orb_f1 = orbit(f1, group)
    orb_f = orbit(f, group)
    assert len(orb_f) == 1
    assert 2 <= len(orb_f1) <= 6
    up_to_inv = orbit(f1, group, up_to_inversion=True)
    assert len(up_to_inv) <= len(orb_f1)
