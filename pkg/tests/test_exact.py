from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyrel.exact import (
    DomainError,
    SampleSpaceExhausted,
    SplitMix64,
    factor_rational,
    random_rational,
)


def test_factor_negative_fraction():
    f = factor_rational(Fraction(-8, 9))
    assert f.sign == -1
    assert f.factors == {2: 3, 3: -2}


def test_factor_one_is_empty_product():
    f = factor_rational(Fraction(1))
    assert f.sign == 1
    assert f.factors == {}


def test_factor_84_over_5():
    f = factor_rational(Fraction(84, 5))
    assert f.sign == 1
    assert f.factors == {2: 2, 3: 1, 7: 1, 5: -1}


def test_factor_zero_rejected():
    with pytest.raises(DomainError):
        factor_rational(Fraction(0))


def test_factor_large_semiprime():
    # 1e12-scale inputs must factor quickly (trial division + rho)
    n = 999983 * 999979
    f = factor_rational(Fraction(n))
    assert f.factors == {999979: 1, 999983: 1}


nonzero_rationals = st.fractions(
    min_value=Fraction(-10**5), max_value=Fraction(10**5), max_denominator=10**4
).filter(lambda q: q != 0)


@given(nonzero_rationals)
@settings(max_examples=60, deadline=None)
def test_factor_reconstructs_exactly(q):
    assert factor_rational(q).reconstruct() == q


@given(nonzero_rationals, nonzero_rationals)
@settings(max_examples=40, deadline=None)
def test_factor_multiplicativity(a, b):
    fa, fb, fab = factor_rational(a), factor_rational(b), factor_rational(a * b)
    merged = dict(fa.factors)
    for p, e in fb.factors.items():
        merged[p] = merged.get(p, 0) + e
    merged = {p: e for p, e in merged.items() if e != 0}
    assert fab.factors == merged
    assert fab.sign == fa.sign * fb.sign


def test_random_rational_contract():
    rng = SplitMix64(1)
    q = random_rational(10, rng)
    assert abs(q.numerator) <= 10 and q.denominator <= 10
    assert q not in (0, 1)


def test_random_rational_determinism():
    seq1 = [random_rational(10, rng) for rng in [SplitMix64(7)] for _ in range(20)]
    seq2 = [random_rational(10, rng) for rng in [SplitMix64(7)] for _ in range(20)]
    assert seq1 == seq2


def test_random_rational_respects_exclusions():
    rng = SplitMix64(3)
    excl = {Fraction(1, 2)}
    for _ in range(50):
        assert random_rational(2, rng, excl) != Fraction(1, 2)


def test_random_rational_exhaustion():
    every = {
        Fraction(n, d) for n in range(-2, 3) for d in (1, 2)
    }
    with pytest.raises(SampleSpaceExhausted):
        random_rational(2, SplitMix64(5), every)


def test_split_streams_are_independent_of_parent_state():
    parent = SplitMix64(42)
    child_a = parent.split("task", 0)
    parent.next_u64()
    child_b = parent.split("task", 0)
    assert child_a.next_u64() == child_b.next_u64()


def test_split_streams_differ_by_tag():
    parent = SplitMix64(42)
    assert parent.split("a").next_u64() != parent.split("b").next_u64()
