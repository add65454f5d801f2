from fractions import Fraction

import pytest

from polyrel.exact import DomainError
from polyrel.proofalgebra import (
    FormalTensor,
    LogSpace,
    beta4_formal,
    derived_symbols,
    report_json,
    verify_claim_and_theorem,
    verify_identities,
)


def test_derived_symbols_n2():
    d = derived_symbols(2)
    assert d["S"] == {("xi", 1): 1, ("xi", 2): 1, ("eta", 1): -1, ("eta", 2): -1}
    # (1/n) sum s_ij = S
    total = {}
    for v in d["s"].values():
        for k, c in v.items():
            total[k] = total.get(k, Fraction(0)) + c
    total = {k: c / 2 for k, c in total.items() if c != 0}
    assert total == d["S"]


def test_zeta_reduction_is_projection():
    space = LogSpace(3)
    # reducing an already-reduced vector changes nothing, and row/column sums
    # agree with Z for every row and column
    z = space.Z()
    for m in range(1, 4):
        acc = {}
        for i in range(1, 4):
            for k, c in space.zeta(i, m).items():
                acc[k] = acc.get(k, Fraction(0)) + c
        acc = {k: c for k, c in acc.items() if c != 0}
        assert acc == z


def test_zeta_column_difference_vanishes():
    space = LogSpace(4)
    acc = {}
    for i in range(1, 5):
        for k, c in space.zeta(i, 1).items():
            acc[k] = acc.get(k, Fraction(0)) + c
        for k, c in space.zeta(i, 2).items():
            acc[k] = acc.get(k, Fraction(0)) - c
    assert not {k: c for k, c in acc.items() if c != 0}


def test_beta4_formal_x_over_y_shape():
    # x_l/y_m image: s^3 ^ zeta - s^2 . (xi_l ^ eta_m)
    from polyrel.proofalgebra import sym, wedge

    n, l, m = 3, 1, 2
    space = LogSpace(n)
    got = beta4_formal("x_l/y_m", l, m, n)
    s = space.s(l, m)
    expected = FormalTensor.cube_wedge(s, space.zeta(l, m)) - FormalTensor.product(
        sym(s, s), wedge(space.xi(l), space.eta(m))
    )
    assert got == expected


def test_beta4_formal_one_minus_inv_x_is_pure_xi():
    got = beta4_formal("1-1/x_l", 2, 1, 3)
    assert got.is_pure_xi_eta()
    assert all(kinds == ("xi",) for kinds in got.kinds_per_coord())


def test_beta4_formal_unknown_kind():
    with pytest.raises(DomainError):
        beta4_formal("bogus", 1, 1, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_identities_pass(n):
    assert all(verify_identities(n).values())


def test_identities_negative_control():
    out = verify_identities(2, altered_eq15=True)
    assert not out["eq15_distribution_scalars"]


@pytest.mark.parametrize("n", [2, 3])
def test_claim_and_theorem_pass(n):
    assert all(verify_claim_and_theorem(n).values())


def test_theorem_negative_control():
    out = verify_claim_and_theorem(2, perturb_coefficient=True)
    assert not out["theorem_zero"]


def test_report_json_shape():
    rep = report_json(2)
    assert rep["n"] == 2
    assert rep["theorem_zero"] is True
    assert set(rep["identities"]) >= {
        "eq11_kronecker_wedge",
        "eq12_row_column_sums",
        "eq15_distribution_scalars",
    }
