from math import comb

import pytest
from hypothesis import given, strategies as st

from stoimenow import bijections as bij
from stoimenow.errors import NonUnitConstantTerm
from stoimenow.matchings import stat_fcr, stat_bl, stat_mcr, stoimenow_matchings
from stoimenow.patterns import P1, avoiders
from stoimenow.series import (
    Series,
    ballot_series,
    catalan_series,
    coefficient_poly,
    distribution_polynomial,
    fishburn_series,
    format_poly,
    monomial,
    narayana_series,
    thm15_rhs,
    thm16_rhs,
)


def narayana_row(n):
    if n == 0:
        return {(0, 0, 0): 1}
    return {(k, 0, 0): comb(n, k) * comb(n, k - 1) // n for k in range(1, n + 1)}


def ballot_row(n):
    """Coefficient of y^k t^n in 1/(1 - y t C(t)): k/(2n-k) * binom(2n-k, n)."""
    if n == 0:
        return {(0, 0, 0): 1}
    return {(0, k, 0): k * comb(2 * n - k, n) // (2 * n - k) for k in range(1, n + 1)}


ints = st.lists(st.integers(-5, 5), min_size=1, max_size=6)


def test_arithmetic_examples():
    one_plus_t = Series.from_ints([1, 1], order=4)
    one_minus_t = Series.from_ints([1, -1], order=4)
    assert (one_plus_t * one_minus_t).ints() == [1, 0, -1, 0, 0]
    assert one_minus_t.reciprocal().ints() == [1] * 5
    with pytest.raises(NonUnitConstantTerm):
        Series.from_ints([2, 1]).reciprocal()


@given(ints, ints)
def test_ring_laws(a, b):
    x, y = Series.from_ints(a, order=6), Series.from_ints(b, order=6)
    assert x * y == y * x
    assert (x + y) - y == x
    assert x * (y + x) == x * y + x * x


@given(ints)
def test_reciprocal_inverts(a):
    a = [1] + a
    x = Series.from_ints(a, order=6)
    assert (x * x.reciprocal()).ints() == [1, 0, 0, 0, 0, 0, 0]


def test_catalan_and_fishburn():
    assert catalan_series(6).ints() == [1, 1, 2, 5, 14, 42, 132]
    assert catalan_series(12).ints() == [comb(2 * n, n) // (n + 1) for n in range(13)]
    assert fishburn_series(7).ints() == [1, 1, 2, 5, 15, 53, 217, 1014]
    assert fishburn_series(0).ints() == [1]
    assert fishburn_series(7).ints()[7] == len(stoimenow_matchings(7))


def test_narayana_matches_binomial_formula():
    n = narayana_series(10)
    for d in range(11):
        assert n[d] == narayana_row(d)
    assert format_poly(n[3]) == "x + 3*x^2 + x^3"


def test_ballot_matches_binomial_formula():
    b = ballot_series("y", 10)
    for d in range(11):
        assert b[d] == ballot_row(d)
    # the t^3 row is 2y + 2y^2 + y^3
    assert b[3] == {(0, 1, 0): 2, (0, 2, 0): 2, (0, 3, 0): 1}


def test_closed_forms():
    assert thm15_rhs(6)[2] == {(0, 2, 1): 1, (0, 1, 2): 1}
    assert thm15_rhs(8).swap("y", "z") == thm15_rhs(8)
    assert thm16_rhs(6).specialize(y=1, z=1)[3] == narayana_row(3)
    assert thm16_rhs(6).specialize(x=1) == thm15_rhs(6)
    cat = catalan_series(6)
    assert thm15_rhs(6).specialize(x=1, y=1, z=1) == cat
    assert thm16_rhs(6).specialize(x=1, y=1, z=1) == cat


def test_distribution_polynomial():
    objs = [m for n in range(4) for m in avoiders(n, P1)]
    d = distribution_polynomial(objs, (stat_mcr,), size=lambda m: m.n)
    assert d[3] == narayana_row(3)
    assert distribution_polynomial([], ()).coeffs == ({},)
    dyck = [mu for n in range(4) for mu in bij.enumerate_dyck(n)]
    h = distribution_polynomial(dyck, (bij.dyck_height,), size=lambda mu: len(mu) // 2)
    assert h[3] == coefficient_poly({1: 1, 2: 3, 3: 1})
    with pytest.raises(ValueError):
        distribution_polynomial(objs, (stat_mcr,) * 4)


def test_pair_distribution_small():
    objs = [m for n in range(3) for m in avoiders(n, P1)]
    d = distribution_polynomial(objs, (lambda _: 0, stat_fcr, stat_bl), size=lambda m: m.n)
    assert d[2] == thm15_rhs(2)[2]


def test_formatting():
    assert format_poly({}) == "0"
    assert format_poly(monomial(-2, x=1, y=2)) == "-2*x*y^2"
    assert str(Series.from_ints([1, 0, 3])) == "t^0: 1\nt^2: 3"
    assert Series.from_ints([1, 2]).to_json() == '{"0": {"1": 1}, "1": {"1": 2}}'
