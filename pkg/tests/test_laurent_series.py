from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.domain.entities.laurent_series import (
    TruncatedLaurentSeries,
    bernoulli,
    series_constant,
    series_exp_linear,
    series_monomial,
    series_recip_one_minus_exp,
    truncation_order,
)
from src.domain.exceptions import DegenerateSpecializationError, SeriesWindowError

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=9)
nonzero_rationals = rationals.filter(lambda x: x != 0)


def test_bernoulli_numbers():
    expected = [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)]
    assert [bernoulli(k) for k in range(7)] == expected


def test_bernoulli_odd_indices_vanish():
    assert all(bernoulli(k) == 0 for k in range(3, 31, 2))
    assert bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.slow
def test_bernoulli_large_index_has_no_recursion_limit():
    # sinal de B_2n é (-1)^(n+1)
    assert bernoulli(1100) < 0
    assert bernoulli(1101) == 0


def test_bernoulli_rejects_negative_index():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_truncation_order():
    assert truncation_order(3) == 5


def test_recip_one_minus_exp_coefficients():
    # 1/(1 - e^{2t}) = -1/(2t) + 1/2 - t/6 + O(t^3)
    series = series_recip_one_minus_exp(2, 2)
    assert series.coefficient(-1) == Fraction(-1, 2)
    assert series.coefficient(0) == Fraction(1, 2)
    assert series.coefficient(1) == Fraction(-1, 6)
    assert series.coefficient(2) == 0
    assert series.coefficient(-2) == 0


def test_recip_one_minus_exp_at_one():
    # 1/(1 - e^t) = -1/t + 1/2 - t/12 + t^3/720 + O(t^4)
    series = series_recip_one_minus_exp(1, 3)
    assert [series.coefficient(k) for k in range(-1, 4)] == [
        -1,
        Fraction(1, 2),
        Fraction(-1, 12),
        0,
        Fraction(1, 720),
    ]


def test_recip_one_minus_exp_rejects_zero():
    with pytest.raises(DegenerateSpecializationError, match="pole of undetermined order"):
        series_recip_one_minus_exp(0, 3)


def test_coefficient_outside_window():
    with pytest.raises(SeriesWindowError):
        series_constant(1, 2).coefficient(3)


def test_product_shrinks_window():
    product = series_monomial(1, -1, 3) * series_exp_linear(1, 3)
    assert product.max_order == 2
    assert product.constant_term() == 1
    with pytest.raises(SeriesWindowError):
        product.coefficient(3)


def test_scalar_multiplication():
    series = series_exp_linear(1, 3) * 6
    assert series.coeffs == (6, 6, 3, 1)


@pytest.mark.property_based
@given(rationals, rationals)
@settings(max_examples=60)
def test_exponentials_multiply(a, b):
    assert (series_exp_linear(a, 5) * series_exp_linear(b, 5)).agrees_with(
        series_exp_linear(a + b, 5)
    )


@pytest.mark.property_based
@given(nonzero_rationals)
@settings(max_examples=60)
def test_recip_inverts_one_minus_exp(x):
    one_minus = series_constant(1, 4) - series_exp_linear(x, 4)
    product = one_minus * series_recip_one_minus_exp(x, 4)
    assert product.agrees_with(series_constant(1, 3))


@pytest.mark.property_based
@given(nonzero_rationals)
@settings(max_examples=60)
def test_recip_of_opposite_arguments_sum_to_one(x):
    total = series_recip_one_minus_exp(x, 4) + series_recip_one_minus_exp(-x, 4)
    assert total.agrees_with(series_constant(1, 4))


laurent_series = st.builds(
    lambda low, values: TruncatedLaurentSeries(low, tuple(values), 4),
    st.integers(min_value=-2, max_value=0),
    st.lists(rationals, min_size=1, max_size=7),
)


@pytest.mark.property_based
@given(laurent_series, laurent_series)
@settings(max_examples=60)
def test_product_is_commutative(a, b):
    assert (a * b).agrees_with(b * a)


@pytest.mark.property_based
@given(laurent_series, laurent_series, laurent_series)
@settings(max_examples=40)
def test_product_is_associative(a, b, c):
    assert ((a * b) * c).agrees_with(a * (b * c))
