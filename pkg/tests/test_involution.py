from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.application.services.involution import (
    binomial,
    c_of_vector,
    c_via_theorem,
    check_generating_identity,
    h_vector,
    is_fixed_point,
    leading_volumes,
    product_coefficients,
    s_transform,
)
from src.application.services.polytope_geometry import face_lattice
from src.domain.entities.poly_vector import PolyVector, ScalarVector
from src.domain.entities.polynomial import RationalPolynomial

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def poly_vectors(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    return PolyVector(
        tuple(
            RationalPolynomial(tuple(draw(st.lists(small_rationals, min_size=j + 1, max_size=j + 1))))
            for j in range(n + 1)
        )
    )


def test_binomial_outside_range():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_poly_vector_rejects_high_degree():
    with pytest.raises(ValueError, match="degree"):
        PolyVector((RationalPolynomial((1, 1)),))


def test_s_on_small_vector():
    assert s_transform(ScalarVector.of([3, 5])) == ScalarVector.of([3, -2])


def test_f_vector_of_simple_polytope_is_fixed(family):
    assert is_fixed_point(ScalarVector.of(face_lattice(family("cube:3")).f_vector))
    assert not is_fixed_point(ScalarVector.of(face_lattice(family("square_pyramid")).f_vector))


def test_s_reflects_ehrhart_vector_of_simple_polytope(ehrhart, family):
    vector = PolyVector(ehrhart.ehrhart_vector(family("prism:3")).entries)
    image = s_transform(vector)
    assert all(image[p] == vector[p].reflect() for p in range(vector.n + 1))
    assert not is_fixed_point(vector)


def test_h_vectors():
    assert h_vector([8, 12, 6, 1]).entries == (1, 3, 3, 1)
    assert h_vector(ScalarVector.of([5, 8, 5, 1])).entries == (1, 1, 2, 1)


def test_product_coefficients():
    assert product_coefficients([2, 3]) == [1, 5, 6]
    assert product_coefficients([]) == [1]


def test_elementary_symmetric_functions():
    xs = [Fraction(1, 2), 3, -2]
    image = s_transform(ScalarVector.of(product_coefficients(xs)))
    assert image == ScalarVector.of(product_coefficients([1 - x for x in xs]))


def test_general_pair():
    # v(x) + w(-x) = 1 com v(x) = x^2 + 2
    xs = [Fraction(1, 3), -1, 2, 4]
    v = [x * x + 2 for x in xs]
    w_at_minus_x = [1 - (x * x + 2) for x in xs]
    image = s_transform(ScalarVector.of(product_coefficients(v)))
    assert image == ScalarVector.of(product_coefficients(w_at_minus_x))


def test_leading_volumes_of_square(ehrhart, family):
    vector = PolyVector(ehrhart.ehrhart_vector(family("cube:2")).entries)
    assert leading_volumes(vector) == [4, 4, 2]
    assert c_of_vector(vector) == c_via_theorem(vector) == 2


def test_zero_dimensional_vector():
    vector = ScalarVector.of([5])
    assert c_of_vector(vector) == c_via_theorem(vector) == 5


@pytest.mark.property_based
@given(poly_vectors(max_n=8))
@settings(max_examples=80)
def test_s_is_an_involution(vector):
    assert s_transform(s_transform(vector)) == vector


@pytest.mark.property_based
@given(poly_vectors(), small_rationals)
@settings(max_examples=60)
def test_generating_identity(vector, t0):
    assert check_generating_identity(vector, t0).equal


@pytest.mark.property_based
@given(poly_vectors())
@settings(max_examples=100)
def test_c_from_negative_integer_values(vector):
    assert c_via_theorem(vector) == c_of_vector(vector)
