from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.application.services import symfun
from src.domain.entities.reports import Specialization
from src.domain.exceptions import DegenerateSpecializationError, NotSmoothError

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@st.composite
def specializations(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return Specialization(
        s=draw(rationals),
        x=tuple(draw(st.lists(nonzero_rationals, min_size=n, max_size=n))),
    )


def test_identity_in_dimension_one():
    check = symfun.verify_symfun_identity(1, Specialization(s=Fraction(1), x=(Fraction(1),)))
    assert check.lhs == check.rhs == -3


def test_constant_terms_in_dimension_one():
    spec = Specialization(s=Fraction(2), x=(Fraction(3),))
    assert symfun.ct_v_p(spec, 0) == 1
    assert symfun.ct_v_p(spec, 1) == Fraction(-2, 3)
    assert symfun.ct_b_p(spec, 1) == Fraction(-2, 3) + Fraction(1, 2)


def test_zero_x_entry_is_rejected():
    with pytest.raises(DegenerateSpecializationError):
        symfun.ct_b_p(Specialization(s=Fraction(1), x=(Fraction(0), Fraction(1))), 1)


def test_dimension_mismatch_is_rejected():
    with pytest.raises(ValueError):
        symfun.verify_symfun_identity(3, Specialization(s=Fraction(1), x=(Fraction(1),)))


def test_subset_size_out_of_range():
    with pytest.raises(ValueError):
        symfun.ct_v_p(Specialization(s=Fraction(0), x=(Fraction(1),)), 2)


def test_generic_covector_of_square(unit_square):
    assert symfun.choose_generic_covector(unit_square) == (1, 2)


def test_brion_sums_for_square(unit_square):
    assert symfun.brion_count(unit_square, (1, 2)) == 4
    assert symfun.brion_volume(unit_square, (1, 2)) == 2


@pytest.mark.parametrize("spec, points, volume", [("simplex:2:3", 10, 9), ("cube:3", 8, 6)])
def test_brion_sums_for_families(family, spec, points, volume):
    polytope = family(spec)
    covector = symfun.choose_generic_covector(polytope)
    assert symfun.brion_count(polytope, covector) == points
    assert symfun.brion_volume(polytope, covector) == volume


def test_non_generic_covector(unit_square):
    with pytest.raises(DegenerateSpecializationError, match="xi not generic"):
        symfun.vertex_data(unit_square, (1, 0))


def test_vertex_data_needs_smooth_polytope(thin_triangle):
    with pytest.raises(NotSmoothError):
        symfun.vertex_data(thin_triangle, (1, 3))


@pytest.mark.parametrize("spec, degree", [("segment:2", 2), ("cube:2", 2), ("prism:3", 0)])
def test_vertex_identity_gives_degree(family, spec, degree):
    polytope = family(spec)
    check = symfun.verify_polytope_symfun_identity(polytope, symfun.choose_generic_covector(polytope))
    assert check.lhs == check.rhs == degree


@pytest.mark.property_based
@given(specializations())
@settings(max_examples=40, deadline=None)
def test_identity_holds(spec):
    assert symfun.verify_symfun_identity(spec.n, spec).equal


@pytest.mark.property_based
@given(specializations(), st.data())
@settings(max_examples=40, deadline=None)
def test_ctb_invariant_under_t_reflection(spec, data):
    p = data.draw(st.integers(0, spec.n))
    negated = Specialization(s=-spec.s, x=tuple(-x for x in spec.x))
    assert symfun.ct_b_p(spec, p) == symfun.ct_b_p(negated, p)
