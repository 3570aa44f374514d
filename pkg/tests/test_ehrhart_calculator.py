from fractions import Fraction

import pytest

from src.application.services.polytope_geometry import face_lattice
from src.application.use_cases.ehrhart_calculator import EhrhartCalculatorUseCase
from src.domain.entities.polynomial import RationalPolynomial
from src.domain.entities.reports import InteriorCountTable
from src.domain.exceptions import ConsistencyError


def test_ehrhart_vector_of_square(ehrhart, family):
    vector = ehrhart.ehrhart_vector(family("cube:2"))
    assert vector.entries == (
        RationalPolynomial((4,)),
        RationalPolynomial((4, 4)),
        RationalPolynomial((1, 2, 1)),
    )


def test_ehrhart_polynomial_of_triangle(ehrhart, family):
    simplex = family("simplex:2:1")
    whole = face_lattice(simplex).polytope_face()
    assert ehrhart.ehrhart_polynomial(simplex, whole).coeffs == (1, Fraction(3, 2), Fraction(1, 2))


def test_ehrhart_polynomial_is_cached(ehrhart, unit_square):
    whole = face_lattice(unit_square).polytope_face()
    assert ehrhart.ehrhart_polynomial(unit_square, whole) is ehrhart.ehrhart_polynomial(
        unit_square, whole
    )


@pytest.mark.parametrize("spec, volume", [("cube:3", 6), ("simplex:2:3", 9), ("segment:7", 7)])
def test_normalized_volume(ehrhart, family, spec, volume):
    polytope = family(spec)
    whole = face_lattice(polytope).polytope_face()
    assert ehrhart.normalized_volume(polytope, whole) == volume


def test_interior_counts_of_square(ehrhart, unit_square):
    table = ehrhart.interior_counts(unit_square)
    assert table.max_dilation == 3
    assert table.dimensions() == (0, 1, 2)
    for i in range(1, 4):
        assert table.get(0, i) == 4
        assert table.get(1, i) == 4 * (i - 1)
        assert table.get(2, i) == (i - 1) ** 2


def test_interior_counts_of_pyramid(ehrhart, family):
    # reciprocidade vale face a face mesmo sem simplicidade
    table = ehrhart.interior_counts(family("square_pyramid"), max_dilation=2)
    assert table.get(0, 1) == 5
    assert table.get(3, 1) == 0
    assert table.get(3, 2) == 1


def test_reciprocity_mismatch_is_reported(ehrhart, unit_square):
    whole = face_lattice(unit_square).polytope_face()
    key = (unit_square, whole.vertex_indices)
    ehrhart._polynomials[key] = RationalPolynomial((1, 2, 2))
    with pytest.raises(ConsistencyError, match="reciprocity mismatch"):
        ehrhart.interior_counts(unit_square)


def test_volume_must_be_a_positive_integer(ehrhart, unit_square):
    whole = face_lattice(unit_square).polytope_face()
    ehrhart._polynomials[(unit_square, whole.vertex_indices)] = RationalPolynomial((1, 1, Fraction(1, 3)))
    with pytest.raises(ConsistencyError):
        ehrhart.normalized_volume(unit_square, whole)


def test_table_lookup():
    table = InteriorCountTable(counts={(0, 1): 3, (1, 1): 0}, max_dilation=1)
    assert table.get(0, 1) == 3
    assert table.dimensions() == (0, 1)


def test_polynomial_cache_is_bounded(counter, unit_square):
    ehrhart = EhrhartCalculatorUseCase(counter, max_cached_polynomials=3)
    lattice = face_lattice(unit_square)
    faces = list(lattice.all_faces())
    for face in faces:
        ehrhart.ehrhart_polynomial(unit_square, face)
    assert len(ehrhart._polynomials) == 3
    # a entrada mais recente sobrevive ao despejo
    assert (unit_square, faces[-1].vertex_indices) in ehrhart._polynomials
