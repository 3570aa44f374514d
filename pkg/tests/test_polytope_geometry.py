import pytest

from src.application.services.polytope_families import corpus, gen_family
from src.application.services.polytope_geometry import (
    build_polytope,
    face_lattice,
    facets,
    is_simple,
    is_smooth,
    primitive,
    transform_polytope,
    vertex_cone_generators,
)
from src.domain.exceptions import NotSimpleError, PolytopeError


def test_redundant_points_are_dropped():
    polytope = build_polytope([[0, 0], [2, 0], [1, 0], [1, 1], [0, 2], [2, 2], [2, 0]])
    assert polytope.vertices == ((0, 0), (2, 0), (0, 2), (2, 2))


def test_unit_square_facets(unit_square):
    inequalities = [(f.normal, f.offset) for f in facets(unit_square)]
    assert inequalities == [((-1, 0), 0), ((0, -1), 0), ((0, 1), 1), ((1, 0), 1)]


@pytest.mark.parametrize(
    "spec, f_vector",
    [
        ("cube:2", (4, 4, 1)),
        ("cube:3", (8, 12, 6, 1)),
        ("prism:3", (6, 9, 5, 1)),
        ("simplex:3:2", (4, 6, 4, 1)),
        ("segment:4", (2, 1)),
        ("square_pyramid", (5, 8, 5, 1)),
    ],
)
def test_f_vectors(family, spec, f_vector):
    assert face_lattice(family(spec)).f_vector == f_vector


def test_euler_relation_on_corpus():
    for polytope in corpus(max_dim=3):
        f = face_lattice(polytope).f_vector
        assert sum((-1) ** p * fp for p, fp in enumerate(f)) == 1


def test_faces_know_their_subfaces(unit_square):
    lattice = face_lattice(unit_square)
    whole = lattice.polytope_face()
    assert whole.vertex_indices == (0, 1, 2, 3)
    assert all(edge.is_subface_of(whole) for edge in lattice.faces(1))
    assert len(lattice.edges_at(0)) == 2


@pytest.mark.parametrize(
    "raw, message",
    [
        ([], "empty input"),
        ([[0, 0], [1, 1], [2, 2]], "not full-dimensional"),
        ([[0, 0], [1]], "expected 2"),
        ([[0, 0], [1, 0], [0, 0.5]], "non-integer"),
    ],
)
def test_invalid_input(raw, message):
    with pytest.raises(PolytopeError, match=message):
        build_polytope(raw)


def test_simplicity_and_smoothness(family, unit_square, thin_triangle):
    assert is_simple(unit_square) and is_smooth(unit_square)
    assert is_smooth(family("simplex:2:3"))
    assert is_simple(thin_triangle) and not is_smooth(thin_triangle)
    pyramid = family("square_pyramid")
    assert not is_simple(pyramid) and not is_smooth(pyramid)


def test_vertex_cone_generators(unit_square, thin_triangle):
    assert set(vertex_cone_generators(unit_square, (0, 0))) == {(1, 0), (0, 1)}
    assert set(vertex_cone_generators(thin_triangle, (0, 1))) == {(0, -1), (2, -1)}


def test_apex_of_pyramid_is_not_simple():
    with pytest.raises(NotSimpleError, match="vertex not simple"):
        vertex_cone_generators(gen_family("square_pyramid"), (0, 0, 1))


def test_primitive():
    assert primitive([4, -6]) == (2, -3)
    with pytest.raises(PolytopeError):
        primitive([0, 0])


def test_transform_preserves_combinatorics(family):
    prism = family("prism:3")
    image = transform_polytope(prism, [[1, 1, 0], [0, 1, 0], [2, 0, 1]], shift=[1, -2, 3])
    assert face_lattice(image).f_vector == face_lattice(prism).f_vector
    assert is_smooth(image)


def test_transform_requires_unimodular_matrix(unit_square):
    with pytest.raises(PolytopeError, match="not unimodular"):
        transform_polytope(unit_square, [[2, 0], [0, 1]])
