import pytest

from src.application.services.polytope_families import (
    CORPUS_SPECS,
    corpus,
    family_from_spec,
    gen_family,
    parse_family_spec,
)
from src.domain.exceptions import PolytopeError


def test_cube_vertex_order_and_label():
    cube = gen_family("cube", [2])
    assert cube.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert cube.label() == "cube:2"


def test_dilated_simplex():
    simplex = family_from_spec("simplex:2:3")
    assert simplex.vertices == ((0, 0), (3, 0), (0, 3))


def test_product_of_simplices():
    product = family_from_spec("product:1,1")
    assert set(product.vertices) == {(0, 0), (0, 1), (1, 0), (1, 1)}


@pytest.mark.parametrize(
    "spec, parsed",
    [
        ("simplex:2:3", ("simplex", (2, 3))),
        ("product:2,3", ("product", (2, 3))),
        ("square_pyramid", ("square_pyramid", ())),
    ],
)
def test_parse_family_spec(spec, parsed):
    assert parse_family_spec(spec) == parsed


@pytest.mark.parametrize(
    "spec, message",
    [
        ("dodecahedron:1", "unknown family"),
        ("cube:0", "nonpositive"),
        ("cube:2:3", "takes 1 parameter"),
        ("segment:x", "not an integer"),
        ("prism:1", "n >= 2"),
        ("product", "at least one parameter"),
        (":3", "empty family spec"),
    ],
)
def test_invalid_family_specs(spec, message):
    with pytest.raises(PolytopeError, match=message):
        family_from_spec(spec)


def test_corpus_respects_dimension_bound():
    polytopes = corpus(max_dim=2)
    assert polytopes
    assert all(p.ambient_dim <= 2 for p in polytopes)
    assert len({p.label() for p in corpus()}) == len(CORPUS_SPECS)
