from itertools import product
from typing import Callable, Dict, List, Sequence, Tuple

from src.application.services.polytope_geometry import build_polytope
from src.domain.entities.polytope import LatticePolytope, Point
from src.domain.exceptions import PolytopeError


def _simplex_vertices(n: int, d: int = 1) -> List[Point]:
    vertices = [tuple([0] * n)]
    for i in range(n):
        vertex = [0] * n
        vertex[i] = d
        vertices.append(tuple(vertex))
    return vertices


def _cube(n: int) -> List[Point]:
    # ordem lexicográfica com a última coordenada variando mais rápido
    return [tuple(v) for v in product((0, 1), repeat=n)]


def _dilated_simplex(n: int, d: int) -> List[Point]:
    return _simplex_vertices(n, d)


def _segment(d: int) -> List[Point]:
    return [(0,), (d,)]


def _product_of_simplices(*dims: int) -> List[Point]:
    factors = [_simplex_vertices(n) for n in dims]
    return [sum(parts, ()) for parts in product(*factors)]


def _prism(n: int) -> List[Point]:
    if n < 2:
        raise PolytopeError("prism needs n >= 2")
    return _product_of_simplices(1, n - 1)


def _square_pyramid() -> List[Point]:
    return [(-1, -1, 0), (-1, 1, 0), (1, -1, 0), (1, 1, 0), (0, 0, 1)]


FAMILIES: Dict[str, Tuple[Callable[..., List[Point]], Tuple[int, ...]]] = {
    # nome -> (gerador, quantidades de parâmetros aceitas; -1 = qualquer >= 1)
    "cube": (_cube, (1,)),
    "dilated_simplex": (_dilated_simplex, (2,)),
    "segment": (_segment, (1,)),
    "product_of_simplices": (_product_of_simplices, (-1,)),
    "prism": (_prism, (1,)),
    "square_pyramid": (_square_pyramid, (0,)),
}

ALIASES = {"simplex": "dilated_simplex", "product": "product_of_simplices"}


def _family_label(family: str, params: Sequence[int]) -> str:
    if not params:
        return family
    return f"{family}:" + ":".join(str(p) for p in params)


def gen_family(family: str, params: Sequence[int] = ()) -> LatticePolytope:
    """
    Gera um polítopo nomeado com ordem canônica de vértices.

    Raises:
        PolytopeError: família desconhecida ou parâmetros inválidos
    """
    name = ALIASES.get(family, family)
    if name not in FAMILIES:
        raise PolytopeError(f"unknown family '{family}'")
    generator, arities = FAMILIES[name]
    params = tuple(params)
    if -1 in arities:
        if not params:
            raise PolytopeError(f"{name} needs at least one parameter")
    elif len(params) not in arities:
        raise PolytopeError(f"{name} takes {arities[0]} parameter(s), got {len(params)}")
    if any(p <= 0 for p in params):
        raise PolytopeError(f"nonpositive parameters for {name}: {list(params)}")
    return build_polytope(generator(*params), name=_family_label(family, params))


def parse_family_spec(spec: str) -> Tuple[str, Tuple[int, ...]]:
    """
    Interpreta a mini-gramática nome:params, p.ex. "simplex:2:3" ou "product:2,3".
    """
    name, _, rest = spec.strip().partition(":")
    if not name:
        raise PolytopeError(f"empty family spec '{spec}'")
    params: List[int] = []
    if rest:
        for token in rest.replace(",", ":").split(":"):
            try:
                params.append(int(token))
            except ValueError:
                raise PolytopeError(f"family parameter '{token}' is not an integer")
    return name, tuple(params)


def family_from_spec(spec: str) -> LatticePolytope:
    name, params = parse_family_spec(spec)
    return gen_family(name, params)


# corpus de aceitação: cubos, simplexos dilatados, prismas, produtos e segmentos
CORPUS_SPECS: Tuple[str, ...] = (
    tuple(f"cube:{n}" for n in range(1, 5))
    + tuple(f"simplex:{n}:{d}" for n in range(1, 4) for d in range(1, 4))
    + tuple(f"prism:{n}" for n in range(2, 5))
    + ("product:2,2",)
    + tuple(f"segment:{d}" for d in range(1, 11))
)


def corpus(max_dim: int = 4) -> List[LatticePolytope]:
    polytopes = [family_from_spec(spec) for spec in CORPUS_SPECS]
    return [p for p in polytopes if p.ambient_dim <= max_dim]
