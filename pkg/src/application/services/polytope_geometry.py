import logging
from functools import lru_cache, reduce
from itertools import combinations
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import sympy as sp

from src.domain.entities.polytope import (
    Face,
    FaceLattice,
    FacetInequality,
    LatticePolytope,
    Point,
)
from src.domain.exceptions import NotSimpleError, PolytopeError

logger = logging.getLogger(__name__)


# Álgebra linear inteira
def primitive(vector: Sequence[int]) -> Tuple[int, ...]:
    """Divide o vetor inteiro pelo mdc das entradas"""
    divisor = reduce(gcd, (abs(v) for v in vector), 0)
    if divisor == 0:
        raise PolytopeError("zero vector has no primitive direction")
    return tuple(v // divisor for v in vector)


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    differences = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return sp.Matrix(differences).rank()


def _hyperplane_normal(points: Sequence[Point], dim: int) -> Optional[Tuple[int, ...]]:
    base = points[0]
    differences = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    matrix = sp.Matrix(differences) if differences else sp.zeros(1, dim)
    kernel = matrix.nullspace()
    if len(kernel) != 1:
        return None
    vector = kernel[0]
    denominators = [sp.Rational(entry).q for entry in vector]
    scale = reduce(sp.ilcm, denominators, 1)
    return primitive([int(entry * scale) for entry in vector])


def _enumerate_facets(points: Sequence[Point], dim: int) -> List[FacetInequality]:
    """
    Enumeração exaustiva: cada n-subconjunto afimmente independente define um
    hiperplano candidato, mantido quando todos os pontos ficam de um lado.
    """
    found: Set[Tuple[Tuple[int, ...], int]] = set()
    for subset in combinations(points, dim):
        normal = _hyperplane_normal(subset, dim)
        if normal is None:
            continue
        offset = sum(a * x for a, x in zip(normal, subset[0]))
        values = [sum(a * x for a, x in zip(normal, p)) for p in points]
        if all(v <= offset for v in values):
            found.add((normal, offset))
        elif all(v >= offset for v in values):
            found.add((tuple(-a for a in normal), -offset))
    return [FacetInequality(normal, offset) for normal, offset in sorted(found)]


# Construção e facetas
def build_polytope(
    raw_vertices: Sequence[Sequence[int]], name: Optional[str] = None
) -> LatticePolytope:
    """
    Valida a entrada e devolve o polítopo com apenas os vértices do fecho convexo.

    Raises:
        PolytopeError: entrada vazia, coordenadas não inteiras, dimensão
            inconsistente ou polítopo sem dimensão plena
    """
    if not raw_vertices:
        raise PolytopeError("empty input")

    dim = len(raw_vertices[0])
    if dim == 0:
        raise PolytopeError("points must have at least one coordinate")

    points: List[Point] = []
    for index, raw in enumerate(raw_vertices):
        if len(raw) != dim:
            raise PolytopeError(
                f"point {index} has {len(raw)} coordinates, expected {dim}"
            )
        for coordinate in raw:
            if isinstance(coordinate, bool) or not isinstance(coordinate, int):
                raise PolytopeError(f"point {index} has non-integer coordinate {coordinate!r}")
        point = tuple(raw)
        if point not in points:
            points.append(point)

    if affine_rank(points) < dim:
        raise PolytopeError("not full-dimensional")

    facet_list = _enumerate_facets(points, dim)
    vertices = []
    for point in points:
        tight_normals = [f.normal for f in facet_list if f.is_tight(point)]
        if tight_normals and sp.Matrix(tight_normals).rank() == dim:
            vertices.append(point)

    dropped = len(points) - len(vertices)
    if dropped:
        logger.debug(f"{dropped} pontos redundantes removidos de {name or 'entrada'}")
    return LatticePolytope(ambient_dim=dim, vertices=tuple(vertices), name=name)


@lru_cache(maxsize=256)
def facets(polytope: LatticePolytope) -> Tuple[FacetInequality, ...]:
    result = tuple(_enumerate_facets(polytope.vertices, polytope.ambient_dim))
    logger.debug(f"{polytope.label()}: {len(result)} facetas")
    return result


# Reticulado de faces
@lru_cache(maxsize=256)
def face_lattice(polytope: LatticePolytope) -> FaceLattice:
    """
    Todas as faces de P, obtidas como interseções de facetas e deduplicadas
    pelo conjunto de vértices justos.
    """
    facet_list = facets(polytope)
    all_vertices = frozenset(range(polytope.vertex_count))
    tight_sets = [
        frozenset(i for i, v in enumerate(polytope.vertices) if f.is_tight(v))
        for f in facet_list
    ]

    def closure(vertex_set: FrozenSet[int]) -> Tuple[FrozenSet[int], Tuple[int, ...]]:
        tight = tuple(j for j, s in enumerate(tight_sets) if vertex_set <= s)
        closed = reduce(lambda acc, j: acc & tight_sets[j], tight, all_vertices)
        return closed, tight

    seen: Dict[FrozenSet[int], Tuple[int, ...]] = {all_vertices: ()}
    frontier = [all_vertices]
    while frontier:
        next_frontier = []
        for current in frontier:
            for tight_set in tight_sets:
                if current <= tight_set:
                    continue
                candidate = current & tight_set
                if not candidate:
                    continue
                closed, tight = closure(candidate)
                if closed not in seen:
                    seen[closed] = tight
                    next_frontier.append(closed)
        frontier = next_frontier

    by_dim: List[List[Face]] = [[] for _ in range(polytope.ambient_dim + 1)]
    for vertex_set, tight in seen.items():
        indices = tuple(sorted(vertex_set))
        dim = affine_rank([polytope.vertices[i] for i in indices])
        by_dim[dim].append(Face(dim=dim, vertex_indices=indices, tight_facets=tight))

    lattice = FaceLattice(
        tuple(tuple(sorted(faces, key=lambda f: f.vertex_indices)) for faces in by_dim)
    )
    logger.debug(f"{polytope.label()}: vetor f {lattice.f_vector}")
    return lattice


# Cones de vértice
def _vertex_index(polytope: LatticePolytope, vertex: Sequence[int]) -> int:
    try:
        return polytope.vertices.index(tuple(vertex))
    except ValueError:
        raise PolytopeError(f"{tuple(vertex)} is not a vertex of {polytope.label()}")


def vertex_cone_generators(
    polytope: LatticePolytope, vertex: Sequence[int]
) -> Tuple[Tuple[int, ...], ...]:
    """Direções primitivas das n arestas que saem do vértice"""
    index = _vertex_index(polytope, vertex)
    lattice = face_lattice(polytope)
    edges = lattice.edges_at(index)
    if len(edges) != polytope.ambient_dim:
        raise NotSimpleError("vertex not simple")
    origin = polytope.vertices[index]
    generators = []
    for edge in edges:
        other = next(i for i in edge.vertex_indices if i != index)
        target = polytope.vertices[other]
        generators.append(primitive([b - a for a, b in zip(origin, target)]))
    return tuple(generators)


# Simplicidade e suavidade
def is_simple(polytope: LatticePolytope) -> bool:
    lattice = face_lattice(polytope)
    return all(
        len(lattice.edges_at(i)) == polytope.ambient_dim
        for i in range(polytope.vertex_count)
    )


def is_smooth(polytope: LatticePolytope) -> bool:
    """Simples e com geradores das arestas formando base de Z^n em cada vértice"""
    if not is_simple(polytope):
        return False
    for vertex in polytope.vertices:
        generators = vertex_cone_generators(polytope, vertex)
        if abs(sp.Matrix(generators).det()) != 1:
            return False
    return True


# Mudanças de coordenadas
def transform_polytope(
    polytope: LatticePolytope,
    matrix: Sequence[Sequence[int]],
    shift: Optional[Sequence[int]] = None,
) -> LatticePolytope:
    """Aplica x -> Ux + b com U unimodular"""
    dim = polytope.ambient_dim
    if len(matrix) != dim or any(len(row) != dim for row in matrix):
        raise PolytopeError(f"transformation must be {dim}x{dim}")
    if abs(sp.Matrix(matrix).det()) != 1:
        raise PolytopeError("transformation is not unimodular")
    shift = tuple(shift) if shift is not None else (0,) * dim
    images = [
        tuple(sum(row[k] * v[k] for k in range(dim)) + shift[r] for r, row in enumerate(matrix))
        for v in polytope.vertices
    ]
    return LatticePolytope(ambient_dim=dim, vertices=tuple(images), name=polytope.name)
