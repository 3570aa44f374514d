from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

Point = Tuple[int, ...]


@dataclass(frozen=True)
class LatticePolytope:
    """
    Polítopo reticulado de dimensão plena em Z^n, dado pelos vértices.

    Instâncias válidas saem de polytope_geometry.build_polytope, que remove
    pontos redundantes e rejeita entradas que não têm dimensão plena.
    """

    ambient_dim: int
    vertices: Tuple[Point, ...]
    name: Optional[str] = field(default=None, compare=False)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def label(self) -> str:
        return self.name or f"polytope[{self.ambient_dim}d, {self.vertex_count} vertices]"


@dataclass(frozen=True)
class FacetInequality:
    """a·x <= b para todo x em P, com igualdade na faceta; a é primitivo"""

    normal: Tuple[int, ...]
    offset: int

    def evaluate(self, point: Sequence[int]) -> int:
        return sum(a * x for a, x in zip(self.normal, point))

    def slack(self, point: Sequence[int], dilation: int = 1) -> int:
        return dilation * self.offset - self.evaluate(point)

    def is_tight(self, point: Sequence[int]) -> bool:
        return self.slack(point) == 0


@dataclass(frozen=True)
class Face:
    dim: int
    vertex_indices: Tuple[int, ...]
    tight_facets: Tuple[int, ...]

    def contains_vertex(self, index: int) -> bool:
        return index in self.vertex_indices

    def is_subface_of(self, other: "Face") -> bool:
        return set(self.vertex_indices) <= set(other.vertex_indices)


@dataclass(frozen=True)
class FaceLattice:
    faces_by_dim: Tuple[Tuple[Face, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.faces_by_dim) - 1

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(faces) for faces in self.faces_by_dim)

    def faces(self, dim: int) -> Tuple[Face, ...]:
        return self.faces_by_dim[dim]

    def all_faces(self) -> Iterator[Face]:
        for faces in self.faces_by_dim:
            yield from faces

    def polytope_face(self) -> Face:
        return self.faces_by_dim[-1][0]

    def edges_at(self, vertex_index: int) -> List[Face]:
        if self.dimension < 1:
            return []
        return [edge for edge in self.faces_by_dim[1] if edge.contains_vertex(vertex_index)]
