from abc import ABC, abstractmethod
from typing import Sequence

from src.domain.entities.polytope import Face, FacetInequality, LatticePolytope


class LatticePointCounter(ABC):
    """Interface para contagem de pontos inteiros em faces dilatadas de um polítopo"""

    @abstractmethod
    def count(
        self,
        polytope: LatticePolytope,
        facets: Sequence[FacetInequality],
        face: Face,
        dilation: int,
        interior: bool = False,
    ) -> int:
        """
        Conta os pontos de dilation*F em Z^n.

        Facetas em face.tight_facets valem com igualdade; as demais como
        desigualdade, estrita quando interior=True (interior relativo).
        """
        pass
