from abc import ABC, abstractmethod

from src.domain.entities.polytope import LatticePolytope


class PolytopeRepository(ABC):
    """Interface para obter polítopos a partir de uma referência externa"""

    @abstractmethod
    def load(self, reference: str) -> LatticePolytope:
        """Carrega o polítopo identificado pela referência (caminho ou família)"""
        pass
