import logging
import threading
from collections import OrderedDict
from fractions import Fraction
from math import factorial
from typing import Dict, Optional, Tuple

from src.application.services.polytope_geometry import face_lattice, facets
from src.domain.entities.polynomial import RationalPolynomial, lagrange_interpolate
from src.domain.entities.polytope import Face, LatticePolytope
from src.domain.entities.reports import EhrhartVector, InteriorCountTable
from src.domain.exceptions import ConsistencyError
from src.domain.interfaces.lattice_point_counter import LatticePointCounter

logger = logging.getLogger(__name__)


class EhrhartCalculatorUseCase:
    """Caso de uso para polinômios de Ehrhart das faces e contagens de interior"""

    def __init__(self, counter: LatticePointCounter, max_cached_polynomials: int = 4096):
        self.counter = counter
        # ehr_F por (polítopo, vértices da face); LRU limitado a max_cached_polynomials
        self.max_cached_polynomials = max_cached_polynomials
        self._polynomials: "OrderedDict[Tuple[LatticePolytope, Tuple[int, ...]], RationalPolynomial]" = (
            OrderedDict()
        )
        self._lock = threading.Lock()

    def count_lattice_points(self, polytope: LatticePolytope, face: Face, dilation: int) -> int:
        """|iF ∩ Z^n| por varredura exaustiva"""
        return self.counter.count(polytope, facets(polytope), face, dilation, interior=False)

    def count_interior_points(self, polytope: LatticePolytope, face: Face, dilation: int) -> int:
        """Pontos no interior relativo de iF (estrito nas facetas que não contêm F)"""
        return self.counter.count(polytope, facets(polytope), face, dilation, interior=True)

    def ehrhart_polynomial(self, polytope: LatticePolytope, face: Face) -> RationalPolynomial:
        """
        Interpola ehr_F nos nós t = 0..dim F; ehr_F(0) = 1 para qualquer face.
        """
        key = (polytope, face.vertex_indices)
        with self._lock:
            cached = self._polynomials.get(key)
            if cached is not None:
                self._polynomials.move_to_end(key)
        if cached is not None:
            return cached

        nodes = [(0, 1)] + [
            (i, self.count_lattice_points(polytope, face, i)) for i in range(1, face.dim + 1)
        ]
        polynomial = lagrange_interpolate(nodes)
        with self._lock:
            self._polynomials[key] = polynomial
            while len(self._polynomials) > self.max_cached_polynomials:
                self._polynomials.popitem(last=False)
        return polynomial

    def ehrhart_vector(self, polytope: LatticePolytope) -> EhrhartVector:
        lattice = face_lattice(polytope)
        entries = []
        for k in range(polytope.ambient_dim + 1):
            total = RationalPolynomial.zero()
            for face in lattice.faces(k):
                total = total + self.ehrhart_polynomial(polytope, face)
            entries.append(total)
        return EhrhartVector(tuple(entries))

    def normalized_volume(self, polytope: LatticePolytope, face: Face) -> int:
        """Vol_Z(F) = (dim F)! vezes o coeficiente líder de ehr_F"""
        polynomial = self.ehrhart_polynomial(polytope, face)
        volume = factorial(face.dim) * polynomial.leading_coefficient
        if polynomial.degree != face.dim or volume <= 0 or volume.denominator != 1:
            raise ConsistencyError(
                f"face {face.vertex_indices} of {polytope.label()}: "
                f"ehr = {polynomial} gives volume {volume}"
            )
        return int(volume)

    def interior_counts(
        self, polytope: LatticePolytope, max_dilation: Optional[int] = None
    ) -> InteriorCountTable:
        """
        I_p(i) = (-1)^p E_p(-i), conferido sempre contra a contagem direta.

        Raises:
            ConsistencyError: reciprocidade e contagem direta divergem
        """
        n = polytope.ambient_dim
        max_dilation = n + 1 if max_dilation is None else max_dilation
        vector = self.ehrhart_vector(polytope)
        lattice = face_lattice(polytope)

        counts: Dict[Tuple[int, int], int] = {}
        for p in range(n + 1):
            for i in range(1, max_dilation + 1):
                by_reciprocity = (-1) ** p * vector.entries[p](-i)
                direct = sum(
                    self.count_interior_points(polytope, face, i) for face in lattice.faces(p)
                )
                if by_reciprocity != Fraction(direct):
                    logger.error(
                        f"{polytope.label()}: I_{p}({i}) = {direct} por contagem, "
                        f"{by_reciprocity} por reciprocidade"
                    )
                    raise ConsistencyError(
                        f"reciprocity mismatch at p={p}, i={i}: "
                        f"direct {direct}, reciprocity {by_reciprocity}"
                    )
                counts[(p, i)] = direct
        return InteriorCountTable(counts=counts, max_dilation=max_dilation)
