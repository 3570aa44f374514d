import logging
from typing import List, Optional, Tuple

from src.application.services import symfun
from src.application.services.involution import binomial
from src.application.services.polytope_geometry import face_lattice, is_simple, is_smooth
from src.application.use_cases.ehrhart_calculator import EhrhartCalculatorUseCase
from src.domain.entities.polytope import LatticePolytope
from src.domain.entities.reports import BrionSummary, DegreeReport, InteriorCountTable
from src.domain.exceptions import ConsistencyError, NotSimpleError

logger = logging.getLogger(__name__)


class DiscriminantDegreeUseCase:
    """Caso de uso para o grau c(P) do discriminante pelas duas fórmulas"""

    def __init__(self, ehrhart: EhrhartCalculatorUseCase):
        self.ehrhart = ehrhart

    def degree_via_volumes(self, polytope: LatticePolytope) -> Tuple[int, Tuple[int, ...]]:
        """
        c(P) = sum_p (-1)^{n-p} (p+1) sum_{F p-face} Vol_Z(F).

        Aceita polítopos não simples: a soma é avaliada formalmente.
        Retorna c(P) e as somas de volumes por dimensão.
        """
        n = polytope.ambient_dim
        lattice = face_lattice(polytope)
        sums = tuple(
            sum(self.ehrhart.normalized_volume(polytope, face) for face in lattice.faces(p))
            for p in range(n + 1)
        )
        degree = sum((-1) ** (n - p) * (p + 1) * sums[p] for p in range(n + 1))
        return degree, sums

    def _require_simple(self, polytope: LatticePolytope) -> None:
        if not is_simple(polytope):
            raise NotSimpleError("polytope not simple")

    def degree_via_interior_points(
        self, polytope: LatticePolytope, table: Optional[InteriorCountTable] = None
    ) -> int:
        """
        c(P) a partir de I_p(i) com p >= m e 1 <= i <= p+1-m.

        Raises:
            NotSimpleError: a fórmula só vale para polítopos simples
        """
        self._require_simple(polytope)
        n = polytope.ambient_dim
        odd = n % 2 == 1
        m = (n + 1) // 2 if odd else n // 2
        needed = n + 1 - m
        if table is None or table.max_dilation < needed:
            table = self.ehrhart.interior_counts(polytope, max_dilation=needed)

        degree = 0
        for p in range(m, n + 1):
            for i in range(1, p + 2 - m):
                if odd:
                    weight = (-1) ** (m - i) * binomial(p + 1, m + i) * 2 * i
                else:
                    weight = (
                        (-1) ** (m + 1 - i)
                        * (binomial(p + 1, m + i) - binomial(p + 1, m + i + 1))
                        * i
                    )
                degree += weight * table.get(p, i)
        return degree

    def defectivity_criterion(self, polytope: LatticePolytope) -> bool:
        """iP sem pontos interiores para todo 1 <= i <= floor(n/2 + 1)"""
        self._require_simple(polytope)
        whole = face_lattice(polytope).polytope_face()
        limit = polytope.ambient_dim // 2 + 1
        return all(
            self.ehrhart.count_interior_points(polytope, whole, i) == 0
            for i in range(1, limit + 1)
        )

    def _brion_summary(self, polytope: LatticePolytope, degree: int) -> BrionSummary:
        covector = symfun.choose_generic_covector(polytope)
        whole = face_lattice(polytope).polytope_face()
        points = symfun.brion_count(polytope, covector)
        volume = symfun.brion_volume(polytope, covector)
        identity = symfun.verify_polytope_symfun_identity(polytope, covector)

        expected_points = self.ehrhart.ehrhart_polynomial(polytope, whole)(1)
        expected_volume = self.ehrhart.normalized_volume(polytope, whole)
        if points != expected_points or volume != expected_volume:
            raise ConsistencyError(
                f"Brion mismatch: count {points} vs {expected_points}, "
                f"volume {volume} vs {expected_volume}"
            )
        if not (identity.equal and identity.lhs == degree):
            raise ConsistencyError(
                f"vertex identity {identity.lhs} = {identity.rhs} does not give c(P) = {degree}"
            )
        return BrionSummary(covector=covector, lattice_points=points, volume=volume, identity=identity)

    def analyze(
        self,
        polytope: LatticePolytope,
        max_dilation: Optional[int] = None,
        require_simple: bool = False,
    ) -> DegreeReport:
        """
        Monta o relatório completo e executa as verificações cruzadas.

        Raises:
            NotSimpleError: require_simple e P não é simples
            ConsistencyError: qualquer verificação cruzada falhou
        """
        logger.info(f"Analisando {polytope.label()}")
        simple = is_simple(polytope)
        if require_simple and not simple:
            raise NotSimpleError("polytope not simple")
        smooth = simple and is_smooth(polytope)

        # Fórmula por volumes e tabela de pontos interiores
        c_volumes, sums = self.degree_via_volumes(polytope)
        table = self.ehrhart.interior_counts(polytope, max_dilation=max_dilation)
        caveats: List[str] = []

        c_interior = None
        defective = None
        if simple:
            c_interior = self.degree_via_interior_points(polytope, table)
            if c_interior != c_volumes:
                logger.error(f"{polytope.label()}: volumes {c_volumes} != interior {c_interior}")
                raise ConsistencyError(
                    f"formula disagreement on a simple polytope: {c_volumes} vs {c_interior}"
                )
            defective = self.defectivity_criterion(polytope)
            if defective and c_volumes != 0:
                raise ConsistencyError("defectivity criterion holds but c(P) != 0")
        else:
            caveats.append("polytope not simple: interior-point formula not applicable")

        # Ressalvas
        if not smooth:
            caveats.append("c(P) is the discriminant degree only for smooth polytopes")
        elif c_volumes == 0:
            caveats.append("c(P) = 0: the toric variety is dual defective")

        brion = self._brion_summary(polytope, c_volumes) if smooth else None
        return DegreeReport(
            c_volumes=c_volumes,
            c_interior=c_interior,
            per_dim_volume_sums=sums,
            interior_table=table,
            defective_criterion_fires=defective,
            is_smooth=smooth,
            is_simple=simple,
            brion=brion,
            caveats=tuple(caveats),
        )
