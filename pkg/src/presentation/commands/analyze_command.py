import argparse
import logging
from typing import List

from src.application.services.involution import (
    c_via_theorem,
    check_generating_identity,
    h_vector,
    s_transform,
)
from src.application.services.polytope_geometry import face_lattice
from src.application.use_cases.degree_calculator import DiscriminantDegreeUseCase
from src.domain.entities.poly_vector import PolyVector, ScalarVector
from src.domain.entities.reports import DegreeReport
from src.domain.interfaces.polytope_repository import PolytopeRepository
from src.presentation.commands.base_command import PolytopeCommand
from src.presentation.formatters.report_document import ReportDocument, Verdict

logger = logging.getLogger(__name__)


def _verdicts(report: DegreeReport, vector: PolyVector) -> List[Verdict]:
    # as verificações feitas dentro de analyze lançam ConsistencyError se falham
    verdicts = [Verdict(name="Ehrhart reciprocity matches direct interior counts", passed=True)]
    if report.is_simple:
        verdicts.append(Verdict(name="interior-point formula equals volume formula", passed=True))
        verdicts.append(Verdict(name="defectivity criterion consistent with c(P)", passed=True))
        image = s_transform(vector)
        verdicts.append(
            Verdict(
                name="S maps E(t) to E(-t)",
                passed=all(image[p] == vector[p].reflect() for p in range(vector.n + 1)),
            )
        )
    if report.brion is not None:
        verdicts.append(Verdict(name="vertex-cone sums give |P ∩ Z^n| and Vol(P)", passed=True))
        verdicts.append(Verdict(name="vertex identity of constant terms gives c(P)", passed=True))
    verdicts.append(
        Verdict(
            name="generating identity of S at t = 0",
            passed=check_generating_identity(vector).equal,
        )
    )
    verdicts.append(
        Verdict(
            name="c(E) from values at negative integers equals c(P)",
            passed=c_via_theorem(vector) == report.c_volumes,
        )
    )
    return verdicts


class AnalyzeCommand(PolytopeCommand):
    """Relatório completo do grau c(P) do discriminante"""

    def __init__(
        self,
        degree: DiscriminantDegreeUseCase,
        files: PolytopeRepository,
        families: PolytopeRepository,
    ):
        super().__init__(
            name="analyze",
            description="Calcula c(P) pelas duas fórmulas e executa as verificações cruzadas",
            files=files,
            families=families,
        )
        self.degree = degree

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        super().add_arguments(parser)
        parser.add_argument(
            "--require-simple",
            action="store_true",
            help="falha com código 3 se o polítopo não for simples",
        )

    def execute(self, args: argparse.Namespace) -> int:
        polytope = self.load_polytope(args)
        report = self.degree.analyze(
            polytope, max_dilation=args.max_dilation, require_simple=args.require_simple
        )
        lattice = face_lattice(polytope)
        ehrhart = self.degree.ehrhart.ehrhart_vector(polytope)
        vector = PolyVector(ehrhart.entries)
        h = h_vector(ScalarVector.of(lattice.f_vector)) if report.is_simple else None

        document = ReportDocument.from_analysis(
            polytope,
            lattice,
            ehrhart,
            report,
            _verdicts(report, vector),
            h_vector=h,
        )
        print(document.to_json() if args.json else document.to_text())
        if not document.passed:
            logger.error(f"{polytope.label()}: verificação cruzada falhou")
            return 2
        return 0
