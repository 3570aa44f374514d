import argparse

from src.application.services.polytope_geometry import face_lattice
from src.application.use_cases.ehrhart_calculator import EhrhartCalculatorUseCase
from src.domain.interfaces.polytope_repository import PolytopeRepository
from src.presentation.commands.base_command import PolytopeCommand
from src.presentation.formatters.report_document import EhrhartDocument


class EhrhartCommand(PolytopeCommand):
    """Vetor de Ehrhart E_k(t) e tabela I_p(i)"""

    def __init__(
        self,
        ehrhart: EhrhartCalculatorUseCase,
        files: PolytopeRepository,
        families: PolytopeRepository,
    ):
        super().__init__(
            name="ehrhart",
            description="Mostra os polinômios E_k(t) e a tabela de pontos interiores I_p(i)",
            files=files,
            families=families,
        )
        self.ehrhart = ehrhart

    def execute(self, args: argparse.Namespace) -> int:
        polytope = self.load_polytope(args)
        document = EhrhartDocument.from_tables(
            polytope,
            face_lattice(polytope),
            self.ehrhart.ehrhart_vector(polytope),
            self.ehrhart.interior_counts(polytope, max_dilation=args.max_dilation),
        )
        print(document.to_json() if args.json else document.to_text())
        return 0
