import logging
import sys
from typing import List, Optional

from src.application.use_cases.degree_calculator import DiscriminantDegreeUseCase
from src.application.use_cases.ehrhart_calculator import EhrhartCalculatorUseCase
from src.application.use_cases.verification_suite import VerificationSuiteUseCase
from src.domain.exceptions import (
    ConfigurationError,
    ConsistencyError,
    NotSimpleError,
    ToricDegreeError,
)
from src.infrastructure.config.settings import Settings, load_settings
from src.infrastructure.counting.box_scan_counter import BoxScanCounter
from src.infrastructure.repositories.polytope_file_repository import (
    FamilyPolytopeRepository,
    PolytopeFileRepository,
)
from src.presentation.commands.analyze_command import AnalyzeCommand
from src.presentation.commands.base_command import BaseCommand, CliArgumentParser, UsageError
from src.presentation.commands.ehrhart_command import EhrhartCommand
from src.presentation.commands.verify_command import VerifyCommand

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONSISTENCY = 2
EXIT_HYPOTHESIS = 3

logger = logging.getLogger("toric_degree")


def configure_logging(settings: Settings) -> None:
    """Logs vão para stderr (e para um arquivo opcional); stdout fica só com os relatórios"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        try:
            handlers.append(logging.FileHandler(settings.log_file))
        except OSError as e:
            raise ConfigurationError(f"TORIC_LOG_FILE: cannot open {settings.log_file}: {e.strerror}")
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )


class ToricDegreeCli:
    """Classe principal da CLI de grau de discriminantes tóricos"""

    def __init__(self, settings: Settings):
        self.settings = settings

        # Contagem e repositórios
        self.counter = BoxScanCounter(max_scan_points=settings.max_scan_points)
        self.files = PolytopeFileRepository()
        self.families = FamilyPolytopeRepository()

        # Casos de uso
        self.ehrhart = EhrhartCalculatorUseCase(self.counter)
        self.degree = DiscriminantDegreeUseCase(self.ehrhart)
        self.verification = VerificationSuiteUseCase(self.ehrhart, self.degree)

        self.commands: List[BaseCommand] = []
        self.parser = CliArgumentParser(
            prog="python -m src.main",
            description="Grau do discriminante de variedades tóricas a partir de polítopos reticulados",
        )
        self._register_commands()

    def _register_commands(self) -> None:
        """Registra os subcomandos"""
        self.commands = [
            AnalyzeCommand(degree=self.degree, files=self.files, families=self.families),
            EhrhartCommand(ehrhart=self.ehrhart, files=self.files, families=self.families),
            VerifyCommand(suite=self.verification, default_seed=self.settings.default_seed),
        ]
        subparsers = self.parser.add_subparsers(dest="command_name", required=True)
        for command in self.commands:
            command.register(subparsers)

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Interpreta os argumentos, executa o comando e devolve o código de saída"""
        try:
            args = self.parser.parse_args(argv)
            if args.force:
                self.counter.max_scan_points = None
            return args.command.execute(args)
        except UsageError as e:
            print(f"usage error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except NotSimpleError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_HYPOTHESIS
        except ConsistencyError as e:
            logger.error(f"Verificação cruzada falhou: {e}", exc_info=True)
            print(f"internal cross-check failed: {e}", file=sys.stderr)
            return EXIT_CONSISTENCY
        except ToricDegreeError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = load_settings()
        configure_logging(settings)
    except ConfigurationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return ToricDegreeCli(settings).run(argv)


if __name__ == "__main__":
    sys.exit(main())
