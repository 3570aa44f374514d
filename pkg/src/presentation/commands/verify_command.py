import argparse
import logging

from src.application.use_cases.verification_suite import VerificationSuiteUseCase
from src.presentation.commands.base_command import BaseCommand
from src.presentation.formatters.report_document import VerifyDocument

logger = logging.getLogger(__name__)


class VerifyCommand(BaseCommand):
    """Executa as suítes de propriedades com semente fixa"""

    def __init__(self, suite: VerificationSuiteUseCase, default_seed: int = 1):
        super().__init__(
            name="verify",
            description="Executa uma suíte de propriedades (ou 'all') de forma determinística",
        )
        self.suite = suite
        self.default_seed = default_seed

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("suite", choices=self.suite.available_suites())
        parser.add_argument("--seed", type=int, default=None, metavar="N")

    def execute(self, args: argparse.Namespace) -> int:
        seed = self.default_seed if args.seed is None else args.seed
        document = VerifyDocument.from_reports(seed, self.suite.run(args.suite, seed))
        print(document.to_json() if args.json else document.to_text())
        if not document.passed:
            failed = [s.suite for s in document.suites if not s.passed]
            logger.error(f"Suítes com falhas: {', '.join(failed)}")
            return 2
        return 0
