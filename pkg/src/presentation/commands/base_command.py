import argparse
from abc import ABC, abstractmethod

from src.domain.entities.polytope import LatticePolytope
from src.domain.interfaces.polytope_repository import PolytopeRepository


class UsageError(Exception):
    """Uso incorreto da linha de comando (código de saída 1)"""


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser que lança UsageError em vez de encerrar o processo com código 2"""

    def error(self, message: str) -> None:
        raise UsageError(message)


class BaseCommand(ABC):
    """Classe base abstrata para os subcomandos da CLI"""

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Declara os argumentos específicos do comando"""
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> int:
        """Executa o comando e retorna o código de saída"""
        pass

    def register(self, subparsers) -> None:
        """Registra o subcomando no parser principal"""
        parser = subparsers.add_parser(self.name, help=self.description, description=self.description)
        parser.add_argument("--json", action="store_true", help="saída estruturada em JSON")
        parser.add_argument(
            "--force", action="store_true", help="desliga o limite de pontos varridos"
        )
        self.add_arguments(parser)
        parser.set_defaults(command=self)


class PolytopeCommand(BaseCommand):
    """Comando que recebe um polítopo por arquivo ou por --family"""

    def __init__(
        self,
        name: str,
        description: str,
        files: PolytopeRepository,
        families: PolytopeRepository,
    ):
        super().__init__(name, description)
        self.files = files
        self.families = families

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("path", nargs="?", help="arquivo .poly com os vértices")
        parser.add_argument("--family", metavar="SPEC", help="família, p.ex. simplex:2:3")
        parser.add_argument(
            "--max-dilation",
            type=int,
            metavar="K",
            help="maior dilatação na tabela I_p(i) (padrão n+1)",
        )

    def load_polytope(self, args: argparse.Namespace) -> LatticePolytope:
        if (args.path is None) == (args.family is None):
            raise UsageError("give exactly one of PATH or --family")
        if args.max_dilation is not None and args.max_dilation < 1:
            raise UsageError("--max-dilation must be at least 1")
        if args.family is not None:
            return self.families.load(args.family)
        return self.files.load(args.path)
