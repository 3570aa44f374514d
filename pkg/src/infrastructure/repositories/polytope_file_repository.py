import json
import logging
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, StrictInt, ValidationError

from src.application.services.polytope_families import family_from_spec
from src.application.services.polytope_geometry import build_polytope
from src.domain.entities.polytope import LatticePolytope
from src.domain.exceptions import PolytopeError, PolytopeFileError
from src.domain.interfaces.polytope_repository import PolytopeRepository

logger = logging.getLogger(__name__)


class PolytopeFile(BaseModel):
    """Formato de arquivo: {"name": "...", "vertices": [[0, 0], [1, 0], ...]}"""

    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    vertices: List[List[StrictInt]]


def _location(loc) -> str:
    text = ""
    for part in loc:
        text += f"[{part}]" if isinstance(part, int) else (f".{part}" if text else str(part))
    return text


class PolytopeFileRepository(PolytopeRepository):
    """Implementação do repositório de polítopos em arquivos JSON (*.poly)"""

    def __init__(self, base_dir: str = "."):
        self.base_dir = Path(base_dir)

    def _resolve(self, reference: str) -> Path:
        path = Path(reference)
        return path if path.is_absolute() else self.base_dir / path

    def parse(self, text: str, source: str = "<string>") -> PolytopeFile:
        """
        Raises:
            PolytopeFileError: JSON inválido (com linha e coluna) ou coordenada
                que não é inteira (com o caminho vertices[i][j])
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PolytopeFileError(e.msg, f"{source}:{e.lineno}:{e.colno}")
        try:
            return PolytopeFile.model_validate(data)
        except ValidationError as e:
            error = e.errors()[0]
            raise PolytopeFileError(error["msg"], f"{source}: {_location(error['loc'])}")

    def load(self, reference: str) -> LatticePolytope:
        path = self._resolve(reference)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise PolytopeFileError(f"cannot read file: {e.strerror}", str(path))
        except UnicodeDecodeError as e:
            raise PolytopeFileError(f"invalid UTF-8 ({e.reason})", f"{path}: byte {e.start}")
        document = self.parse(text, source=str(path))
        try:
            polytope = build_polytope(document.vertices, name=document.name or path.stem)
        except PolytopeError as e:
            raise PolytopeFileError(str(e), str(path))
        logger.info(f"Polítopo {polytope.label()} carregado de {path}")
        return polytope


class FamilyPolytopeRepository(PolytopeRepository):
    """Polítopos gerados pela mini-gramática de famílias (nome:params)"""

    def load(self, reference: str) -> LatticePolytope:
        return family_from_spec(reference)
