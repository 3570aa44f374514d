import os
from typing import Optional

from dotenv import find_dotenv, load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.domain.exceptions import ConfigurationError

DEFAULT_MAX_SCAN_POINTS = 10**8


class Settings(BaseModel):
    """Configuração lida do ambiente (e de um .env opcional)"""

    model_config = ConfigDict(frozen=True)

    max_scan_points: int = Field(default=DEFAULT_MAX_SCAN_POINTS, gt=0)
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    default_seed: int = 1

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return level


def load_settings() -> Settings:
    """Carrega o .env (se existir, procurado a partir do diretório atual) e valida as variáveis TORIC_*"""
    load_dotenv(find_dotenv(usecwd=True))
    raw = {
        "max_scan_points": os.getenv("TORIC_MAX_SCAN_POINTS"),
        "log_level": os.getenv("TORIC_LOG_LEVEL"),
        "log_file": os.getenv("TORIC_LOG_FILE") or None,
        "default_seed": os.getenv("TORIC_DEFAULT_SEED"),
    }
    try:
        return Settings(**{k: v for k, v in raw.items() if v is not None})
    except ValidationError as e:
        raise ConfigurationError(f"configuração inválida: {e}")
