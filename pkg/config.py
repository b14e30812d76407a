import logging
import os
from typing import Optional

from pydantic import BaseModel, Field

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
ENV_PREFIX = "OMEGABOUND_"  # переменные окружения вида OMEGABOUND_MAX_STEPS


class Settings(BaseModel):
    max_steps: int = Field(10_000, gt=0)
    max_bound: int = Field(10 ** 9, gt=0)
    brute_force_budget: int = Field(200_000, gt=0)
    max_exponent: int = Field(100_000, gt=0)
    profile_cache_size: int = Field(65_536, gt=0)
    log_level: str = "WARNING"


# Настройки из окружения поверх значений по умолчанию
def load_settings() -> Settings:
    overrides = {}
    for name in Settings.model_fields:
        value = os.environ.get(ENV_PREFIX + name.upper())
        if value is not None:
            overrides[name] = value
    return Settings(**overrides)


settings = load_settings()


def setup_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(level=level or settings.log_level, format=LOG_FORMAT)
