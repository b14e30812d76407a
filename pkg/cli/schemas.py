import argparse
from typing import Literal, Optional

from pydantic import BaseModel, Field

from config import settings


# Pydantic модель общих флагов командной строки
class CliConfig(BaseModel):
    k: Optional[int] = Field(None, ge=1)
    max_steps: int = Field(..., gt=0)
    max_bound: int = Field(..., gt=0)
    format: Literal["human", "structured"] = "human"
    invariant: Optional[str] = None
    verbose: bool = False

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "CliConfig":
        return cls(
            k=namespace.k,
            max_steps=namespace.max_steps if namespace.max_steps is not None else settings.max_steps,
            max_bound=namespace.max_bound if namespace.max_bound is not None else settings.max_bound,
            format=namespace.format,
            invariant=namespace.invariant,
            verbose=namespace.verbose,
        )


# Базовый ответ команды: structured - JSON, human - строки "поле: значение"
class CommandOut(BaseModel):

    @property
    def passed(self) -> bool:
        return True

    # 0 - проверки прошли, 1 - нарушение
    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def human(self) -> str:
        return "\n".join(f"{name}: {value}" for name, value in self.model_dump().items())

    def render(self, output_format: str) -> str:
        if output_format == "structured":
            return self.model_dump_json()
        return self.human()
