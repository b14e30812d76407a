from typing import List

from pydantic import BaseModel, Field, model_validator

from bounds.models import SequenceFn
from cli.schemas import CommandOut


# Файл sigma: {"k": K, "values": [[...], ...]}, последнее значение повторяется
class SequenceFile(BaseModel):
    k: int = Field(..., ge=1)
    values: List[List[int]] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_lengths(self) -> "SequenceFile":
        for value in self.values:
            if len(value) != self.k:
                raise ValueError(f"value {value} has {len(value)} components, expected {self.k}")
            if any(component < 0 for component in value):
                raise ValueError(f"value {value} has a negative component")
        return self

    def to_sequence(self) -> SequenceFn:
        return SequenceFn.from_values(self.values)


class BoundOut(CommandOut):
    k: int
    n: int
    bound: int
    witness: int
    witness_values: List[List[int]]

    def human(self) -> str:
        return (f"g({self.n}) = {self.bound}\n"
                f"first non-descent at m = {self.witness}: {self.witness_values[0]} <= {self.witness_values[1]}")
