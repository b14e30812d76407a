from typing import List, Optional

from pydantic import BaseModel, ValidationError

from cli.schemas import CommandOut
from exceptions import BudgetExceeded, ParseError
from prcompile.models import CompiledUnit
from termlang.parser import format_program, parse_program
from termlang.schemas import RelationSchema, ReportSchema, invariant_from_schema, invariant_to_schema


# Скомпилированный блок: {program, invariant, result_var, input_vars}
class CompiledUnitSchema(CommandOut):
    program: str
    invariant: List[RelationSchema]
    result_var: str
    input_vars: List[str]

    def human(self) -> str:
        lines = [self.program.rstrip(), "", f"result: {self.result_var}", "invariant:"]
        for item in self.invariant:
            atoms = ", ".join(item.atoms) or "true"
            lines.append(f"  {item.name}: [{atoms}] rank {item.rank}")
        return "\n".join(lines)


def unit_to_schema(unit: CompiledUnit) -> CompiledUnitSchema:
    return CompiledUnitSchema(
        program=format_program(unit.program),
        invariant=invariant_to_schema(unit.invariant),
        result_var=unit.result_var,
        input_vars=list(unit.input_vars),
    )


def unit_from_schema(schema: CompiledUnitSchema) -> CompiledUnit:
    return CompiledUnit(
        program=parse_program(schema.program),
        invariant=invariant_from_schema(schema.invariant),
        result_var=schema.result_var,
        input_vars=tuple(schema.input_vars),
    )


def parse_unit_json(text: str) -> CompiledUnit:
    try:
        schema = CompiledUnitSchema.model_validate_json(text)
    except ValidationError as exc:
        raise ParseError(f"invalid compiled unit: {exc}") from exc
    return unit_from_schema(schema)


# value = None и exceeds = max_bound: граница больше потолка
class BoundSchema(BaseModel):
    value: Optional[int] = None
    exceeds: Optional[int] = None


class PipelineOut(CommandOut):
    term: str
    inputs: List[int]
    result: Optional[int]
    oracle: int
    invariant: ReportSchema
    trace_length: int
    step_bound: BoundSchema
    bound_holds: bool

    @property
    def passed(self) -> bool:
        return (self.result == self.oracle and not self.invariant.violations
                and not self.invariant.truncated and self.bound_holds)

    # нарушение важнее исчерпанного бюджета шагов
    @property
    def exit_code(self) -> int:
        if self.invariant.violations:
            return 1
        if self.invariant.truncated or self.result is None:
            return BudgetExceeded.exit_code
        return 0 if self.passed else 1

    def human(self) -> str:
        if self.step_bound.value is not None:
            bound = str(self.step_bound.value)
        elif self.step_bound.exceeds is not None:
            bound = f"> {self.step_bound.exceeds}"
        else:
            bound = "not computed"
        if self.exit_code == BudgetExceeded.exit_code:
            verdict = "INCOMPLETE: step budget exhausted"
        else:
            verdict = "PASS" if self.passed else "FAIL"
        lines = [
            f"term: {self.term}",
            f"inputs: {self.inputs}",
            f"result: {self.result} (oracle {self.oracle})",
            f"invariant: {len(self.invariant.violations)} violations in {self.invariant.pairs_checked} pairs",
            f"trace length: {self.trace_length}",
            f"step bound: {bound}",
        ]
        lines.extend(f"  {item.kind} ({item.earlier}, {item.later}) {item.relation or ''}: {item.detail}"
                     for item in self.invariant.violations[:20])
        lines.append(verdict)
        return "\n".join(lines)
