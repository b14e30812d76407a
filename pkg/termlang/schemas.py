from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, TypeAdapter, ValidationError

from cli.schemas import CommandOut
from exceptions import BudgetExceeded, ParseError
from termlang.checker import InvariantReport
from termlang.models import State
from termlang.relations import (ConstraintRelation, RankedRelation, TransitionInvariant, format_rank,
                                parse_atom, parse_rank)


class RelationSchema(BaseModel):
    name: str
    pre_locations: List[int]
    post_locations: List[int]
    atoms: List[str]
    rank: str


class StateSchema(BaseModel):
    location: int
    env: Dict[str, int]


class ViolationSchema(BaseModel):
    kind: str
    earlier: int
    later: int
    relation: Optional[str] = None
    detail: str


class ReportSchema(BaseModel):
    trace_length: int
    pairs_checked: int
    truncated: bool
    violations: List[ViolationSchema]


def relation_to_schema(item: RankedRelation) -> RelationSchema:
    if not isinstance(item, ConstraintRelation):
        raise ParseError(f"relation {item.name} is an opaque predicate and cannot be serialized")
    return RelationSchema(
        name=item.name,
        pre_locations=sorted(item.pre_locations),
        post_locations=sorted(item.post_locations),
        atoms=[str(atom) for atom in item.atoms],
        rank=format_rank(item.rank_expr),
    )


def relation_from_schema(schema: RelationSchema) -> ConstraintRelation:
    return ConstraintRelation(
        name=schema.name,
        pre_locations=frozenset(schema.pre_locations),
        post_locations=frozenset(schema.post_locations),
        atoms=tuple(parse_atom(atom) for atom in schema.atoms),
        rank_expr=parse_rank(schema.rank),
    )


def invariant_to_schema(inv: TransitionInvariant) -> List[RelationSchema]:
    return [relation_to_schema(item) for item in inv.relations]


def invariant_from_schema(schemas: Sequence[RelationSchema]) -> TransitionInvariant:
    if not schemas:
        raise ParseError("an invariant needs at least one relation")
    return TransitionInvariant(tuple(relation_from_schema(schema) for schema in schemas))


_RELATIONS = TypeAdapter(List[RelationSchema])


# файл --invariant: JSON-список отношений
def parse_invariant_json(text: str) -> TransitionInvariant:
    try:
        schemas = _RELATIONS.validate_json(text)
    except ValidationError as exc:
        raise ParseError(f"invalid invariant: {exc}") from exc
    return invariant_from_schema(schemas)


def state_to_schema(state: State) -> StateSchema:
    return StateSchema(location=state.location, env=state.env)


def state_from_schema(schema: StateSchema, variables: Sequence[str]) -> State:
    return State.of(variables, schema.location, schema.env)


def report_to_schema(report: InvariantReport) -> ReportSchema:
    return ReportSchema(
        trace_length=report.trace_length,
        pairs_checked=report.pairs_checked,
        truncated=report.truncated,
        violations=[
            ViolationSchema(kind=item.kind, earlier=item.earlier, later=item.later,
                            relation=item.relation, detail=item.detail)
            for item in report.violations
        ],
    )


class RunOut(CommandOut):
    result_var: str
    result: Optional[int]
    steps: int
    terminated: bool
    trace: List[StateSchema]

    @property
    def passed(self) -> bool:
        return self.terminated

    @property
    def exit_code(self) -> int:
        return 0 if self.terminated else BudgetExceeded.exit_code

    def human(self) -> str:
        if not self.terminated:
            return f"no final state within {self.steps} steps"
        return f"{self.result_var} = {self.result} after {self.steps} steps"


class CheckOut(CommandOut):
    report: ReportSchema

    @property
    def passed(self) -> bool:
        return not self.report.violations and not self.report.truncated

    # нарушение на части трассы важнее исчерпанного бюджета
    @property
    def exit_code(self) -> int:
        if self.report.violations:
            return 1
        return BudgetExceeded.exit_code if self.report.truncated else 0

    def human(self) -> str:
        report = self.report
        lines = [f"trace length {report.trace_length}, {report.pairs_checked} pairs checked"
                 + (" (truncated)" if report.truncated else "")]
        for violation in report.violations:
            lines.append(f"  {violation.kind} ({violation.earlier}, {violation.later})"
                         f" {violation.relation or ''}: {violation.detail}")
        if report.violations:
            lines.append(f"FAIL: {len(report.violations)} violations")
        else:
            lines.append("INCOMPLETE: step budget exhausted" if report.truncated else "PASS")
        return "\n".join(lines)
