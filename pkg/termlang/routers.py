import argparse
from typing import Dict, List

from cli.router import CommandRouter, arg, natural, read_file
from cli.schemas import CliConfig
from exceptions import ArityMismatch, BudgetExceeded, UsageError
from prcompile.models import CompiledUnit
from prcompile.schemas import parse_unit_json
from termlang.checker import check_invariant
from termlang.interpreter import initial_state, run_trace
from termlang.schemas import CheckOut, RunOut, parse_invariant_json, report_to_schema, state_to_schema

router = CommandRouter(tags=["Programs"])

UNIT_ARGUMENTS = [
    arg("unit", help="compiled unit JSON produced by the compile command"),
    arg("inputs", nargs="*", type=natural),
]


def bind_inputs(unit: CompiledUnit, inputs: List[int]) -> Dict[str, int]:
    try:
        return unit.inputs(inputs)
    except ArityMismatch as exc:
        raise UsageError(exc.detail) from exc


# запуск скомпилированной программы
@router.command("run", help="run a compiled program", arguments=UNIT_ARGUMENTS)
def cmd_run(args: argparse.Namespace, config: CliConfig) -> RunOut:
    unit = parse_unit_json(read_file(args.unit))
    s0 = initial_state(unit.program, bind_inputs(unit, args.inputs))
    try:
        trace = run_trace(unit.program, s0, config.max_steps)
        terminated = True
    except BudgetExceeded as exc:
        trace = exc.trace
        terminated = False
    return RunOut(
        result_var=unit.result_var,
        result=trace[-1][unit.result_var] if terminated else None,
        steps=len(trace) - 1,
        terminated=terminated,
        trace=[state_to_schema(state) for state in trace],
    )


# проверка инварианта на всех парах трассы
@router.command("check", help="check the transition invariant on a bounded trace", arguments=UNIT_ARGUMENTS)
def cmd_check(args: argparse.Namespace, config: CliConfig) -> CheckOut:
    unit = parse_unit_json(read_file(args.unit))
    invariant = parse_invariant_json(read_file(config.invariant)) if config.invariant else unit.invariant
    s0 = initial_state(unit.program, bind_inputs(unit, args.inputs))
    report = check_invariant(unit.program, s0, invariant, config.max_steps)
    return CheckOut(report=report_to_schema(report))
