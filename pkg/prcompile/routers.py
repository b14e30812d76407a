import argparse
import logging

from cli.router import CommandRouter, arg, natural, read_file
from cli.schemas import CliConfig
from exceptions import ArityMismatch, BudgetExceeded, UsageError
from prcompile import compiler
from prcompile.evaluator import eval_pr
from prcompile.models import format_term, resolve
from prcompile.parser import parse_term
from prcompile.schemas import BoundSchema, CompiledUnitSchema, PipelineOut, unit_to_schema
from termlang.checker import check_invariant, step_bound
from termlang.interpreter import initial_state, run_trace
from termlang.schemas import parse_invariant_json, report_to_schema

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Compiler"])


# терм -> программа с инвариантом
@router.command("compile", help="compile a primitive recursive term", arguments=[
    arg("term", help="file with a term in the s-expression syntax"),
])
def cmd_compile(args: argparse.Namespace, config: CliConfig) -> CompiledUnitSchema:
    term = parse_term(read_file(args.term))
    return unit_to_schema(compiler.compile(term))


# compile -> run -> check -> bound
@router.command("pipeline", help="compile, run, check and bound a term on inputs", arguments=[
    arg("term", help="file with a term in the s-expression syntax"),
    arg("inputs", nargs="*", type=natural),
])
def cmd_pipeline(args: argparse.Namespace, config: CliConfig) -> PipelineOut:
    term = parse_term(read_file(args.term))
    try:
        term = resolve(term, len(args.inputs))
    except ArityMismatch as exc:
        raise UsageError(f"{format_term(term)} on {len(args.inputs)} inputs: {exc.detail}") from exc
    unit = compiler.compile(term)
    invariant = parse_invariant_json(read_file(config.invariant)) if config.invariant else unit.invariant
    oracle = eval_pr(term, args.inputs)
    s0 = initial_state(unit.program, unit.inputs(args.inputs))

    try:
        trace = run_trace(unit.program, s0, config.max_steps)
        result = trace[-1][unit.result_var]
    except BudgetExceeded as exc:
        trace = exc.trace
        result = None
    report = check_invariant(unit.program, s0, invariant, config.max_steps)
    steps = len(trace) - 1

    bound = BoundSchema()
    bound_holds = False
    if report.passed and not report.truncated:
        try:
            bound = BoundSchema(value=step_bound(unit.program, s0, invariant, config.max_steps, config.max_bound))
            bound_holds = steps <= bound.value
        except BudgetExceeded:
            logger.info("step bound exceeds %d", config.max_bound)
            bound = BoundSchema(exceeds=config.max_bound)
            bound_holds = steps <= config.max_bound

    return PipelineOut(
        term=format_term(term),
        inputs=list(args.inputs),
        result=result,
        oracle=oracle,
        invariant=report_to_schema(report),
        trace_length=len(trace),
        step_bound=bound,
        bound_holds=bound_holds,
    )
