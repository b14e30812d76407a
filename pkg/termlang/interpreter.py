import logging
from typing import List, Mapping, Optional

from config import settings
from exceptions import BudgetExceeded, ProgramError
from termlang.models import AssignAt, Compare, Const, Dec, Expr, Inc, Program, State, Var

logger = logging.getLogger(__name__)


# Начальное состояние: позиция 0, входы заданы, остальные переменные 0
def initial_state(program: Program, inputs: Optional[Mapping[str, int]] = None) -> State:
    env = {name: 0 for name in program.variables}
    for name, value in (inputs or {}).items():
        if name not in env:
            raise ProgramError(f"unknown input variable {name!r}")
        if value < 0:
            raise ProgramError(f"input {name} must be natural, got {value}")
        env[name] = value
    return State.of(program.variables, 0, env)


def eval_expr(expr: Expr, state: State) -> int:
    if isinstance(expr, Const):
        return expr.value
    value = state[expr.name]
    if isinstance(expr, Var):
        return value
    if isinstance(expr, Inc):
        return value + 1
    if isinstance(expr, Dec):
        return max(0, value - 1)
    raise ProgramError(f"unknown expression {expr!r}")


def eval_cond(cond: Compare, state: State) -> bool:
    left = state[cond.left]
    right = state[cond.right] if isinstance(cond.right, str) else cond.right
    return left < right if cond.op == "<" else left == right


# Один шаг; финальное состояние повторяется: t(x) = x
def step(program: Program, state: State) -> State:
    if program.is_final(state):
        return state
    instruction = program.instructions[state.location]
    if isinstance(instruction, AssignAt):
        values = list(state.values)
        values[program.index[instruction.target]] = eval_expr(instruction.expr, state)
        return State(instruction.next, tuple(values), state.variables)
    target = instruction.then if eval_cond(instruction.cond, state) else instruction.orelse
    return State(target, state.values, state.variables)


def run_trace(program: Program, s0: State, max_steps: Optional[int] = None) -> List[State]:
    max_steps = max_steps if max_steps is not None else settings.max_steps
    trace = [s0]
    while not program.is_final(trace[-1]):
        if len(trace) > max_steps:
            logger.warning("no final state within %d steps", max_steps)
            raise BudgetExceeded(f"no final state within {max_steps} steps", ceiling=max_steps, trace=trace)
        trace.append(step(program, trace[-1]))
    logger.debug("trace of %d states", len(trace))
    return trace
