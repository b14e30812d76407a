import logging
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from exceptions import ArityMismatch, NameCollision, ProgramError
from prcompile.models import Comp, CompiledUnit, PRTerm, Proj, Rec, Succ, Zero, resolve
from termlang.models import Assign, Command, Compare, Const, Expr, If, Inc, Program, Var, While, block_size
from termlang.relations import ConstraintRelation, RankedRelation, TransitionInvariant, parse_atom, relation

logger = logging.getLogger(__name__)

RESULT = "r"
RECURSION_RESULT = "w"


def rename_expr(expr: Expr, rename: Callable[[str], str]) -> Expr:
    if isinstance(expr, Const):
        return expr
    return type(expr)(rename(expr.name))


def rename_commands(commands: Sequence[Command], rename: Callable[[str], str]) -> Tuple[Command, ...]:
    renamed: List[Command] = []
    for command in commands:
        if isinstance(command, Assign):
            renamed.append(Assign(rename(command.target), rename_expr(command.expr, rename)))
            continue
        cond = command.cond
        cond = Compare(rename(cond.left), cond.op, rename(cond.right) if isinstance(cond.right, str) else cond.right)
        if isinstance(command, While):
            renamed.append(While(cond, rename_commands(command.body, rename)))
        else:
            renamed.append(If(cond, rename_commands(command.then, rename), rename_commands(command.orelse, rename)))
    return tuple(renamed)


# Код программы растет последовательно; location - позиция следующей команды
class _Block:
    def __init__(self, start: int = 0):
        self.start = start
        self.commands: List[Command] = []
        self.variables: List[str] = []

    @property
    def location(self) -> int:
        return self.start + block_size(self.commands)

    def add(self, *commands: Command):
        self.commands.extend(commands)

    def declare(self, *names: str):
        for name in names:
            if name not in self.variables:
                self.variables.append(name)


def _prefixer(prefix: str) -> Callable[[str], str]:
    return lambda name: prefix + name


# <f(x_1..x_n), out>: z_i := x_i; CODE[x/z]; out := r, переменные вызываемого под fresh_prefix
def splice_call(callee: CompiledUnit, actual_inputs: Sequence[str], out: str, fresh_prefix: str,
                reserved: Iterable[str] = ()) -> List[Command]:
    if len(actual_inputs) != len(callee.input_vars):
        raise ArityMismatch(f"callee takes {len(callee.input_vars)} inputs, got {len(actual_inputs)}")
    rename = _prefixer(fresh_prefix)
    renamed = {rename(name) for name in callee.program.variables}
    taken = set(actual_inputs) | {out} | set(reserved)
    clashes = sorted(renamed & taken)
    if clashes:
        raise NameCollision(f"prefix {fresh_prefix!r} collides with {clashes}")
    commands: List[Command] = [
        Assign(rename(formal), Var(actual)) for formal, actual in zip(callee.input_vars, actual_inputs)
    ]
    commands.extend(rename_commands(callee.program.body, rename))
    commands.append(Assign(out, Var(rename(callee.result_var))))
    return commands


# progress: позиция растет; ранг N - loc
def _progress(final: int) -> ConstraintRelation:
    return relation("progress", range(final), range(final + 1), ["loc < loc'"], f"{final} - loc")


# Отношения вложенного блока без его собственного progress
def _lift(callee: CompiledUnit, offset: int, rename: Callable[[str], str], frame: Sequence[str],
          label: str) -> List[RankedRelation]:
    frame_atoms = [parse_atom(atom) for atom in frame]
    lifted: List[RankedRelation] = []
    for item in callee.invariant.relations[1:]:
        if not isinstance(item, ConstraintRelation):
            raise ProgramError(f"relation {item.name} is an opaque predicate and cannot be lifted")
        lifted.append(item.lifted(offset, rename, frame_atoms, f"{label}.{item.name}"))
    return lifted


def compile(t: PRTerm) -> CompiledUnit:
    return _compile(resolve(t))


def _compile(t: PRTerm) -> CompiledUnit:
    if isinstance(t, (Zero, Succ, Proj)):
        unit = _compile_base(t)
    elif isinstance(t, Comp):
        unit = _compile_comp(t)
    elif isinstance(t, Rec):
        unit = _compile_rec(t)
    else:
        raise ArityMismatch(f"unknown term {t!r}")
    logger.debug("compiled %s: %d locations, %d relations",
                 type(t).__name__, unit.program.final_location, unit.invariant.k)
    return unit


def _inputs(n: int) -> Tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def _compile_base(t: PRTerm) -> CompiledUnit:
    if isinstance(t, Zero):
        inputs, expr = _inputs(t.arity), Const(0)
    elif isinstance(t, Succ):
        inputs, expr = _inputs(1), Inc("x1")
    else:
        inputs, expr = _inputs(t.n), Var(f"x{t.i}")
    program = Program(inputs + (RESULT,), (Assign(RESULT, expr),))
    return CompiledUnit(program, TransitionInvariant((_progress(1),)), RESULT, inputs)


# a := 1; <g1(x), y1>; a := a + 1; ...; <h(y1..yq), r>
def _compile_comp(t: Comp) -> CompiledUnit:
    inners = [_compile(g) for g in t.gs]
    outer = _compile(t.h)
    q = len(inners)
    inputs = _inputs(len(inners[0].input_vars))
    results = tuple(f"y{i}" for i in range(1, q + 1))
    block = _Block()
    block.declare(*inputs, "a", *results, RESULT)
    reserved = tuple(block.variables)

    block.add(Assign("a", Const(1)))
    lifted: List[RankedRelation] = []
    calls = [(inner, inputs, results[i], f"g{i + 1}*") for i, inner in enumerate(inners)]
    calls.append((outer, results, RESULT, "h*"))
    for phase, (callee, actuals, out, label) in enumerate(calls, start=1):
        if phase > 1:
            block.add(Assign("a", Inc("a")))
        prefix = f"c{phase - 1}_"
        offset = block.location + len(actuals)
        block.add(*splice_call(callee, actuals, out, prefix, reserved))
        block.declare(*(prefix + name for name in callee.program.variables))
        lifted.extend(_lift(callee, offset, _prefixer(prefix), [f"a = {phase}", f"a' = {phase}"], label))

    program = Program(tuple(block.variables), tuple(block.commands))
    final = program.final_location
    phases = relation("T", range(final + 1), range(final + 1),
                      ["a < a'", f"a < {q + 1}", f"a' < {q + 2}"], f"{q + 2} - a")
    invariant = TransitionInvariant((_progress(final), phases, *lifted))
    return CompiledUnit(program, invariant, RESULT, inputs)


# z := 0; <h(x..), w>; z_i := x_i; while z < y { CODE_g[y/z, q/w, x/z]; w := r; z := z + 1 }
def _compile_rec(t: Rec) -> CompiledUnit:
    base = _compile(t.h)
    step_unit = _compile(t.g)
    k = len(base.input_vars)
    xs = _inputs(k)
    zs = tuple(f"z{i}" for i in range(1, k + 1))
    inputs = ("y",) + xs
    block = _Block()
    block.declare(*inputs, "z", RECURSION_RESULT, *zs)
    reserved = tuple(block.variables)

    block.add(Assign("z", Const(0)))
    h_prefix = "c0_"
    h_offset = block.location + k
    block.add(*splice_call(base, xs, RECURSION_RESULT, h_prefix, reserved))
    block.declare(*(h_prefix + name for name in base.program.variables))
    block.add(*(Assign(z, Var(x)) for z, x in zip(zs, xs)))

    # входы шага g подставляются напрямую: счетчик, накопитель, копии x
    g_prefix = "c1_"
    substitution: Dict[str, str] = dict(zip(step_unit.input_vars, ("z", RECURSION_RESULT) + zs))

    def rename_g(name: str) -> str:
        return substitution.get(name, g_prefix + name)

    clashes = sorted({g_prefix + name for name in step_unit.program.variables} & set(block.variables))
    if clashes:
        raise NameCollision(f"prefix {g_prefix!r} collides with {clashes}")
    loop_start = block.location
    g_offset = loop_start + 1
    body = rename_commands(step_unit.program.body, rename_g) + (
        Assign(RECURSION_RESULT, Var(rename_g(step_unit.result_var))),
        Assign("z", Inc("z")),
    )
    block.add(While(Compare("z", "<", "y"), body))
    block.declare(*(rename_g(name) for name in step_unit.program.variables if name not in substitution))

    program = Program(tuple(block.variables), tuple(block.commands))
    final = program.final_location
    relations: List[RankedRelation] = [_progress(final)]
    relations.extend(_lift(base, h_offset, _prefixer(h_prefix), ["z = 0", "z' = 0"], "h*"))
    relations.extend(_lift(step_unit, g_offset, rename_g, ["z' = z", "y' = y", "z < y"], "g*"))
    relations.append(relation("T2", range(final + 1), range(final + 1),
                              ["z < z'", "y' = y", "z < y"], "y - z"))
    return CompiledUnit(program, TransitionInvariant(tuple(relations)), RECURSION_RESULT, inputs)
