from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from exceptions import ProgramError

RESERVED = frozenset({"loc", "vars", "while", "if", "else", "end"})


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


# x + 1
@dataclass(frozen=True)
class Inc:
    name: str


# x - 1, усеченное вычитание
@dataclass(frozen=True)
class Dec:
    name: str


Expr = Union[Const, Var, Inc, Dec]


# left op right, op из "<" и "="; right - имя или константа
@dataclass(frozen=True)
class Compare:
    left: str
    op: str
    right: Union[str, int]

    def __post_init__(self):
        if self.op not in ("<", "="):
            raise ProgramError(f"unknown comparison {self.op!r}")


@dataclass(frozen=True)
class Assign:
    target: str
    expr: Expr


@dataclass(frozen=True)
class While:
    cond: Compare
    body: Tuple["Command", ...]


@dataclass(frozen=True)
class If:
    cond: Compare
    then: Tuple["Command", ...]
    orelse: Tuple["Command", ...] = ()


Command = Union[Assign, While, If]


# Плоские инструкции: одна на позицию программы
@dataclass(frozen=True)
class AssignAt:
    target: str
    expr: Expr
    next: int


@dataclass(frozen=True)
class BranchAt:
    cond: Compare
    then: int
    orelse: int


Instruction = Union[AssignAt, BranchAt]


def block_size(commands: Sequence[Command]) -> int:
    total = 0
    for command in commands:
        if isinstance(command, Assign):
            total += 1
        elif isinstance(command, While):
            total += 1 + block_size(command.body)
        else:
            total += 1 + block_size(command.then) + block_size(command.orelse)
    return total


def expr_names(expr: Expr) -> List[str]:
    return [] if isinstance(expr, Const) else [expr.name]


def cond_names(cond: Compare) -> List[str]:
    return [cond.left] + ([cond.right] if isinstance(cond.right, str) else [])


@dataclass(frozen=True)
class Program:
    variables: Tuple[str, ...]
    body: Tuple[Command, ...]

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ProgramError("variables are declared twice")
        for name in self.variables:
            if not name.isidentifier() or name in RESERVED:
                raise ProgramError(f"invalid variable name {name!r}")
        declared = set(self.variables)
        for command in walk(self.body):
            if isinstance(command, Assign):
                names = [command.target] + expr_names(command.expr)
            else:
                names = cond_names(command.cond)
            if isinstance(command, While) and (command.cond.op != "<" or not isinstance(command.cond.right, str)):
                raise ProgramError("loop conditions compare two variables with <")
            undeclared = [name for name in names if name not in declared]
            if undeclared:
                raise ProgramError(f"undeclared variables {undeclared}")

    @cached_property
    def instructions(self) -> Tuple[Instruction, ...]:
        slots: List[Optional[Instruction]] = [None] * block_size(self.body)
        _lower(self.body, 0, len(slots), slots)
        return tuple(slots)

    @property
    def final_location(self) -> int:
        return len(self.instructions)

    def is_final(self, state: "State") -> bool:
        return state.location >= self.final_location

    @cached_property
    def index(self) -> Dict[str, int]:
        return {name: position for position, name in enumerate(self.variables)}


def walk(commands: Sequence[Command]):
    for command in commands:
        yield command
        if isinstance(command, While):
            yield from walk(command.body)
        elif isinstance(command, If):
            yield from walk(command.then)
            yield from walk(command.orelse)


# Нумерация в прямом порядке; cont - куда идти после блока
def _lower(commands: Sequence[Command], start: int, cont: int, slots: List[Optional[Instruction]]):
    location = start
    for position, command in enumerate(commands):
        size = block_size([command])
        after = location + size if position + 1 < len(commands) else cont
        if isinstance(command, Assign):
            slots[location] = AssignAt(command.target, command.expr, after)
        elif isinstance(command, While):
            body_start = location + 1 if command.body else location
            slots[location] = BranchAt(command.cond, body_start, after)
            _lower(command.body, location + 1, location, slots)
        else:
            then_start = location + 1
            else_start = then_start + block_size(command.then)
            slots[location] = BranchAt(
                command.cond,
                then_start if command.then else after,
                else_start if command.orelse else after,
            )
            _lower(command.then, then_start, after, slots)
            _lower(command.orelse, else_start, after, slots)
        location += size


@dataclass(frozen=True)
class State:
    location: int
    values: Tuple[int, ...]
    variables: Tuple[str, ...] = field(repr=False)

    @classmethod
    def of(cls, variables: Sequence[str], location: int, env: Mapping[str, int]) -> "State":
        missing = [name for name in variables if name not in env]
        extra = [name for name in env if name not in variables]
        if missing or extra:
            raise ProgramError(f"environment does not match the variables: missing {missing}, extra {extra}")
        return cls(location, tuple(env[name] for name in variables), tuple(variables))

    @cached_property
    def env(self) -> Dict[str, int]:
        return dict(zip(self.variables, self.values))

    def __getitem__(self, name: str) -> int:
        return self.env[name]
