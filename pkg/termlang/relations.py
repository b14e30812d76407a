import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from exceptions import ParseError
from termlang.models import State

LOC = "loc"


# Ранговые выражения: натуральные числа, переменные, loc, +, усеченный -, *
@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "RankExpr"
    right: "RankExpr"


RankExpr = Union[Num, Name, BinOp]

PRECEDENCE = {"+": 1, "-": 1, "*": 2}
RANK_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*()]))")


def eval_rank(expr: RankExpr, state: State) -> int:
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Name):
        return state.location if expr.name == LOC else state[expr.name]
    left = eval_rank(expr.left, state)
    right = eval_rank(expr.right, state)
    if expr.op == "+":
        return left + right
    if expr.op == "-":
        return max(0, left - right)
    return left * right


def parse_rank(text: str) -> RankExpr:
    tokens = _rank_tokens(text)
    expr, position = _rank_sum(tokens, 0, text)
    if position != len(tokens):
        raise ParseError(f"trailing input {tokens[position]!r} in rank {text!r}")
    return expr


def _rank_tokens(text: str) -> List[str]:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = RANK_TOKEN_RE.match(text, position)
        if not match:
            raise ParseError(f"unexpected character in rank {text!r} at {position}")
        tokens.append(match.group(match.lastindex))
        position = match.end()
    if not tokens:
        raise ParseError("empty rank expression")
    return tokens


def _rank_sum(tokens: List[str], position: int, text: str):
    left, position = _rank_product(tokens, position, text)
    while position < len(tokens) and tokens[position] in ("+", "-"):
        op = tokens[position]
        right, position = _rank_product(tokens, position + 1, text)
        left = BinOp(op, left, right)
    return left, position


def _rank_product(tokens: List[str], position: int, text: str):
    left, position = _rank_atom(tokens, position, text)
    while position < len(tokens) and tokens[position] == "*":
        right, position = _rank_atom(tokens, position + 1, text)
        left = BinOp("*", left, right)
    return left, position


def _rank_atom(tokens: List[str], position: int, text: str):
    if position >= len(tokens):
        raise ParseError(f"unexpected end of rank {text!r}")
    token = tokens[position]
    if token == "(":
        expr, position = _rank_sum(tokens, position + 1, text)
        if position >= len(tokens) or tokens[position] != ")":
            raise ParseError(f"missing ')' in rank {text!r}")
        return expr, position + 1
    if token.isdigit():
        return Num(int(token)), position + 1
    if token.isidentifier():
        return Name(token), position + 1
    raise ParseError(f"unexpected {token!r} in rank {text!r}")


def format_rank(expr: RankExpr) -> str:
    if isinstance(expr, Num):
        return str(expr.value)
    if isinstance(expr, Name):
        return expr.name
    return f"{_operand(expr.left, expr.op, False)} {expr.op} {_operand(expr.right, expr.op, True)}"


# правый операнд того же уровня берется в скобки: (a + b) - c != a + (b - c)
def _operand(expr: RankExpr, parent_op: str, is_right: bool) -> str:
    text = format_rank(expr)
    if isinstance(expr, BinOp):
        inner, outer = PRECEDENCE[expr.op], PRECEDENCE[parent_op]
        if inner < outer or (is_right and inner == outer):
            return f"({text})"
    return text


def rename_rank(expr: RankExpr, rename: Callable[[str], str]) -> RankExpr:
    if isinstance(expr, Num):
        return expr
    if isinstance(expr, Name):
        return expr if expr.name == LOC else Name(rename(expr.name))
    return BinOp(expr.op, rename_rank(expr.left, rename), rename_rank(expr.right, rename))


# loc -> loc - offset
def shift_rank(expr: RankExpr, offset: int) -> RankExpr:
    if offset == 0 or isinstance(expr, Num):
        return expr
    if isinstance(expr, Name):
        return BinOp("-", expr, Num(offset)) if expr.name == LOC else expr
    return BinOp(expr.op, shift_rank(expr.left, offset), shift_rank(expr.right, offset))


def rank_names(expr: RankExpr) -> FrozenSet[str]:
    if isinstance(expr, Num):
        return frozenset()
    if isinstance(expr, Name):
        return frozenset() if expr.name == LOC else frozenset({expr.name})
    return rank_names(expr.left) | rank_names(expr.right)


# Атом "u op v": op из <, <=, =; операнды - число, v, v', loc, loc'
ATOM_RE = re.compile(r"^\s*(\S+)\s*(<=|<|=)\s*(\S+)\s*$")
OPERAND_RE = re.compile(r"^(?:\d+|[A-Za-z_][A-Za-z0-9_]*'?)$")


@dataclass(frozen=True)
class Atom:
    left: str
    op: str
    right: str

    def __post_init__(self):
        if self.op not in ("<", "<=", "="):
            raise ParseError(f"unknown atom operator {self.op!r}")
        for operand in (self.left, self.right):
            if not OPERAND_RE.match(operand):
                raise ParseError(f"invalid atom operand {operand!r}")

    def holds(self, before: State, after: State) -> bool:
        left = _operand_value(self.left, before, after)
        right = _operand_value(self.right, before, after)
        if self.op == "<":
            return left < right
        if self.op == "<=":
            return left <= right
        return left == right

    def names(self) -> FrozenSet[str]:
        return frozenset(
            operand.rstrip("'") for operand in (self.left, self.right)
            if not operand.isdigit() and operand.rstrip("'") != LOC
        )

    def renamed(self, rename: Callable[[str], str]) -> "Atom":
        return Atom(_rename_operand(self.left, rename), self.op, _rename_operand(self.right, rename))

    # сравнения loc с числом сдвигаются вместе с позициями
    def shifted(self, offset: int) -> "Atom":
        left, right = self.left, self.right
        if left.rstrip("'") == LOC and right.isdigit():
            right = str(int(right) + offset)
        elif right.rstrip("'") == LOC and left.isdigit():
            left = str(int(left) + offset)
        return Atom(left, self.op, right)

    def __str__(self) -> str:
        return f"{self.left} {self.op} {self.right}"


def parse_atom(text: str) -> Atom:
    match = ATOM_RE.match(text)
    if not match:
        raise ParseError(f"invalid atom {text!r}")
    return Atom(match.group(1), match.group(2), match.group(3))


def _operand_value(operand: str, before: State, after: State) -> int:
    if operand.isdigit():
        return int(operand)
    state = after if operand.endswith("'") else before
    name = operand.rstrip("'")
    return state.location if name == LOC else state[name]


def _rename_operand(operand: str, rename: Callable[[str], str]) -> str:
    if operand.isdigit():
        return operand
    name = operand.rstrip("'")
    if name == LOC:
        return operand
    return rename(name) + ("'" if operand.endswith("'") else "")


# Отношение высоты omega: пары (раньше, позже) с убывающим рангом
class RankedRelation(ABC):
    name: str

    @abstractmethod
    def holds(self, before: State, after: State) -> bool:
        ...

    @abstractmethod
    def rank(self, state: State) -> int:
        ...

    def may_start_at(self, location: int) -> bool:
        return True


class PredicateRelation(RankedRelation):
    def __init__(self, name: str, predicate: Callable[[State, State], bool], rank_fn: Callable[[State], int]):
        self.name = name
        self._predicate = predicate
        self._rank_fn = rank_fn

    def holds(self, before: State, after: State) -> bool:
        return self._predicate(before, after)

    def rank(self, state: State) -> int:
        return self._rank_fn(state)


@dataclass(frozen=True)
class ConstraintRelation(RankedRelation):
    name: str
    pre_locations: FrozenSet[int]
    post_locations: FrozenSet[int]
    atoms: Tuple[Atom, ...]
    rank_expr: RankExpr

    def holds(self, before: State, after: State) -> bool:
        return (
            before.location in self.pre_locations
            and after.location in self.post_locations
            and all(atom.holds(before, after) for atom in self.atoms)
        )

    def rank(self, state: State) -> int:
        return eval_rank(self.rank_expr, state)

    def may_start_at(self, location: int) -> bool:
        return location in self.pre_locations

    # перенос во вложение: сдвиг позиций, переименование, рамочные атомы
    def lifted(self, offset: int, rename: Callable[[str], str], frame: Iterable[Atom] = (),
               name: Optional[str] = None) -> "ConstraintRelation":
        return ConstraintRelation(
            name=name or self.name,
            pre_locations=frozenset(location + offset for location in self.pre_locations),
            post_locations=frozenset(location + offset for location in self.post_locations),
            atoms=tuple(atom.renamed(rename).shifted(offset) for atom in self.atoms) + tuple(frame),
            rank_expr=rename_rank(shift_rank(self.rank_expr, offset), rename),
        )

    def with_rank(self, rank_expr: RankExpr) -> "ConstraintRelation":
        return ConstraintRelation(self.name, self.pre_locations, self.post_locations, self.atoms, rank_expr)


def relation(name: str, pre: Iterable[int], post: Iterable[int], atoms: Sequence[str], rank: str) -> ConstraintRelation:
    return ConstraintRelation(name, frozenset(pre), frozenset(post),
                              tuple(parse_atom(atom) for atom in atoms), parse_rank(rank))


@dataclass(frozen=True)
class TransitionInvariant:
    relations: Tuple[RankedRelation, ...]

    def __post_init__(self):
        if not self.relations:
            raise ValueError("a transition invariant needs at least one relation")

    # одно пустое отношение с рангом 0
    @classmethod
    def empty(cls) -> "TransitionInvariant":
        return cls((ConstraintRelation("empty", frozenset(), frozenset(), (), Num(0)),))

    @property
    def k(self) -> int:
        return len(self.relations)

    def ranks(self, state: State) -> Tuple[int, ...]:
        return tuple(item.rank(state) for item in self.relations)

    def replace(self, position: int, item: RankedRelation) -> "TransitionInvariant":
        relations = list(self.relations)
        relations[position] = item
        return TransitionInvariant(tuple(relations))
