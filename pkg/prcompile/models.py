from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from exceptions import ArityMismatch
from termlang.models import Program
from termlang.relations import TransitionInvariant


# Константа 0; arity = None - арность определяется контекстом
@dataclass(frozen=True)
class Zero:
    arity: Optional[int] = None


@dataclass(frozen=True)
class Succ:
    pass


@dataclass(frozen=True)
class Proj:
    i: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i <= self.n:
            raise ArityMismatch(f"projection p({self.i}, {self.n}) needs 1 <= i <= n")


@dataclass(frozen=True)
class Comp:
    h: "PRTerm"
    gs: Tuple["PRTerm", ...]

    def __post_init__(self):
        if not self.gs:
            raise ArityMismatch("composition needs at least one inner function")


@dataclass(frozen=True)
class Rec:
    h: "PRTerm"
    g: "PRTerm"


PRTerm = Union[Zero, Succ, Proj, Comp, Rec]


# Арность терма; None, если ее задает только контекст
def infer_arity(t: PRTerm) -> Optional[int]:
    if isinstance(t, Zero):
        return t.arity
    if isinstance(t, Succ):
        return 1
    if isinstance(t, Proj):
        return t.n
    if isinstance(t, Comp):
        h_arity = infer_arity(t.h)
        if h_arity is not None and h_arity != len(t.gs):
            raise ArityMismatch(f"outer function takes {h_arity} arguments, got {len(t.gs)}")
        known = {arity for arity in (infer_arity(g) for g in t.gs) if arity is not None}
        if len(known) > 1:
            raise ArityMismatch(f"inner functions have different arities {sorted(known)}")
        return known.pop() if known else None
    h_arity = infer_arity(t.h)
    g_arity = infer_arity(t.g)
    if h_arity is not None and g_arity is not None and g_arity != h_arity + 2:
        raise ArityMismatch(f"recursion step takes {g_arity} arguments, expected {h_arity + 2}")
    if h_arity is not None:
        return h_arity + 1
    if g_arity is not None:
        if g_arity < 2:
            raise ArityMismatch(f"recursion step takes {g_arity} arguments, expected at least 2")
        return g_arity - 1
    return None


# Подстановка арностей всех Zero под требуемую арность терма
def with_arity(t: PRTerm, arity: int) -> PRTerm:
    if isinstance(t, Zero):
        if t.arity is not None and t.arity != arity:
            raise ArityMismatch(f"constant zero of arity {t.arity} used with {arity} arguments")
        return Zero(arity)
    if isinstance(t, (Succ, Proj)):
        own = infer_arity(t)
        if own != arity:
            raise ArityMismatch(f"{format_term(t)} takes {own} arguments, used with {arity}")
        return t
    if isinstance(t, Comp):
        return Comp(with_arity(t.h, len(t.gs)), tuple(with_arity(g, arity) for g in t.gs))
    if arity < 1:
        raise ArityMismatch("primitive recursion defines functions of at least one argument")
    return Rec(with_arity(t.h, arity - 1), with_arity(t.g, arity + 1))


def resolve(t: PRTerm, arity: Optional[int] = None) -> PRTerm:
    inferred = infer_arity(t)
    if arity is None:
        arity = inferred if inferred is not None else 0
    return with_arity(t, arity)


def format_term(t: PRTerm) -> str:
    if isinstance(t, Zero):
        return "z" if t.arity is None else f"(z {t.arity})"
    if isinstance(t, Succ):
        return "s"
    if isinstance(t, Proj):
        return f"(p {t.i} {t.n})"
    if isinstance(t, Comp):
        return "(comp " + " ".join(format_term(part) for part in (t.h,) + t.gs) + ")"
    return f"(rec {format_term(t.h)} {format_term(t.g)})"


def comp(h: PRTerm, *gs: PRTerm) -> Comp:
    return Comp(h, tuple(gs))


# add(y, x) = x + y
ADD = Rec(Proj(1, 1), comp(Succ(), Proj(2, 3)))
# mult(y, x) = x * y
MULT = Rec(Zero(), comp(ADD, Proj(2, 3), Proj(3, 3)))
# pred(y) = y - 1, усеченно
PRED = Rec(Zero(0), Proj(1, 2))
# sub(y, x) = x - y, усеченно
SUB = Rec(Proj(1, 1), comp(PRED, Proj(2, 3)))
DOUBLE_SUCC = comp(Succ(), Succ())

LIBRARY = {"add": ADD, "mult": MULT, "pred": PRED, "sub": SUB}


@dataclass(frozen=True)
class CompiledUnit:
    program: Program
    invariant: TransitionInvariant
    result_var: str
    input_vars: Tuple[str, ...]

    def inputs(self, args: Sequence[int]) -> dict:
        if len(args) != len(self.input_vars):
            raise ArityMismatch(f"expected {len(self.input_vars)} arguments, got {len(args)}")
        return dict(zip(self.input_vars, args))
