from typing import Sequence, Tuple

from exceptions import ArityMismatch
from prcompile.models import Comp, PRTerm, Proj, Rec, Succ, Zero, infer_arity, with_arity


# Эталонная семантика примитивной рекурсии
def eval_pr(t: PRTerm, args: Sequence[int]) -> int:
    arity = infer_arity(t)
    if arity is not None and arity != len(args):
        raise ArityMismatch(f"term takes {arity} arguments, got {len(args)}")
    if any(value < 0 for value in args):
        raise ValueError(f"arguments must be naturals, got {list(args)}")
    return _eval(with_arity(t, len(args)), tuple(args))


def _eval(t: PRTerm, args: Tuple[int, ...]) -> int:
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Succ):
        return args[0] + 1
    if isinstance(t, Proj):
        return args[t.i - 1]
    if isinstance(t, Comp):
        return _eval(t.h, tuple(_eval(g, args) for g in t.gs))
    # f(0, x) = h(x); f(S(y), x) = g(y, f(y, x), x), цикл вместо рекурсии
    y, rest = args[0], args[1:]
    value = _eval(t.h, rest)
    for z in range(y):
        value = _eval(t.g, (z, value) + rest)
    return value
