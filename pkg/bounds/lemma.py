import logging
from typing import Optional, Sequence

from bounds.models import SequenceFn
from config import settings
from exceptions import BudgetExceeded, LemmaViolated, LengthMismatch, NoWitness

logger = logging.getLogger(__name__)


# Лексикографический порядок на N^k
def lex_le(u: Sequence[int], v: Sequence[int]) -> bool:
    if len(u) != len(v):
        raise LengthMismatch(f"cannot compare vectors of lengths {len(u)} and {len(v)}")
    return tuple(u) <= tuple(v)


# p из [m, n-1] с sigma1(p) < sigma1(p+1), если sigma1(m) < sigma1(n)
def find_adjacent_increase(sigma1: SequenceFn, m: int, n: int) -> int:
    if not (m < n and sigma1(m) < sigma1(n)):
        raise NoWitness(f"no increase between {m} and {n}: sigma({m}) = {sigma1(m)}, sigma({n}) = {sigma1(n)}")
    for p in range(m, n):
        if sigma1(p) < sigma1(p + 1):
            return p
    raise NoWitness(f"no adjacent increase in [{m}, {n}]")


# g(n): k = 1 -> n + sigma(n) + 1; иначе H(sigma_1(n) + 2, n),
# H(0, x) = x, H(i, x) = g_tail(H(i - 1, x) + 1).
# H строго растет, поэтому BudgetExceeded доказывает g(n) > ceiling
def bound_g(sigma: SequenceFn, n: int, ceiling: Optional[int] = None) -> int:
    ceiling = ceiling if ceiling is not None else settings.max_bound
    return _bound(sigma, n, ceiling, depth=0)


def _bound(sigma: SequenceFn, n: int, ceiling: int, depth: int) -> int:
    head = sigma(n)[0]
    if sigma.k == 1:
        return _checked(n + head + 1, ceiling)
    rounds = head + 2
    # H(i) >= n + 2i
    _checked(n + 2 * rounds, ceiling)
    tail = sigma.tail()
    value = n
    for i in range(1, rounds + 1):
        value = _bound(tail, value + 1, ceiling, depth + 1)
        logger.debug("H(%d, %d) = %d at depth %d", i, n, value, depth)
    return value


def _checked(value: int, ceiling: int) -> int:
    if value > ceiling:
        logger.warning("bound exceeds the ceiling %d", ceiling)
        raise BudgetExceeded(f"bound exceeds {ceiling}", ceiling=ceiling)
    return value


# Наименьшее m из [n, g(n)] с sigma(m) <= sigma(m+1) лексикографически
def find_nondescent(sigma: SequenceFn, n: int, limit: Optional[int] = None,
                    ceiling: Optional[int] = None) -> int:
    if limit is None:
        limit = bound_g(sigma, n, ceiling)
    for m in range(n, limit + 1):
        if lex_le(sigma(m), sigma(m + 1)):
            return m
    raise LemmaViolated(f"sigma strictly descends on the whole interval [{n}, {limit}]")
