import logging
from functools import lru_cache

from ktree.models import LabelledTree, empty_slots
from ordinals.arithmetic import add, exp_base_k, nat_sum_all, power
from ordinals.models import Ordinal

logger = logging.getLogger(__name__)


def geometric_sum(k: int, n: int) -> int:
    # (k^n - 1) / (k - 1) = 1 + k + ... + k^(n-1)
    if k == 1:
        return n
    return (power(k, n) - 1) // (k - 1)


# Высота пустого дерева в k-Tr(alpha) в замкнутой форме
@lru_cache(maxsize=4096)
def height_nil(k: int, alpha: Ordinal) -> Ordinal:
    if k < 1:
        raise ValueError(f"arity must be at least 1, got {k}")
    if k == 1:
        return alpha
    n = alpha.finite_part
    tail = geometric_sum(k, n)
    if alpha.limit_part.is_zero:
        return Ordinal.of(tail)
    return add(exp_base_k(k, alpha), Ordinal.of(tail))


# h_k(T, alpha): натуральная сумма высот по всем пустым слотам;
# слот корня пустого дерева ограничен alpha, остальные меткой отца
def height_tree(t: LabelledTree, k: int, alpha: Ordinal) -> Ordinal:
    if t.k != k:
        raise ValueError(f"tree arity {t.k} differs from requested arity {k}")
    if t.is_empty:
        return height_nil(k, alpha)
    heights = [height_nil(k, owner) for _, owner in empty_slots(t)]
    logger.debug("height of a %d-node tree from %d empty slots", t.size(), len(heights))
    return nat_sum_all(heights)
