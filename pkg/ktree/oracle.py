import logging
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from config import settings
from exceptions import BudgetExceeded
from ktree.models import LabelledTree, Node, empty_slots, extensions
from ordinals.models import Ordinal

logger = logging.getLogger(__name__)


# Число деревьев в слоте с границей меток m: S(0) = 1, S(l+1) = S(l) + S(l)^k
def tree_count(k: int, m: int) -> int:
    count = 1
    for _ in range(m):
        count += count ** k
    return count


def _subtrees(k: int, bound: int) -> List[Optional[Node]]:
    trees: List[Optional[Node]] = [None]
    for label in range(bound):
        below = _subtrees(k, label)
        for children in product(below, repeat=k):
            trees.append(Node(Ordinal.of(label), children))
    return trees


def enumerate_trees(k: int, m: int) -> Iterator[LabelledTree]:
    for root in _subtrees(k, m):
        yield LabelledTree(k, root)


# Точная высота каждого дерева k-Tr(m) по порядку расширения: перебор всего пространства
def brute_force_height(k: int, m: int, budget: Optional[int] = None) -> Dict[LabelledTree, int]:
    budget = budget if budget is not None else settings.brute_force_budget
    total = tree_count(k, m)
    if total > budget:
        raise BudgetExceeded(f"{k}-Tr({m}) holds {total} trees, budget is {budget}", ceiling=budget)
    logger.debug("enumerating %d trees of %d-Tr(%d)", total, k, m)

    trees = sorted(enumerate_trees(k, m), key=LabelledTree.size, reverse=True)
    heights: Dict[LabelledTree, int] = {}
    # от больших деревьев к меньшим: все расширения уже посчитаны
    for tree in trees:
        heights[tree] = max((heights[bigger] + 1 for bigger in extensions(tree, m)), default=0)
    return heights


def slot_bounds(t: LabelledTree, m: int) -> Tuple[int, ...]:
    return tuple(m if owner is None else int(owner) for _, owner in empty_slots(t))


# Высота леса независимых пустых слотов; состояние - мультимножество границ меток
def profile_height(k: int, bounds: Iterable[int]) -> int:
    return _profile_height(k, _normalize(bounds))


def _normalize(bounds: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(bound for bound in bounds if bound > 0))


@lru_cache(maxsize=settings.profile_cache_size)
def _profile_height(k: int, bounds: Tuple[int, ...]) -> int:
    best = 0
    for position, bound in enumerate(bounds):
        if position and bounds[position - 1] == bound:
            continue
        rest = bounds[:position] + bounds[position + 1:]
        for label in range(bound):
            best = max(best, 1 + _profile_height(k, _normalize(rest + (label,) * k)))
    return best
