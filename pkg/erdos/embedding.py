import logging
from typing import List, Optional, Sequence

from erdos.models import ColoredList, ErdosTree, Point
from exceptions import LengthMismatch, NoRelation, NotHomogeneous

logger = logging.getLogger(__name__)


def _check_arity(s: Sequence[Point], k: Optional[int]) -> int:
    if k is None:
        k = s[0].k if s else 1
    for point in s:
        if point.k != k:
            raise LengthMismatch(f"point {point} has {point.k} coordinates, expected {k}")
    return k


# Однородность: для всех i < j найдется h с s_j[h] < s_i[h]
def is_homogeneous(s: Sequence[Point], k: Optional[int] = None) -> bool:
    _check_arity(s, k)
    for j, later in enumerate(s):
        for earlier in s[:j]:
            if not any(a < b for a, b in zip(later.coords, earlier.coords)):
                return False
    return True


# Первый цвет h из [1, k] с y_h < x_h
def color_of(y: Point, x: Point) -> int:
    for h, (a, b) in enumerate(zip(y.coords, x.coords), start=1):
        if a < b:
            return h
    raise NoRelation(f"{y} is not below {x} in any coordinate")


# h(T, y): спуск от корня по цвету color_of(y, r), в конце лист y
def insert_branch(t: ErdosTree, y: Point) -> ColoredList:
    branch = ColoredList.nil()
    node = t.root
    color = 0
    while node is not None:
        branch = branch.append(node.point, color)
        color = color_of(y, node.point)
        node = node.children[color - 1]
    return branch.append(y, color)


def embed(s: Sequence[Point], k: Optional[int] = None) -> ErdosTree:
    k = _check_arity(s, k)
    if not is_homogeneous(s, k):
        raise NotHomogeneous("the sequence is not homogeneous")
    tree = ErdosTree.empty(k)
    for y in s:
        tree = tree.extend(insert_branch(tree, y))
    logger.debug("embedded %d points into an Erdos tree of arity %d", len(s), k)
    return tree


# R_h-убывающий подсписок ветви: элементы, за которыми идет ребро цвета h, и последний
def projection(branch: ColoredList, h: int) -> List[Point]:
    if branch.is_nil:
        return []
    picked = [point for point, color in zip(branch.elements, branch.colors) if color == h]
    picked.append(branch.last)
    return picked
