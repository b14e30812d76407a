import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from erdos.embedding import embed
from erdos.models import ColoredList, ErdosNode, ErdosTree, Point, format_branch
from exceptions import BranchNotInTree, EmptySequence
from ktree.height import height_tree
from ktree.models import LabelledTree, Node
from ordinals.arithmetic import nat_prod_nat, nat_sum, nat_sum_all, omega_times, to_vector
from ordinals.models import OMEGA, Ordinal

logger = logging.getLogger(__name__)


# i - число различных цветов на пути к узлу; ancestors[j] - ближайший предок,
# за которым идет ребро цвета colors[j]
@dataclass(frozen=True)
class NodeProfile:
    i: int
    colors: Tuple[int, ...]
    ancestors: Tuple[Point, ...]


def node_profile(t: ErdosTree, branch: ColoredList) -> NodeProfile:
    if branch.is_nil or not t.contains(branch):
        raise BranchNotInTree(f"branch {format_branch(branch)} is not a node of the tree")
    return _profile(branch)


def _profile(branch: ColoredList) -> NodeProfile:
    lowest = {}
    for point, color in zip(branch.elements, branch.colors):
        lowest[color] = point
    colors = tuple(sorted(lowest))
    return NodeProfile(len(colors), colors, tuple(lowest[color] for color in colors))


def label_alpha(t: ErdosTree, branch: ColoredList, k: int) -> Ordinal:
    return _label(node_profile(t, branch), branch.last, k)


# корень: max(z_i + 1) (+) w*(k-1); j-узел: p^h1_h1 (+) ... (+) p^hj_hj (+) w*(k-j)
def _label(profile: NodeProfile, last: Point, k: int) -> Ordinal:
    if profile.i == 0:
        top = max(value + 1 for value in last.coords)
        return nat_sum(Ordinal.of(top), nat_prod_nat(OMEGA, k - 1))
    parts = [Ordinal.of(point.coord(color)) for color, point in zip(profile.colors, profile.ancestors)]
    return nat_sum(nat_sum_all(parts), nat_prod_nat(OMEGA, k - profile.i))


# Та же форма дерева, слот ребенка = цвет ребра, метки - labelling alpha
def to_labelled_tree(t: ErdosTree, k: int) -> LabelledTree:
    if t.k != k:
        raise ValueError(f"tree arity {t.k} differs from requested arity {k}")
    if t.root is None:
        return LabelledTree.empty(k)
    return LabelledTree(k, _relabel(t.root, ColoredList.single(t.root.point), k))


def _relabel(node: ErdosNode, branch: ColoredList, k: int) -> Node:
    children = []
    for color, child in enumerate(node.children, start=1):
        if child is None:
            children.append(None)
        else:
            children.append(_relabel(child, branch.append(child.point, color), k))
    return Node(_label(_profile(branch), node.point, k), tuple(children))


def f_star(s: Sequence[Point], k: Optional[int] = None) -> Ordinal:
    if not s:
        raise EmptySequence("f* is not defined on the empty sequence")
    k = k if k is not None else s[0].k
    labelled = to_labelled_tree(embed(s, k), k)
    value = height_tree(labelled, k, omega_times(k))
    logger.debug("f* of %d points is %s", len(s), value)
    return value


def f_star_vec(s: Sequence[Point], k: Optional[int] = None) -> Tuple[int, ...]:
    k = k if k is not None else (s[0].k if s else None)
    if k is None:
        raise EmptySequence("f* is not defined on the empty sequence")
    return to_vector(f_star(s, k), k)
