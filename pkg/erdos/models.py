from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from exceptions import BranchNotInTree, InvalidSlot, NotHomogeneous, OccupiedSlot


# Точка (y_1, ..., y_k); отношение R_h: y_h < y'_h
@dataclass(frozen=True)
class Point:
    coords: Tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(value, int) or value < 0 for value in self.coords):
            raise ValueError(f"coordinates must be naturals, got {self.coords}")

    @classmethod
    def of(cls, *coords: int) -> "Point":
        return cls(tuple(coords))

    @property
    def k(self) -> int:
        return len(self.coords)

    # координаты нумеруются с 1, как цвета
    def coord(self, h: int) -> int:
        return self.coords[h - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(value) for value in self.coords) + ")"


@dataclass(frozen=True)
class ColoredList:
    elements: Tuple[Point, ...] = ()
    colors: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.colors) != max(0, len(self.elements) - 1):
            raise ValueError(f"{len(self.elements)} elements need {max(0, len(self.elements) - 1)} colors")
        if any(color < 1 for color in self.colors):
            raise ValueError(f"colors start at 1, got {self.colors}")

    @classmethod
    def nil(cls) -> "ColoredList":
        return cls()

    @classmethod
    def single(cls, x: Point) -> "ColoredList":
        return cls((x,), ())

    # склейка L1 ^_c L2: ребро цвета c между последним элементом L1 и первым L2
    def join(self, other: "ColoredList", color: int) -> "ColoredList":
        if not self.elements:
            return other
        if not other.elements:
            return self
        return ColoredList(self.elements + other.elements, self.colors + (color,) + other.colors)

    def append(self, x: Point, color: int) -> "ColoredList":
        return self.join(ColoredList.single(x), color)

    @property
    def is_nil(self) -> bool:
        return not self.elements

    @property
    def last(self) -> Point:
        if not self.elements:
            raise BranchNotInTree("nil has no last element")
        return self.elements[-1]

    def parent(self) -> "ColoredList":
        if len(self.elements) <= 1:
            return ColoredList.nil()
        return ColoredList(self.elements[:-1], self.colors[:-1])

    # c_i = h влечет x_j R_h x_i для всех j > i
    def is_valid(self, k: int) -> bool:
        for i, color in enumerate(self.colors):
            if color > k:
                return False
            pivot = self.elements[i].coord(color)
            if any(later.coord(color) >= pivot for later in self.elements[i + 1:]):
                return False
        return True


@dataclass(frozen=True)
class ErdosNode:
    point: Point
    children: Tuple[Optional["ErdosNode"], ...]

    @classmethod
    def leaf(cls, point: Point, k: int) -> "ErdosNode":
        return cls(point, (None,) * k)


# k-арное дерево цветных списков, хранится как бор по последовательностям цветов
@dataclass(frozen=True)
class ErdosTree:
    k: int
    root: Optional[ErdosNode] = None

    @classmethod
    def empty(cls, k: int) -> "ErdosTree":
        return cls(k)

    @classmethod
    def from_branches(cls, k: int, branches: Sequence[ColoredList]) -> "ErdosTree":
        tree = cls(k)
        for branch in sorted(branches, key=lambda item: len(item.elements)):
            if branch.is_nil or tree.contains(branch):
                continue
            tree = tree.extend(branch)
        return tree

    def size(self) -> int:
        return sum(1 for branch in self.branches() if not branch.is_nil)

    # ветви в порядке последовательностей цветов, nil первым
    def branches(self) -> Iterator[ColoredList]:
        yield ColoredList.nil()
        if self.root is None:
            return
        stack: List[Tuple[ErdosNode, ColoredList]] = [(self.root, ColoredList.single(self.root.point))]
        while stack:
            node, branch = stack.pop()
            yield branch
            for color in range(self.k, 0, -1):
                child = node.children[color - 1]
                if child is not None:
                    stack.append((child, branch.append(child.point, color)))

    def node_at(self, branch: ColoredList) -> Optional[ErdosNode]:
        if branch.is_nil:
            return None
        node = self.root
        if node is None or node.point != branch.elements[0]:
            return None
        for color, point in zip(branch.colors, branch.elements[1:]):
            if not 1 <= color <= self.k:
                return None
            node = node.children[color - 1]
            if node is None or node.point != point:
                return None
        return node

    def contains(self, branch: ColoredList) -> bool:
        return branch.is_nil or self.node_at(branch) is not None

    # одношаговое расширение: ветвь продолжает существующую ветвь на один узел
    def extend(self, branch: ColoredList) -> "ErdosTree":
        if branch.is_nil:
            raise InvalidSlot("nil is already in every tree")
        if any(point.k != self.k for point in branch.elements):
            raise InvalidSlot(f"points of the branch must have {self.k} coordinates")
        if not branch.is_valid(self.k):
            raise NotHomogeneous(f"branch {format_branch(branch)} is not a valid colored list")
        if len(branch.elements) == 1:
            if self.root is not None:
                raise OccupiedSlot("the root of the tree is occupied")
            return ErdosTree(self.k, ErdosNode.leaf(branch.last, self.k))
        parent = branch.parent()
        if self.node_at(parent) is None:
            raise BranchNotInTree(f"branch {format_branch(parent)} is not in the tree")
        return ErdosTree(self.k, self._rebuild(self.root, branch.colors, branch.last))

    def _rebuild(self, node: ErdosNode, colors: Tuple[int, ...], point: Point) -> ErdosNode:
        index = colors[0] - 1
        child = node.children[index]
        if len(colors) == 1:
            if child is not None:
                raise OccupiedSlot(f"color {colors[0]} under {node.point} is occupied")
            replacement = ErdosNode.leaf(point, self.k)
        else:
            replacement = self._rebuild(child, colors[1:], point)
        return ErdosNode(node.point, node.children[:index] + (replacement,) + node.children[index + 1:])


def format_branch(branch: ColoredList) -> str:
    if branch.is_nil:
        return "nil"
    parts = [str(branch.elements[0])]
    for color, point in zip(branch.colors, branch.elements[1:]):
        parts.append(f"-{color}-{point}")
    return "".join(parts)
