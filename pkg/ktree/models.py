from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from exceptions import InvalidSlot, LabelNotDecreasing, OccupiedSlot
from ordinals.models import Ordinal

# Адрес слота: последовательность номеров детей из [1, k]; () - корень
Path = Tuple[int, ...]


@dataclass(frozen=True)
class Node:
    label: Ordinal
    children: Tuple[Optional["Node"], ...]

    def __post_init__(self):
        for child in self.children:
            if child is not None and not child.label < self.label:
                raise LabelNotDecreasing(
                    f"child label {child.label} is not below parent label {self.label}"
                )

    @classmethod
    def leaf(cls, label: Ordinal, k: int) -> "Node":
        return cls(label, (None,) * k)

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children if child is not None)


# Элемент k-Tr(alpha); root = None - пустое дерево nil
@dataclass(frozen=True)
class LabelledTree:
    k: int
    root: Optional[Node] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"arity must be at least 1, got {self.k}")
        stack = [self.root] if self.root is not None else []
        while stack:
            node = stack.pop()
            if len(node.children) != self.k:
                raise ValueError(f"node {node.label} has {len(node.children)} slots, expected {self.k}")
            stack.extend(child for child in node.children if child is not None)

    @classmethod
    def empty(cls, k: int) -> "LabelledTree":
        return cls(k)

    @property
    def is_empty(self) -> bool:
        return self.root is None

    def size(self) -> int:
        return self.root.size() if self.root is not None else 0

    def node_at(self, path: Path) -> Optional[Node]:
        node = self.root
        for index in path:
            if node is None:
                return None
            node = node.children[index - 1]
        return node

    def labels_below(self, alpha: Ordinal) -> bool:
        return self.root is None or self.root.label < alpha


# Пустые слоты дерева вместе с меткой владельца (None для корневого слота nil)
def empty_slots(t: LabelledTree) -> Iterator[Tuple[Path, Optional[Ordinal]]]:
    if t.root is None:
        yield (), None
        return
    stack = [((), t.root)]
    while stack:
        path, node = stack.pop()
        for index, child in enumerate(node.children, start=1):
            if child is None:
                yield path + (index,), node.label
            else:
                stack.append((path + (index,), child))


# Добавление одного узла: результат t' > t в смысле one-step extension
def extend(t: LabelledTree, path: Path, label: Ordinal, alpha: Optional[Ordinal] = None) -> LabelledTree:
    if not path:
        if t.root is not None:
            raise OccupiedSlot("the root slot is occupied")
        if alpha is not None and not label < alpha:
            raise LabelNotDecreasing(f"root label {label} is not below {alpha}")
        return LabelledTree(t.k, Node.leaf(label, t.k))
    if t.root is None:
        raise InvalidSlot(f"path {path} goes through the empty root")
    return LabelledTree(t.k, _extend_node(t.root, path, label, t.k))


def _extend_node(node: Node, path: Path, label: Ordinal, k: int) -> Node:
    index = path[0]
    if not 1 <= index <= k:
        raise InvalidSlot(f"slot index {index} outside [1, {k}]")
    child = node.children[index - 1]
    if len(path) == 1:
        if child is not None:
            raise OccupiedSlot(f"slot {index} under {node.label} is occupied")
        if not label < node.label:
            raise LabelNotDecreasing(f"label {label} is not below parent label {node.label}")
        replacement = Node.leaf(label, k)
    else:
        if child is None:
            raise InvalidSlot(f"path goes through the empty slot {index} under {node.label}")
        replacement = _extend_node(child, path[1:], label, k)
    children = node.children[: index - 1] + (replacement,) + node.children[index:]
    return Node(node.label, children)


# Все одношаговые расширения t в k-Tr(m) при конечной границе меток m
def extensions(t: LabelledTree, m: int) -> Iterator[LabelledTree]:
    for path, owner in empty_slots(t):
        bound = m if owner is None else int(owner)
        for label in range(bound):
            yield extend(t, path, Ordinal.of(label))
