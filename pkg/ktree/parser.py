from typing import Optional

from exceptions import OmegaBoundError, ParseError
from ktree.models import LabelledTree, Node
from ordinals.parser import format_ordinal, parse_ordinal


# Формат "(метка ребенок_1 ... ребенок_k)", "_" - пустой слот
def parse_tree(text: str, k: int) -> LabelledTree:
    reader = _TreeReader(text)
    root = reader.slot(k)
    reader.skip_spaces()
    if reader.position != len(text):
        raise ParseError(f"trailing input at {reader.position} in {text!r}")
    try:
        return LabelledTree(k, root)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_tree(t: LabelledTree) -> str:
    return _format_slot(t.root)


def _format_slot(node: Optional[Node]) -> str:
    if node is None:
        return "_"
    children = " ".join(_format_slot(child) for child in node.children)
    return f"({format_ordinal(node.label)} {children})"


class _TreeReader:
    def __init__(self, text: str):
        self.text = text
        self.position = 0

    def skip_spaces(self):
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def slot(self, k: int) -> Optional[Node]:
        self.skip_spaces()
        if self.text.startswith("_", self.position):
            self.position += 1
            return None
        if not self.text.startswith("(", self.position):
            raise ParseError(f"expected '(' or '_' at {self.position} in {self.text!r}")
        self.position += 1
        self.skip_spaces()
        label = parse_ordinal(self._label_text())
        children = []
        while True:
            self.skip_spaces()
            if self.text.startswith(")", self.position):
                self.position += 1
                break
            if self.position >= len(self.text):
                raise ParseError(f"unbalanced parentheses in {self.text!r}")
            children.append(self.slot(k))
        if len(children) != k:
            raise ParseError(f"node {format_ordinal(label)} has {len(children)} children, expected {k}")
        try:
            return Node(label, tuple(children))
        except OmegaBoundError as exc:
            raise ParseError(exc.detail) from exc

    # метка тянется до пробела или ")" вне скобок самой метки
    def _label_text(self) -> str:
        start = self.position
        depth = 0
        while self.position < len(self.text):
            char = self.text[self.position]
            if char.isspace() and depth == 0:
                break
            if char == "(":
                depth += 1
            elif char == ")":
                if depth == 0:
                    break
                depth -= 1
            self.position += 1
        if start == self.position:
            raise ParseError(f"missing label at {start} in {self.text!r}")
        return self.text[start:self.position]
