from typing import Annotated, List

from pydantic import BaseModel, Field, TypeAdapter, ValidationError

from cli.schemas import CommandOut
from erdos.models import ColoredList, ErdosTree, Point
from exceptions import ParseError

# координаты - натуральные числа, 1.7 не округляется до 1
Coordinate = Annotated[int, Field(strict=True, ge=0)]


class BranchSchema(BaseModel):
    points: List[List[int]]
    colors: List[int]


# Дерево Эрдеша в JSON: список ветвей в порядке цветов, nil первой
ErdosTreeSchema = List[BranchSchema]

_POINTS = TypeAdapter(List[List[Coordinate]])


def parse_points(text: str) -> List[Point]:
    try:
        raw = _POINTS.validate_json(text)
    except ValidationError as exc:
        raise ParseError(f"expected a JSON list of points: {exc}") from exc
    return [Point(tuple(coords)) for coords in raw]


def branch_to_schema(branch: ColoredList) -> BranchSchema:
    return BranchSchema(points=[list(point.coords) for point in branch.elements], colors=list(branch.colors))


def branch_from_schema(schema: BranchSchema) -> ColoredList:
    return ColoredList(tuple(Point(tuple(coords)) for coords in schema.points), tuple(schema.colors))


def tree_to_schema(tree: ErdosTree) -> ErdosTreeSchema:
    return [branch_to_schema(branch) for branch in tree.branches()]


def tree_from_schema(k: int, schema: ErdosTreeSchema) -> ErdosTree:
    return ErdosTree.from_branches(k, [branch_from_schema(branch) for branch in schema])


class EmbedOut(CommandOut):
    k: int
    tree: ErdosTreeSchema
    labelled_tree: str
    f_star: str
    f_star_vec: List[int]

    def human(self) -> str:
        lines = [f"k: {self.k}", "branches:"]
        for branch in self.tree[1:]:
            lines.append(f"  {branch.points} colors {branch.colors}")
        lines.append(f"labelled tree: {self.labelled_tree}")
        lines.append(f"f*: {self.f_star}  {tuple(self.f_star_vec)}")
        return "\n".join(lines)
