import pytest
from hypothesis import given, settings

from erdos.embedding import color_of, embed, insert_branch, is_homogeneous, projection
from erdos.labelling import f_star, f_star_vec, label_alpha, node_profile, to_labelled_tree
from erdos.models import ColoredList, ErdosTree, Point, format_branch
from erdos.schemas import tree_from_schema, tree_to_schema
from exceptions import (BranchNotInTree, EmptySequence, LengthMismatch, NoRelation, NotHomogeneous,
                        OccupiedSlot)
from ordinals.models import Ordinal
from ordinals.parser import parse_ordinal
from tests.strategies import homogeneous_sequences


def p(*coords):
    return Point.of(*coords)


def labels_decrease(node):
    for child in node.children:
        if child is None:
            continue
        if not child.label < node.label or not labels_decrease(child):
            return False
    return True


class TestColoredList:
    def test_join(self):
        left = ColoredList.single(p(3, 4))
        joined = left.join(ColoredList.single(p(1, 4)), 1)
        assert joined.elements == (p(3, 4), p(1, 4))
        assert joined.colors == (1,)
        assert ColoredList.nil().join(joined, 2) == joined

    def test_validity(self):
        branch = ColoredList((p(3, 4), p(1, 4), p(2, 0)), (1, 2))
        assert branch.is_valid(2)
        assert not ColoredList((p(3, 4), p(1, 4), p(4, 0)), (1, 2)).is_valid(2)
        assert not branch.is_valid(1)

    def test_parent(self):
        branch = ColoredList((p(3, 4), p(1, 4)), (1,))
        assert branch.parent() == ColoredList.single(p(3, 4))
        assert ColoredList.single(p(3, 4)).parent().is_nil

    def test_format_branch(self):
        assert format_branch(ColoredList((p(3, 4), p(1, 4)), (1,))) == "(3,4)-1-(1,4)"
        assert format_branch(ColoredList.nil()) == "nil"


class TestEmbedding:
    def test_color_of(self):
        assert color_of(p(2, 0), p(3, 4)) == 1
        assert color_of(p(2, 0), p(1, 4)) == 2
        with pytest.raises(NoRelation):
            color_of(p(1, 1), p(0, 0))

    def test_insert_branch_descends_by_color(self):
        tree = embed([p(3, 4), p(1, 4)])
        branch = insert_branch(tree, p(2, 0))
        assert branch.elements == (p(3, 4), p(1, 4), p(2, 0))
        assert branch.colors == (1, 2)

    def test_insert_into_empty_tree(self):
        assert insert_branch(ErdosTree.empty(2), p(5, 5)) == ColoredList.single(p(5, 5))

    def test_homogeneity(self):
        assert is_homogeneous([p(3, 4), p(1, 4), p(2, 0)])
        assert not is_homogeneous([p(0, 0), p(1, 1)])
        with pytest.raises(NotHomogeneous):
            embed([p(0, 0), p(1, 1)])
        with pytest.raises(LengthMismatch):
            embed([p(0, 0), p(1,)])

    def test_projection(self):
        branch = ColoredList((p(3, 4), p(1, 4), p(2, 0)), (1, 2))
        assert projection(branch, 1) == [p(3, 4), p(2, 0)]
        assert projection(branch, 2) == [p(1, 4), p(2, 0)]
        assert projection(ColoredList.nil(), 1) == []

    @settings(max_examples=200, deadline=None)
    @given(homogeneous_sequences(3, max_coord=6, max_size=12))
    def test_projection_decreases_in_its_coordinate(self, s):
        tree = embed(s, 3)
        for branch in tree.branches():
            for h in (1, 2, 3):
                picked = projection(branch, h)
                coords = [point.coords[h - 1] for point in picked]
                assert all(later < earlier for earlier, later in zip(coords, coords[1:]))
                positions = [s.index(point) for point in picked]
                assert positions == sorted(set(positions))

    def test_tree_extend_errors(self):
        tree = embed([p(3, 4)])
        with pytest.raises(OccupiedSlot):
            tree.extend(ColoredList.single(p(1, 1)))
        with pytest.raises(BranchNotInTree):
            tree.extend(ColoredList((p(2, 2), p(1, 1)), (1,)))
        with pytest.raises(NotHomogeneous):
            tree.extend(ColoredList((p(3, 4), p(5, 1)), (1,)))

    def test_schema_round_trip(self):
        tree = embed([p(3, 4), p(1, 4), p(2, 0), p(0, 9)])
        schema = tree_to_schema(tree)
        assert schema[0].points == []
        assert [branch.colors for branch in schema[1:3]] == [[], [1]]
        assert tree_from_schema(2, schema) == tree


class TestLabelling:
    @pytest.mark.parametrize("points, expected", [
        ([(0, 0)], "w*4+2"),
        ([(1, 1)], "w*8+6"),
        ([(1, 1), (0, 1)], "w*8+5"),
    ])
    def test_f_star(self, points, expected):
        assert f_star([Point(coords) for coords in points]) == parse_ordinal(expected)

    def test_f_star_vec(self):
        assert f_star_vec([p(1, 1), p(0, 1)]) == (8, 5)

    def test_labels(self):
        tree = embed([p(1, 1), p(0, 1)])
        root = ColoredList.single(p(1, 1))
        child = root.append(p(0, 1), 1)
        assert label_alpha(tree, root, 2) == parse_ordinal("w+2")
        assert label_alpha(tree, child, 2) == parse_ordinal("w+1")
        profile = node_profile(tree, child)
        assert profile.i == 1
        assert profile.ancestors == (p(1, 1),)

    def test_node_profile_outside_tree(self):
        tree = embed([p(1, 1)])
        with pytest.raises(BranchNotInTree):
            node_profile(tree, ColoredList.single(p(0, 0)))

    def test_empty_sequence(self):
        with pytest.raises(EmptySequence):
            f_star([])
        assert to_labelled_tree(ErdosTree.empty(2), 2).is_empty

    @settings(max_examples=200, deadline=None)
    @given(homogeneous_sequences(2, max_coord=8, max_size=10))
    def test_pipeline_invariants_binary(self, s):
        self._check_pipeline(s, 2)

    @settings(max_examples=200, deadline=None)
    @given(homogeneous_sequences(3, max_coord=8, max_size=10))
    def test_pipeline_invariants_ternary(self, s):
        self._check_pipeline(s, 3)

    def _check_pipeline(self, s, k):
        ceiling = Ordinal.omega_power(Ordinal.of(k))
        previous_tree = ErdosTree.empty(k)
        previous_value = None
        for length in range(1, len(s) + 1):
            tree = embed(s[:length], k)
            # одношаговое расширение предыдущего дерева
            branch = insert_branch(previous_tree, s[length - 1])
            assert previous_tree.extend(branch) == tree
            assert tree.size() == length
            assert all(branch.is_valid(k) for branch in tree.branches())

            labelled = to_labelled_tree(tree, k)
            assert labels_decrease(labelled.root)

            value = f_star(s[:length], k)
            assert value < ceiling
            if previous_value is not None:
                assert value < previous_value
            previous_tree, previous_value = tree, value
