import argparse

from cli.router import CommandRouter, arg
from cli.schemas import CliConfig
from exceptions import LabelNotDecreasing
from ktree.height import height_nil, height_tree
from ktree.parser import format_tree, parse_tree
from ktree.schemas import TreeHeightOut
from ordinals.parser import format_ordinal, parse_ordinal

router = CommandRouter(tags=["Trees"])

DEFAULT_ARITY = 2


# высота пустого дерева или дерева из --tree в k-Tr(alpha)
@router.command("tree-height", help="height of a tree in k-Tr(alpha)", arguments=[
    arg("alpha"),
    arg("--tree", default=None, help="tree in the (label child ... child) format"),
])
def cmd_tree_height(args: argparse.Namespace, config: CliConfig) -> TreeHeightOut:
    k = config.k or DEFAULT_ARITY
    alpha = parse_ordinal(args.alpha)
    if args.tree is None:
        return TreeHeightOut(k=k, alpha=format_ordinal(alpha), height=format_ordinal(height_nil(k, alpha)))
    tree = parse_tree(args.tree, k)
    if not tree.labels_below(alpha):
        raise LabelNotDecreasing(f"root label {tree.root.label} is not below {format_ordinal(alpha)}")
    return TreeHeightOut(
        k=k,
        alpha=format_ordinal(alpha),
        tree=format_tree(tree),
        height=format_ordinal(height_tree(tree, k, alpha)),
    )
