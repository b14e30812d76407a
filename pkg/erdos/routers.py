import argparse

from cli.router import CommandRouter, arg, read_file
from cli.schemas import CliConfig
from erdos.embedding import embed
from erdos.labelling import f_star, to_labelled_tree
from erdos.schemas import EmbedOut, parse_points, tree_to_schema
from ktree.parser import format_tree
from ordinals.arithmetic import to_vector
from ordinals.parser import format_ordinal

router = CommandRouter(tags=["Erdos trees"])


# однородная последовательность -> дерево Эрдеша и f*
@router.command("embed", help="embed a homogeneous sequence into an Erdos tree", arguments=[
    arg("points", help="JSON file with a list of points"),
])
def cmd_embed(args: argparse.Namespace, config: CliConfig) -> EmbedOut:
    points = parse_points(read_file(args.points))
    k = points[0].k if points else (config.k or 1)
    tree = embed(points, k)
    value = f_star(points, k)
    return EmbedOut(
        k=k,
        tree=tree_to_schema(tree),
        labelled_tree=format_tree(to_labelled_tree(tree, k)),
        f_star=format_ordinal(value),
        f_star_vec=list(to_vector(value, k)),
    )
