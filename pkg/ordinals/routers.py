import argparse

from cli.router import CommandRouter, arg
from cli.schemas import CliConfig
from ordinals.parser import evaluate_expression, format_ordinal
from ordinals.schemas import OrdinalOut

router = CommandRouter(tags=["Ordinals"])


# вычисление выражения над ординалами
@router.command("ord", help="evaluate an ordinal expression", arguments=[arg("expr")])
def cmd_ord(args: argparse.Namespace, config: CliConfig) -> OrdinalOut:
    value = evaluate_expression(args.expr)
    return OrdinalOut(expression=args.expr, value=format_ordinal(value))
