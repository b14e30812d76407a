import argparse

from pydantic import ValidationError

from bounds.lemma import bound_g, find_nondescent
from bounds.schemas import BoundOut, SequenceFile
from cli.router import CommandRouter, arg, read_file
from cli.schemas import CliConfig
from exceptions import ParseError

router = CommandRouter(tags=["Bounds"])


# граница g(n) и первое место, где sigma не убывает
@router.command("bound", help="step bound g(n) and the first non-descent of sigma", arguments=[
    arg("sequence", help="JSON file {\"k\": K, \"values\": [[...], ...]}"),
    arg("--n", type=int, default=0),
])
def cmd_bound(args: argparse.Namespace, config: CliConfig) -> BoundOut:
    try:
        source = SequenceFile.model_validate_json(read_file(args.sequence))
    except ValidationError as exc:
        raise ParseError(f"invalid sequence file: {exc}") from exc
    if args.n < 0:
        raise ParseError(f"n must be natural, got {args.n}")
    sigma = source.to_sequence()
    bound = bound_g(sigma, args.n, config.max_bound)
    witness = find_nondescent(sigma, args.n, limit=bound)
    return BoundOut(
        k=sigma.k,
        n=args.n,
        bound=bound,
        witness=witness,
        witness_values=[list(sigma(witness)), list(sigma(witness + 1))],
    )
