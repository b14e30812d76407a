import argparse
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

from cli.schemas import CliConfig, CommandOut
from config import setup_logging
from exceptions import OmegaBoundError, ParseError

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, CliConfig], CommandOut]


@dataclass(frozen=True)
class Argument:
    flags: Tuple[str, ...]
    options: Dict[str, Any]


def arg(*flags: str, **options: Any) -> Argument:
    return Argument(flags, options)


@dataclass
class Command:
    name: str
    handler: Handler
    help: str = ""
    arguments: List[Argument] = field(default_factory=list)
    tags: List[str] = field(default_factory=list)


# Аналог APIRouter: команды одного домена, подключаются через include_router
class CommandRouter:
    def __init__(self, prefix: str = "", tags: Optional[List[str]] = None):
        self.prefix = prefix
        self.tags = list(tags or [])
        self.commands: List[Command] = []

    def command(self, name: str, help: str = "", arguments: Sequence[Argument] = ()):
        def decorator(handler: Handler) -> Handler:
            self.commands.append(Command(self.prefix + name, handler, help, list(arguments), list(self.tags)))
            return handler
        return decorator


# тип позиционных входов: натуральные числа
def natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a natural number") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative, inputs are naturals")
    return value


def common_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--k", type=int, default=None, help="arity / number of relations")
    parser.add_argument("--max-steps", type=int, default=None, help="interpreter step budget")
    parser.add_argument("--max-bound", type=int, default=None, help="ceiling for step bounds")
    parser.add_argument("--format", choices=["human", "structured"], default="human")
    parser.add_argument("--invariant", default=None, help="JSON file with replacement relations")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


class CommandApp:
    def __init__(self, title: str):
        self.title = title
        self.commands: Dict[str, Command] = {}

    def include_router(self, router: CommandRouter, tags: Optional[List[str]] = None):
        for command in router.commands:
            if command.name in self.commands:
                raise ValueError(f"command {command.name!r} is registered twice")
            command.tags.extend(tags or [])
            self.commands[command.name] = command

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=self.title.lower())
        subparsers = parser.add_subparsers(dest="command", required=True)
        parent = common_parser()
        for command in self.commands.values():
            sub = subparsers.add_parser(command.name, help=command.help, parents=[parent])
            for argument in command.arguments:
                sub.add_argument(*argument.flags, **argument.options)
        return parser

    # Код выхода: 0 - все проверки прошли, 1 - нарушение, 2 - разбор, 3 - бюджет
    def run(self, argv: Optional[Sequence[str]] = None,
            out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
        out = out or sys.stdout
        err = err or sys.stderr
        parser = self.build_parser()
        try:
            namespace = parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
        setup_logging("DEBUG" if namespace.verbose else None)
        try:
            config = CliConfig.from_namespace(namespace)
        except ValidationError as exc:
            err.write(f"error: {exc}\n")
            return 2

        command = self.commands[namespace.command]
        logger.debug("running %s with %s", command.name, config)
        try:
            result = command.handler(namespace, config)
        except OmegaBoundError as exc:
            logger.debug("%s failed: %s", command.name, exc.detail)
            err.write(f"error: {exc.detail}\n")
            return exc.exit_code

        out.write(result.render(config.format) + "\n")
        return result.exit_code


def read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
