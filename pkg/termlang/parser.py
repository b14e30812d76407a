import re
from typing import List, Tuple, Union

from exceptions import ParseError, ProgramError
from termlang.models import (Assign, Command, Compare, Const, Dec, Expr, If, Inc, Program, Var, While,
                             block_size)

NAME = r"[A-Za-z_][A-Za-z0-9_]*"
NUMBERED_RE = re.compile(r"^\s*(\d+):\s*(.*?)\s*$")
ASSIGN_RE = re.compile(rf"^({NAME})\s*:=\s*(.+)$")
EXPR_RE = re.compile(rf"^(?:(\d+)|({NAME})(?:\s*([+-])\s*1)?)$")
COND_RE = re.compile(rf"^({NAME})\s*(<|=)\s*(\d+|{NAME})$")


# Формат: строка "vars ...", затем "N: команда"; "else" и "end" без номера
def parse_program(text: str) -> Program:
    lines = [line for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]
    if not lines or not lines[0].split() or lines[0].split()[0] != "vars":
        raise ParseError("a program starts with a 'vars' line")
    variables = tuple(lines[0].split()[1:])
    reader = _LineReader(lines[1:])
    body, terminator = reader.block(0)
    if terminator is not None:
        raise ParseError(f"unexpected {terminator!r} at top level")
    try:
        return Program(variables, tuple(body))
    except ProgramError as exc:
        raise ParseError(exc.detail) from exc


class _LineReader:
    def __init__(self, lines: List[str]):
        self.lines = lines
        self.position = 0

    # читает команды до "else"/"end" или конца; location - номер первой команды
    def block(self, location: int) -> Tuple[List[Command], Union[str, None]]:
        commands: List[Command] = []
        while self.position < len(self.lines):
            line = self.lines[self.position].strip()
            if line in ("else", "end"):
                self.position += 1
                return commands, line
            match = NUMBERED_RE.match(line)
            if not match:
                raise ParseError(f"expected a numbered command, got {line!r}")
            if int(match.group(1)) != location:
                raise ParseError(f"command numbered {match.group(1)}, expected {location}")
            self.position += 1
            command = self.command(match.group(2), location)
            commands.append(command)
            location += block_size([command])
        return commands, None

    def command(self, text: str, location: int) -> Command:
        if text.startswith("while "):
            body, terminator = self.block(location + 1)
            if terminator != "end":
                raise ParseError(f"while at {location} is not closed by 'end'")
            return While(parse_cond(text[len("while "):]), tuple(body))
        if text.startswith("if "):
            cond = parse_cond(text[len("if "):])
            then, terminator = self.block(location + 1)
            orelse: List[Command] = []
            if terminator == "else":
                orelse, terminator = self.block(location + 1 + block_size(then))
            if terminator != "end":
                raise ParseError(f"if at {location} is not closed by 'end'")
            return If(cond, tuple(then), tuple(orelse))
        match = ASSIGN_RE.match(text)
        if not match:
            raise ParseError(f"cannot parse command {text!r}")
        return Assign(match.group(1), parse_expr(match.group(2).strip()))


def parse_expr(text: str) -> Expr:
    match = EXPR_RE.match(text)
    if not match:
        raise ParseError(f"expressions are c, x, x + 1 or x - 1, got {text!r}")
    if match.group(1) is not None:
        return Const(int(match.group(1)))
    if match.group(3) == "+":
        return Inc(match.group(2))
    if match.group(3) == "-":
        return Dec(match.group(2))
    return Var(match.group(2))


def parse_cond(text: str) -> Compare:
    match = COND_RE.match(text.strip())
    if not match:
        raise ParseError(f"conditions are 'a < b' or 'a = b', got {text!r}")
    right = match.group(3)
    return Compare(match.group(1), match.group(2), int(right) if right.isdigit() else right)


def format_expr(expr: Expr) -> str:
    if isinstance(expr, Const):
        return str(expr.value)
    if isinstance(expr, Inc):
        return f"{expr.name} + 1"
    if isinstance(expr, Dec):
        return f"{expr.name} - 1"
    return expr.name


def format_cond(cond: Compare) -> str:
    return f"{cond.left} {cond.op} {cond.right}"


def format_program(program: Program) -> str:
    width = len(str(max(program.final_location - 1, 0)))
    lines = ["vars " + " ".join(program.variables)]
    _format_block(program.body, 0, 0, width, lines)
    return "\n".join(lines) + "\n"


def _format_block(commands, location: int, depth: int, width: int, lines: List[str]) -> int:
    indent = "  " * depth
    blank = " " * (width + 2)
    for command in commands:
        prefix = f"{location:>{width}}: {indent}"
        if isinstance(command, Assign):
            lines.append(f"{prefix}{command.target} := {format_expr(command.expr)}")
            location += 1
        elif isinstance(command, While):
            lines.append(f"{prefix}while {format_cond(command.cond)}")
            location = _format_block(command.body, location + 1, depth + 1, width, lines)
            lines.append(f"{blank}{indent}end")
        else:
            lines.append(f"{prefix}if {format_cond(command.cond)}")
            location = _format_block(command.then, location + 1, depth + 1, width, lines)
            if command.orelse:
                lines.append(f"{blank}{indent}else")
                location = _format_block(command.orelse, location, depth + 1, width, lines)
            lines.append(f"{blank}{indent}end")
    return location
