import re
from typing import List

from exceptions import ArityMismatch, ParseError
from prcompile.models import LIBRARY, Comp, PRTerm, Proj, Rec, Succ, Zero, infer_arity

TOKEN_RE = re.compile(r"\s*([()]|[^\s()]+)")


def tokenize(text: str) -> List[str]:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        if not match:
            raise ParseError(f"unexpected input at {position} in {text!r}")
        tokens.append(match.group(1))
        position = match.end()
    return tokens


# s-выражения: z, s, (z n), (p i n), (comp h g1 ... gk), (rec h g) и имена add, mult, pred, sub
def parse_term(text: str) -> PRTerm:
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty term")
    term, position = _term(tokens, 0)
    if position != len(tokens):
        raise ParseError(f"trailing input {tokens[position]!r} in term")
    try:
        infer_arity(term)
    except ArityMismatch as exc:
        raise ParseError(exc.detail) from exc
    return term


def _term(tokens: List[str], position: int):
    if position >= len(tokens):
        raise ParseError("unexpected end of term")
    token = tokens[position]
    if token == "z":
        return Zero(), position + 1
    if token == "s":
        return Succ(), position + 1
    if token in LIBRARY:
        return LIBRARY[token], position + 1
    if token != "(":
        raise ParseError(f"unknown term {token!r}")
    if position + 1 >= len(tokens):
        raise ParseError("unexpected end of term")
    head = tokens[position + 1]
    position += 2
    try:
        if head in ("p", "z"):
            numbers = []
            while position < len(tokens) and tokens[position] != ")":
                numbers.append(_nat(tokens[position]))
                position += 1
            if head == "p" and len(numbers) == 2:
                term = Proj(numbers[0], numbers[1])
            elif head == "z" and len(numbers) == 1:
                term = Zero(numbers[0])
            else:
                raise ParseError(f"({head} ...) got {len(numbers)} numbers")
        elif head in ("comp", "rec"):
            parts = []
            while position < len(tokens) and tokens[position] != ")":
                part, position = _term(tokens, position)
                parts.append(part)
            if head == "rec" and len(parts) == 2:
                term = Rec(parts[0], parts[1])
            elif head == "comp" and len(parts) >= 2:
                term = Comp(parts[0], tuple(parts[1:]))
            else:
                raise ParseError(f"({head} ...) got {len(parts)} subterms")
        else:
            raise ParseError(f"unknown form ({head} ...)")
    except ArityMismatch as exc:
        raise ParseError(exc.detail) from exc
    if position >= len(tokens):
        raise ParseError("missing ')'")
    return term, position + 1


def _nat(token: str) -> int:
    if not token.isdigit():
        raise ParseError(f"expected a natural number, got {token!r}")
    return int(token)
