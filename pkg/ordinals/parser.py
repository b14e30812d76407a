import re
from typing import List, Optional, Tuple

from exceptions import ParseError
from ordinals.arithmetic import add, exp_base_k, nat_prod_nat, nat_sum
from ordinals.models import ONE, ZERO, Ordinal

TOKEN_RE = re.compile(r"\s*(?:(\d+)|(#\*|exp|[w^()*+#,]))")


def tokenize(text: str) -> List[str]:
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        if not match:
            raise ParseError(f"unexpected character {text[position:].strip()[:1]!r} in {text!r}")
        tokens.append(match.group(1) or match.group(2))
        position = match.end()
    return tokens


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0

    def peek(self):
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def take(self, expected: Optional[str] = None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise ParseError(f"expected {expected or 'a token'} in {self.text!r}, got {token!r}")
        self.position += 1
        return token

    def nat(self) -> int:
        token = self.take()
        if not token.isdigit():
            raise ParseError(f"expected a natural number in {self.text!r}, got {token!r}")
        return int(token)

    def finish(self):
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r} in {self.text!r}")


# Строгая грамматика: принимается только каноническая запись
def parse_ordinal(text: str) -> Ordinal:
    cursor = _Cursor(text)
    value = _strict_ordinal(cursor)
    cursor.finish()
    return value


def _strict_ordinal(cursor: _Cursor) -> Ordinal:
    terms = [_strict_term(cursor)]
    while cursor.peek() == "+":
        cursor.take("+")
        terms.append(_strict_term(cursor))
    if terms == [(ZERO, 0)]:
        return ZERO
    try:
        return Ordinal(tuple(terms))
    except ValueError as exc:
        raise ParseError(f"non-canonical ordinal {cursor.text!r}: {exc}") from exc


def _strict_term(cursor: _Cursor) -> Tuple[Ordinal, int]:
    if cursor.peek() != "w":
        return ZERO, cursor.nat()
    cursor.take("w")
    exponent = ONE
    if cursor.peek() == "^":
        cursor.take("^")
        if cursor.peek() == "(":
            cursor.take("(")
            exponent = _strict_ordinal(cursor)
            cursor.take(")")
        else:
            exponent = Ordinal.of(cursor.nat())
    coefficient = 1
    if cursor.peek() == "*":
        cursor.take("*")
        coefficient = cursor.nat()
    return exponent, coefficient


def format_ordinal(value: Ordinal) -> str:
    if value.is_zero:
        return "0"
    return "+".join(_format_term(exponent, coefficient) for exponent, coefficient in value.terms)


def _format_term(exponent: Ordinal, coefficient: int) -> str:
    if exponent.is_zero:
        return str(coefficient)
    if exponent == ONE:
        base = "w"
    elif exponent.is_finite:
        base = f"w^{int(exponent)}"
    else:
        base = f"w^({format_ordinal(exponent)})"
    return base if coefficient == 1 else f"{base}*{coefficient}"


# Язык команды ord: "+" обычная сумма, "#" натуральная, "#*n" натуральное произведение, exp(k, a)
def evaluate_expression(text: str) -> Ordinal:
    cursor = _Cursor(text)
    value = _natural_sum(cursor)
    cursor.finish()
    return value


def _natural_sum(cursor: _Cursor) -> Ordinal:
    value = _ordinary_sum(cursor)
    while cursor.peek() == "#":
        cursor.take("#")
        value = nat_sum(value, _ordinary_sum(cursor))
    return value


def _ordinary_sum(cursor: _Cursor) -> Ordinal:
    value = _factor(cursor)
    while cursor.peek() == "+":
        cursor.take("+")
        value = add(value, _factor(cursor))
    return value


def _factor(cursor: _Cursor) -> Ordinal:
    value = _primary(cursor)
    if cursor.peek() == "#*":
        cursor.take("#*")
        value = nat_prod_nat(value, cursor.nat())
    return value


def _primary(cursor: _Cursor) -> Ordinal:
    token = cursor.peek()
    if token == "(":
        cursor.take("(")
        value = _natural_sum(cursor)
        cursor.take(")")
        return value
    if token == "exp":
        cursor.take("exp")
        cursor.take("(")
        base = cursor.nat()
        cursor.take(",")
        exponent = _natural_sum(cursor)
        cursor.take(")")
        if base < 2:
            raise ParseError(f"exp base must be at least 2, got {base}")
        return exp_base_k(base, exponent)
    if token == "w":
        cursor.take("w")
        exponent = ONE
        if cursor.peek() == "^":
            cursor.take("^")
            if cursor.peek() == "(":
                cursor.take("(")
                exponent = _natural_sum(cursor)
                cursor.take(")")
            else:
                exponent = Ordinal.of(cursor.nat())
        coefficient = 1
        if cursor.peek() == "*":
            cursor.take("*")
            coefficient = cursor.nat()
        return Ordinal.omega_power(exponent, coefficient) if coefficient else ZERO
    return Ordinal.of(cursor.nat())
