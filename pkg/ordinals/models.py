import sys
from dataclasses import dataclass
from enum import IntEnum
from functools import total_ordering
from typing import Tuple

# коэффициенты не ограничены: снимаем предел длины int <-> str
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


# Ординал ниже eps_0 в наследственной канторовой нормальной форме.
# terms: пары (показатель, коэффициент), показатели строго убывают, коэффициенты > 0.
@total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: Tuple[Tuple["Ordinal", int], ...] = ()

    def __post_init__(self):
        for index, (exponent, coefficient) in enumerate(self.terms):
            if not isinstance(exponent, Ordinal):
                raise TypeError(f"exponent must be an Ordinal, got {exponent!r}")
            if not isinstance(coefficient, int) or coefficient < 1:
                raise ValueError(f"coefficient must be a positive integer, got {coefficient!r}")
            if index and cmp(self.terms[index - 1][0], exponent) is not Ordering.GT:
                raise ValueError("exponents must be strictly decreasing")

    @classmethod
    def of(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError(f"ordinals are non-negative, got {n}")
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def omega_power(cls, exponent: "Ordinal", coefficient: int = 1) -> "Ordinal":
        return cls(((exponent, coefficient),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    # предельный: ненулевой и без конечного слагаемого
    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def finite_part(self) -> int:
        if self.terms and self.terms[-1][0].is_zero:
            return self.terms[-1][1]
        return 0

    @property
    def limit_part(self) -> "Ordinal":
        if self.terms and self.terms[-1][0].is_zero:
            return Ordinal(self.terms[:-1])
        return self

    @property
    def leading_exponent(self) -> "Ordinal":
        if not self.terms:
            raise ValueError("zero has no leading exponent")
        return self.terms[0][0]

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.finite_part

    def __lt__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return cmp(self, other) is Ordering.LT

    def __str__(self) -> str:
        from ordinals.parser import format_ordinal
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({str(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


# Лексикографическое сравнение списков членов КНФ
def cmp(a: Ordinal, b: Ordinal) -> Ordering:
    for (exp_a, coef_a), (exp_b, coef_b) in zip(a.terms, b.terms):
        order = cmp(exp_a, exp_b)
        if order is not Ordering.EQ:
            return order
        if coef_a != coef_b:
            return Ordering.LT if coef_a < coef_b else Ordering.GT
    if len(a.terms) == len(b.terms):
        return Ordering.EQ
    return Ordering.LT if len(a.terms) < len(b.terms) else Ordering.GT
