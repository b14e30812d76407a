import logging
from typing import List, Optional, Sequence, Tuple

from config import settings
from exceptions import BudgetExceeded, DomainTooLarge
from ordinals.models import ONE, ZERO, Ordinal, Ordering, cmp

logger = logging.getLogger(__name__)


# Обычная (некоммутативная) сумма: члены a с показателем ниже старшего показателя b поглощаются
def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if b.is_zero:
        return a
    lead_exponent, lead_coefficient = b.terms[0]
    kept = []
    for exponent, coefficient in a.terms:
        order = cmp(exponent, lead_exponent)
        if order is Ordering.GT:
            kept.append((exponent, coefficient))
        elif order is Ordering.EQ:
            kept.append((exponent, coefficient + lead_coefficient))
            return Ordinal(tuple(kept) + b.terms[1:])
        else:
            break
    return Ordinal(tuple(kept) + b.terms)


# Натуральная сумма Гессенберга: покоэффициентное сложение по объединению показателей
def nat_sum(a: Ordinal, b: Ordinal) -> Ordinal:
    merged: List[Tuple[Ordinal, int]] = []
    i = j = 0
    while i < len(a.terms) and j < len(b.terms):
        (exp_a, coef_a), (exp_b, coef_b) = a.terms[i], b.terms[j]
        order = cmp(exp_a, exp_b)
        if order is Ordering.GT:
            merged.append((exp_a, coef_a))
            i += 1
        elif order is Ordering.LT:
            merged.append((exp_b, coef_b))
            j += 1
        else:
            merged.append((exp_a, coef_a + coef_b))
            i += 1
            j += 1
    merged.extend(a.terms[i:])
    merged.extend(b.terms[j:])
    return Ordinal(tuple(merged))


def nat_sum_all(values: Sequence[Ordinal]) -> Ordinal:
    total = ZERO
    for value in values:
        total = nat_sum(total, value)
    return total


# a*k = a (+) ... (+) a, k раз
def nat_prod_nat(a: Ordinal, k: int) -> Ordinal:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k == 0:
        return ZERO
    return Ordinal(tuple((exponent, coefficient * k) for exponent, coefficient in a.terms))


# lambda / omega: конечные показатели уменьшаются на единицу, бесконечные не меняются
def _divide_by_omega(limit: Ordinal) -> Ordinal:
    shifted = []
    for exponent, coefficient in limit.terms:
        if exponent.is_finite:
            exponent = Ordinal.of(int(exponent) - 1)
        shifted.append((exponent, coefficient))
    return Ordinal(tuple(shifted))


# k^n с ограничением на показатель
def power(k: int, n: int, max_exponent: Optional[int] = None) -> int:
    max_exponent = max_exponent if max_exponent is not None else settings.max_exponent
    if n > max_exponent:
        logger.warning("exponent %d is over the budget %d", n, max_exponent)
        raise BudgetExceeded(f"exponent {n} exceeds the budget {max_exponent}", ceiling=max_exponent)
    return k ** n


# k^a при a = lambda + n: omega^(lambda / omega) * k^n
def exp_base_k(k: int, a: Ordinal) -> Ordinal:
    if k < 2:
        raise ValueError(f"base must be at least 2, got {k}")
    n = a.finite_part
    limit = a.limit_part
    if limit.is_zero:
        return Ordinal.of(power(k, n))
    return Ordinal.omega_power(_divide_by_omega(limit), power(k, n))


# Коэффициенты при omega^(k-1), ..., omega^0
def to_vector(a: Ordinal, k: int) -> Tuple[int, ...]:
    coefficients = [0] * k
    for exponent, coefficient in a.terms:
        if not exponent.is_finite or int(exponent) >= k:
            raise DomainTooLarge(f"{a} is not below w^{k}")
        coefficients[k - 1 - int(exponent)] = coefficient
    return tuple(coefficients)


def from_vector(coefficients: Sequence[int]) -> Ordinal:
    k = len(coefficients)
    terms = []
    for position, coefficient in enumerate(coefficients):
        if coefficient < 0:
            raise ValueError(f"coefficients must be non-negative, got {coefficient}")
        if coefficient:
            terms.append((Ordinal.of(k - 1 - position), coefficient))
    return Ordinal(tuple(terms))


def omega_times(n: int) -> Ordinal:
    return Ordinal.omega_power(ONE, n) if n else ZERO
