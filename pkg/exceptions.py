from typing import Optional, Sequence


# Базовая ошибка: как HTTPException, только вместо status_code код выхода CLI
class OmegaBoundError(Exception):
    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class ParseError(OmegaBoundError):
    exit_code = 2


# неверные аргументы команды: число входов не совпадает с арностью
class UsageError(OmegaBoundError):
    exit_code = 2


class BudgetExceeded(OmegaBoundError):
    exit_code = 3

    # ceiling - превышенный предел; для bound_g это доказанная нижняя граница
    def __init__(self, detail: str, ceiling: int, trace: Optional[Sequence] = None):
        super().__init__(detail)
        self.ceiling = ceiling
        self.trace = list(trace) if trace is not None else None


class DomainTooLarge(OmegaBoundError):
    pass


class OccupiedSlot(OmegaBoundError):
    pass


class InvalidSlot(OmegaBoundError):
    pass


class LabelNotDecreasing(OmegaBoundError):
    pass


class NoRelation(OmegaBoundError):
    pass


class NotHomogeneous(OmegaBoundError):
    pass


class EmptySequence(OmegaBoundError):
    pass


class BranchNotInTree(OmegaBoundError):
    pass


class NoWitness(OmegaBoundError):
    pass


class LemmaViolated(OmegaBoundError):
    pass


class LengthMismatch(OmegaBoundError):
    pass


class ArityMismatch(OmegaBoundError):
    pass


class NameCollision(OmegaBoundError):
    pass


class ProgramError(OmegaBoundError):
    pass
