from typing import Callable, Dict, Sequence, Tuple

from exceptions import EmptySequence, LengthMismatch

Vector = Tuple[int, ...]


# sigma: N -> N^k, значения запоминаются
class SequenceFn:
    def __init__(self, k: int, fn: Callable[[int], Sequence[int]]):
        if k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        self.k = k
        self._fn = fn
        self._memo: Dict[int, Vector] = {}

    def __call__(self, n: int) -> Vector:
        if n < 0:
            raise ValueError(f"sequence index must be natural, got {n}")
        value = self._memo.get(n)
        if value is None:
            value = tuple(self._fn(n))
            if len(value) != self.k:
                raise LengthMismatch(f"sigma({n}) = {value} has {len(value)} components, expected {self.k}")
            if any(component < 0 for component in value):
                raise ValueError(f"sigma({n}) = {value} has a negative component")
            self._memo[n] = value
        return value

    # конечный префикс, последнее значение повторяется
    @classmethod
    def from_values(cls, values: Sequence[Sequence[int]]) -> "SequenceFn":
        if not values:
            raise EmptySequence("a sequence needs at least one value")
        frozen = [tuple(value) for value in values]
        return cls(len(frozen[0]), lambda n: frozen[min(n, len(frozen) - 1)])

    @classmethod
    def constant(cls, value: Sequence[int]) -> "SequenceFn":
        frozen = tuple(value)
        return cls(len(frozen), lambda n: frozen)

    @classmethod
    def scalar(cls, fn: Callable[[int], int]) -> "SequenceFn":
        return cls(1, lambda n: (fn(n),))

    # sigma_1: первая координата
    def head(self) -> "SequenceFn":
        return SequenceFn(1, lambda n: self(n)[:1])

    # остальные k-1 координат
    def tail(self) -> "SequenceFn":
        if self.k == 1:
            raise LengthMismatch("a one-component sequence has no tail")
        return SequenceFn(self.k - 1, lambda n: self(n)[1:])
