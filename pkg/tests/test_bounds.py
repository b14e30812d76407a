import pytest
from pydantic import ValidationError

from bounds.lemma import bound_g, find_adjacent_increase, find_nondescent, lex_le
from bounds.models import SequenceFn
from bounds.schemas import SequenceFile
from exceptions import BudgetExceeded, EmptySequence, LemmaViolated, LengthMismatch, NoWitness
from prcompile import compiler
from prcompile.models import DOUBLE_SUCC, PRED
from termlang.checker import PhiSequence
from termlang.interpreter import initial_state

STAIRCASE_2 = [(a, b) for a in range(2, -1, -1) for b in range(2, -1, -1)]
STAIRCASE_3 = [(a, b, c) for a in (1, 0) for b in (1, 0) for c in (1, 0)]


def phi_of(term, args):
    unit = compiler.compile(term)
    return PhiSequence(unit.program, initial_state(unit.program, unit.inputs(args)), unit.invariant)


CORPUS = {
    "zero": lambda: SequenceFn.constant((0,)),
    "three": lambda: SequenceFn.constant((3,)),
    "zero_pair": lambda: SequenceFn.constant((0, 0)),
    "pair": lambda: SequenceFn.constant((2, 1)),
    "zero_triple": lambda: SequenceFn.constant((0, 0, 0)),
    "triple": lambda: SequenceFn.constant((1, 1, 1)),
    "countdown_5": lambda: SequenceFn.scalar(lambda n: max(0, 5 - n)),
    "countdown_9": lambda: SequenceFn.scalar(lambda n: max(0, 9 - n)),
    "identity": lambda: SequenceFn.scalar(lambda n: n),
    "sawtooth": lambda: SequenceFn.scalar(lambda n: 2 - n % 3),
    "lex_descent": lambda: SequenceFn.from_values([(3, 0), (2, 5), (2, 4), (2, 3), (1, 9), (0, 0)]),
    "short_descent": lambda: SequenceFn.from_values([(1, 1), (1, 0), (0, 5), (0, 4)]),
    "staircase_2": lambda: SequenceFn.from_values(STAIRCASE_2),
    "staircase_3": lambda: SequenceFn.from_values(STAIRCASE_3),
    "second_countdown": lambda: SequenceFn(2, lambda n: (0, max(0, 6 - n))),
    "mixed": lambda: SequenceFn(3, lambda n: (1 if n < 3 else 0, max(0, 3 - n), n % 2)),
    "reset": lambda: SequenceFn(2, lambda n: (max(0, 2 - n // 3), 2 - n % 3)),
    "ternary_reset": lambda: SequenceFn(3, lambda n: (max(0, 1 - n // 4), max(0, 1 - n % 4 // 2), 1 - n % 2)),
    "growing_tail": lambda: SequenceFn(2, lambda n: (max(0, 4 - n), n)),
    "phi_double_succ": lambda: phi_of(DOUBLE_SUCC, [0]),
    "phi_double_succ_7": lambda: phi_of(DOUBLE_SUCC, [7]),
    "phi_pred_3": lambda: phi_of(PRED, [3]),
}


class TestSequenceFn:
    def test_from_values_repeats_last(self):
        sigma = SequenceFn.from_values([(2, 1), (0, 4)])
        assert sigma(0) == (2, 1)
        assert sigma(1) == (0, 4)
        assert sigma(100) == (0, 4)

    def test_head_and_tail(self):
        sigma = SequenceFn.from_values([(2, 1, 7)])
        assert sigma.head()(0) == (2,)
        assert sigma.tail()(5) == (1, 7)
        with pytest.raises(LengthMismatch):
            SequenceFn.scalar(lambda n: n).tail()

    def test_errors(self):
        with pytest.raises(EmptySequence):
            SequenceFn.from_values([])
        with pytest.raises(LengthMismatch):
            SequenceFn(2, lambda n: (n,))(0)
        with pytest.raises(ValueError):
            SequenceFn.scalar(lambda n: -1)(0)
        with pytest.raises(ValueError):
            SequenceFn.constant((1,))(-1)

    def test_sequence_file(self):
        source = SequenceFile.model_validate_json('{"k": 2, "values": [[1, 1], [1, 0]]}')
        assert source.to_sequence()(3) == (1, 0)
        with pytest.raises(ValidationError):
            SequenceFile.model_validate_json('{"k": 2, "values": [[1]]}')
        with pytest.raises(ValidationError):
            SequenceFile.model_validate_json('{"k": 1, "values": []}')


class TestLemma:
    def test_lex_le(self):
        assert lex_le((1, 5), (2, 0))
        assert lex_le((1, 5), (1, 5))
        assert not lex_le((1, 5), (1, 4))
        with pytest.raises(LengthMismatch):
            lex_le((1,), (1, 2))

    def test_adjacent_increase(self):
        sigma = SequenceFn.from_values([(0,), (0,), (1,), (1,), (2,)])
        assert find_adjacent_increase(sigma, 0, 4) == 1
        assert find_adjacent_increase(sigma, 2, 4) == 3
        with pytest.raises(NoWitness):
            find_adjacent_increase(sigma, 4, 2)
        with pytest.raises(NoWitness):
            find_adjacent_increase(sigma, 2, 3)

    def test_scalar_bound(self):
        assert bound_g(SequenceFn.constant((3,)), 2) == 6

    def test_constant_pair(self):
        assert bound_g(SequenceFn.constant((0, 0)), 0) == 4

    def test_short_descent(self):
        sigma = CORPUS["short_descent"]()
        assert bound_g(sigma, 0) == 14
        assert find_nondescent(sigma, 0) == 3

    def test_ceiling_is_a_lower_bound(self):
        with pytest.raises(BudgetExceeded) as info:
            bound_g(SequenceFn.constant((7,)), 0, ceiling=5)
        assert info.value.ceiling == 5
        with pytest.raises(BudgetExceeded):
            bound_g(SequenceFn.constant((1000, 1000, 1000)), 0, ceiling=10 ** 5)

    def test_short_limit_violates(self):
        with pytest.raises(LemmaViolated):
            find_nondescent(CORPUS["countdown_9"](), 0, limit=3)

    def test_corpus_size(self):
        assert len(CORPUS) >= 20

    @pytest.mark.parametrize("name", sorted(CORPUS))
    @pytest.mark.parametrize("n", range(6))
    def test_nondescent_within_bound(self, name, n):
        sigma = CORPUS[name]()
        bound = bound_g(sigma, n, ceiling=10 ** 9)
        m = find_nondescent(sigma, n, limit=bound)
        assert n <= m <= bound
        assert lex_le(sigma(m), sigma(m + 1))
        assert all(not lex_le(sigma(i), sigma(i + 1)) for i in range(n, m))
