from itertools import product

import pytest

from exceptions import ArityMismatch, BudgetExceeded, NameCollision, ParseError
from prcompile import compiler
from prcompile.compiler import splice_call
from prcompile.evaluator import eval_pr
from prcompile.models import (ADD, DOUBLE_SUCC, MULT, PRED, SUB, Comp, Proj, Rec, Succ, Zero, comp, format_term,
                              infer_arity, resolve, with_arity)
from prcompile.parser import parse_term
from prcompile.schemas import parse_unit_json, unit_from_schema, unit_to_schema
from termlang.checker import check_invariant, step_bound
from termlang.interpreter import initial_state, run_trace
from termlang.parser import format_program
from termlang.relations import Num

CONST_ONE = comp(Succ(), Zero(2))

CORPUS = {
    "add": (ADD, 2),
    "mult": (MULT, 2),
    "pred": (PRED, 1),
    "sub": (SUB, 2),
    "double_succ": (DOUBLE_SUCC, 1),
    "const_one": (CONST_ONE, 2),
    "zero": (Zero(1), 1),
    "proj": (Proj(2, 3), 3),
}


def corpus_cases():
    for name, (term, arity) in sorted(CORPUS.items()):
        for args in product(range(6), repeat=arity):
            yield pytest.param(term, args, id=f"{name}{args}")


def run_unit(unit, args):
    s0 = initial_state(unit.program, unit.inputs(args))
    return s0, run_trace(unit.program, s0)


class TestTerms:
    def test_library_arities(self):
        assert infer_arity(ADD) == 2
        assert infer_arity(MULT) == 2
        assert infer_arity(PRED) == 1
        assert infer_arity(Zero()) is None
        assert infer_arity(comp(Zero(), Succ())) == 1

    def test_term_errors(self):
        with pytest.raises(ArityMismatch):
            Proj(0, 2)
        with pytest.raises(ArityMismatch):
            Comp(Succ(), ())
        with pytest.raises(ArityMismatch):
            infer_arity(Rec(Succ(), Succ()))
        with pytest.raises(ArityMismatch):
            with_arity(Zero(2), 1)

    def test_zero_arity_from_context(self):
        resolved = resolve(MULT)
        assert resolved.h == Zero(1)
        assert resolve(Zero()) == Zero(0)

    @pytest.mark.parametrize("args, expected", [
        ((2, 3), 5),
        ((0, 4), 4),
    ])
    def test_eval_add(self, args, expected):
        assert eval_pr(ADD, args) == expected

    def test_eval_library(self):
        assert eval_pr(MULT, [2, 3]) == 6
        assert eval_pr(PRED, [0]) == 0
        assert eval_pr(PRED, [4]) == 3
        assert eval_pr(SUB, [2, 5]) == 3
        assert eval_pr(SUB, [5, 2]) == 0
        assert eval_pr(DOUBLE_SUCC, [3]) == 5
        assert eval_pr(CONST_ONE, [7, 8]) == 1

    def test_eval_errors(self):
        with pytest.raises(ArityMismatch):
            eval_pr(ADD, [1])
        with pytest.raises(ValueError):
            eval_pr(ADD, [1, -1])


class TestParser:
    @pytest.mark.parametrize("text", [
        "s",
        "(z 2)",
        "(p 2 3)",
        "(rec (p 1 1) (comp s (p 2 3)))",
        "(comp s (z 2))",
    ])
    def test_round_trip(self, text):
        assert format_term(parse_term(text)) == text

    def test_library_names(self):
        assert parse_term("add") == ADD
        assert parse_term(" (rec (z 0) (p 1 2))\n") == PRED
        assert parse_term("(comp sub (p 2 2) (p 1 2))") == comp(SUB, Proj(2, 2), Proj(1, 2))

    @pytest.mark.parametrize("text", [
        "", "x", "s s", "(p 3 2)", "(p 1)", "(comp s)", "(comp (p 1 2) s)", "(rec s s)", "(foo s)", "(p 1 1",
        "(z a)",
    ])
    def test_invalid(self, text):
        with pytest.raises(ParseError):
            parse_term(text)


class TestCompiler:
    def test_base_case(self):
        unit = compiler.compile(Succ())
        assert format_program(unit.program) == "vars x1 r\n0: r := x1 + 1\n"
        assert [item.name for item in unit.invariant.relations] == ["progress"]
        assert unit.input_vars == ("x1",)

    def test_relation_names(self, library_units):
        assert [item.name for item in library_units["add"].invariant.relations] == ["progress", "g*.T", "T2"]
        assert library_units["mult"].invariant.k == 5
        assert library_units["double_succ"].invariant.k == 2

    def test_composition_layout(self, library_units):
        unit = library_units["double_succ"]
        assert unit.program.variables[:4] == ("x1", "a", "y1", "r")
        assert format_program(unit.program).splitlines()[1] == "0: a := 1"

    def test_recursion_inputs(self, library_units):
        assert library_units["add"].input_vars == ("y", "x1")
        assert library_units["add"].result_var == "w"

    def test_splice_call(self):
        callee = compiler.compile(Succ())
        commands = splice_call(callee, ["q"], "out", "c0_")
        assert len(commands) == 3
        with pytest.raises(NameCollision):
            splice_call(callee, ["x1"], "c0_r", "c0_")
        with pytest.raises(ArityMismatch):
            splice_call(callee, ["q", "t"], "out", "c0_")

    def test_inputs_arity(self, library_units):
        with pytest.raises(ArityMismatch):
            library_units["add"].inputs([1])

    def test_schema_round_trip(self, library_units):
        unit = library_units["mult"]
        schema = unit_to_schema(unit)
        restored = unit_from_schema(schema)
        assert restored == unit
        assert parse_unit_json(schema.model_dump_json()) == unit

    @pytest.mark.parametrize("term, args", corpus_cases())
    def test_agrees_with_evaluator(self, term, args):
        unit = compiler.compile(term)
        _, trace = run_unit(unit, args)
        assert trace[-1][unit.result_var] == eval_pr(term, args)

    @pytest.mark.parametrize("term, args", corpus_cases())
    def test_invariant_holds(self, term, args):
        unit = compiler.compile(term)
        s0 = initial_state(unit.program, unit.inputs(args))
        report = check_invariant(unit.program, s0, unit.invariant)
        assert not report.truncated
        assert report.violations == []


class TestMutations:
    @pytest.mark.parametrize("name, args", [("add", (2, 3)), ("mult", (2, 2))])
    def test_every_rank_is_needed(self, library_units, name, args):
        unit = library_units[name]
        s0 = initial_state(unit.program, unit.inputs(args))
        for position, item in enumerate(unit.invariant.relations):
            broken = unit.invariant.replace(position, item.with_rank(Num(0)))
            report = check_invariant(unit.program, s0, broken)
            assert any(violation.relation == item.name for violation in report.violations), item.name


class TestStepBound:
    @pytest.mark.parametrize("name, args", [("add", (1, 1)), ("add", (2, 1)), ("mult", (2, 2))])
    def test_termination_step_within_bound(self, library_units, name, args):
        unit = library_units[name]
        s0, trace = run_unit(unit, args)
        steps = len(trace) - 1
        try:
            bound = step_bound(unit.program, s0, unit.invariant)
        except BudgetExceeded as exc:
            assert steps <= exc.ceiling
        else:
            assert steps <= bound

    def test_exact_bound_for_two_relations(self, library_units):
        unit = library_units["double_succ"]
        s0, trace = run_unit(unit, [4])
        bound = step_bound(unit.program, s0, unit.invariant, ceiling=10 ** 9)
        assert len(trace) - 1 <= bound
