import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from bounds.lemma import bound_g
from bounds.models import SequenceFn, Vector
from config import settings
from erdos.labelling import f_star_vec
from erdos.models import Point
from exceptions import BudgetExceeded
from termlang.interpreter import run_trace
from termlang.models import Program, State
from termlang.relations import RankedRelation, TransitionInvariant

logger = logging.getLogger(__name__)

UNCOVERED = "uncovered"
RANK = "rank"


@dataclass(frozen=True)
class Violation:
    kind: str
    earlier: int
    later: int
    relation: Optional[str] = None
    detail: str = ""


@dataclass
class InvariantReport:
    trace_length: int
    pairs_checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations


# Все пары (s_i, s_j), i < j: пара покрыта отношением и ранг каждого покрывающего убывает
def check_trace(trace: Sequence[State], inv: TransitionInvariant, truncated: bool = False) -> InvariantReport:
    report = InvariantReport(trace_length=len(trace), truncated=truncated)
    candidates: Dict[int, List[Tuple[int, RankedRelation]]] = {}
    ranks = [inv.ranks(state) for state in trace]
    for i, before in enumerate(trace):
        starting = candidates.get(before.location)
        if starting is None:
            starting = [(position, item) for position, item in enumerate(inv.relations)
                        if item.may_start_at(before.location)]
            candidates[before.location] = starting
        for j in range(i + 1, len(trace)):
            after = trace[j]
            report.pairs_checked += 1
            covered = False
            for position, item in starting:
                if not item.holds(before, after):
                    continue
                covered = True
                if not ranks[j][position] < ranks[i][position]:
                    report.violations.append(Violation(
                        RANK, i, j, item.name,
                        f"rank {ranks[i][position]} -> {ranks[j][position]} does not decrease",
                    ))
            if not covered:
                report.violations.append(Violation(
                    UNCOVERED, i, j, None,
                    f"no relation holds between location {before.location} and {after.location}",
                ))
    logger.debug("checked %d pairs, %d violations", report.pairs_checked, len(report.violations))
    return report


def check_invariant(program: Program, s0: State, inv: TransitionInvariant,
                    max_steps: Optional[int] = None) -> InvariantReport:
    try:
        return check_trace(run_trace(program, s0, max_steps), inv)
    except BudgetExceeded as exc:
        return check_trace(exc.trace, inv, truncated=True)


# phi(x) = f*(<rank(s_0), ..., rank(s_x)>), замороженная в первом финальном состоянии
class PhiSequence(SequenceFn):
    def __init__(self, program: Program, s0: State, inv: TransitionInvariant, max_steps: Optional[int] = None):
        super().__init__(inv.k, self._phi)
        self.inv = inv
        try:
            self.trace = run_trace(program, s0, max_steps)
            self.terminated = True
        except BudgetExceeded as exc:
            self.trace = exc.trace
            self.terminated = False
        self.points = [Point(inv.ranks(state)) for state in self.trace]
        self._by_prefix: Dict[int, Vector] = {}

    def _phi(self, x: int) -> Vector:
        last = len(self.points) - 1
        if x > last and not self.terminated:
            raise BudgetExceeded(f"phi({x}) needs more than {last} steps", ceiling=last)
        prefix = min(x, last)
        value = self._by_prefix.get(prefix)
        if value is None:
            value = f_star_vec(self.points[:prefix + 1], self.inv.k)
            self._by_prefix[prefix] = value
        return value


def phi(program: Program, s0: State, inv: TransitionInvariant, x: int,
        max_steps: Optional[int] = None) -> Vector:
    return PhiSequence(program, s0, inv, max_steps)(x)


# g(0) для phi: трасса достигает финального состояния не позже
def step_bound(program: Program, s0: State, inv: TransitionInvariant,
               max_steps: Optional[int] = None, ceiling: Optional[int] = None) -> int:
    sequence = PhiSequence(program, s0, inv, max_steps if max_steps is not None else settings.max_steps)
    bound = bound_g(sequence, 0, ceiling)
    logger.debug("step bound %d for a trace of %d states", bound, len(sequence.trace))
    return bound
