"""Minimal single-round sorting shuffles and feasibility under pile budgets.

Every constructor here runs in one scan of the permutation.  The minimal
assignment for a fixed type schedule follows the recurrence: start at
pile 1 and move to a new pile exactly when the next label cannot land on
the collectable side of the current pile.  With free type choice the
greedy rule picks each new pile's type to admit the following label.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .engine import PileAssignment, PileType, ScheduleLike, TypeSchedule, _schedule
from .permutation import Permutation

__all__ = [
    "SortMode",
    "SortPlan",
    "Infeasible",
    "minimal_queue_sort",
    "minimal_stack_sort",
    "minimal_sort_on_types",
    "dealer_choice_minimal_sort",
    "feasible",
]


class SortMode(enum.Enum):
    QUEUES = "queues"
    STACKS = "stacks"
    DEALER = "dealer"


@dataclass(frozen=True)
class SortPlan:
    """A sorting shuffle: materialized types (one per pile used) plus the
    pile assignment.  Minimal plans use piles 1..piles_used contiguously."""

    types: TypeSchedule
    assignment: PileAssignment
    piles_used: int

    def to_dict(self) -> dict:
        return {
            "piles_used": self.piles_used,
            "types": self.types.as_string(),
            "assignment": list(self.assignment.piles),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "SortPlan":
        types = TypeSchedule.fixed(doc["types"])
        assignment = PileAssignment(tuple(doc["assignment"]))
        piles_used = int(doc.get("piles_used", assignment.distinct_piles))
        return cls(types=types, assignment=assignment, piles_used=piles_used)


@dataclass(frozen=True)
class Infeasible:
    """No sorting assignment exists within the pile budget.

    ``position`` is the first 1-based label needing a pile past the
    budget (None when reported by an exhausted search), ``required`` the
    pile it needed.
    """

    position: int | None = None
    required: int | None = None
    budget: int | None = None

    def __bool__(self) -> bool:
        return False

    def describe(self) -> str:
        if self.position is not None:
            return (f"infeasible: label {self.position} needs pile {self.required} "
                    f"but only {self.budget} available")
        if self.required is not None:
            return f"infeasible: needs {self.required} piles but the budget is {self.budget}"
        return "infeasible: no pile-type choice sorts the permutation"


def _empty_plan() -> SortPlan:
    return SortPlan(TypeSchedule.fixed(()), PileAssignment(()), 0)


def _plan_from_scan(h: np.ndarray, types: tuple[PileType, ...]) -> SortPlan:
    return SortPlan(
        types=TypeSchedule.fixed(types),
        assignment=PileAssignment(tuple(h.tolist())),
        piles_used=len(types),
    )


def minimal_queue_sort(p: Permutation) -> SortPlan:
    """Fewest-queues sort: a new queue at every descent of ``p``.

    Uses ``1 + descents(p)`` piles, which is optimal.
    """
    n = p.n
    if n == 0:
        return _empty_plan()
    pos = kernels.as_int64(p.pos)
    h = np.empty(n, dtype=np.int64)
    h[0] = 1
    np.cumsum(pos[1:] < pos[:-1], out=h[1:])
    h[1:] += 1
    return _plan_from_scan(h, (PileType.QUEUE,) * int(h[-1]))


def minimal_stack_sort(p: Permutation) -> SortPlan:
    """Fewest-stacks sort: a new stack at every ascent of ``p``."""
    n = p.n
    if n == 0:
        return _empty_plan()
    pos = kernels.as_int64(p.pos)
    h = np.empty(n, dtype=np.int64)
    h[0] = 1
    np.cumsum(pos[1:] > pos[:-1], out=h[1:])
    h[1:] += 1
    return _plan_from_scan(h, (PileType.STACK,) * int(h[-1]))


def minimal_sort_on_types(p: Permutation, x: ScheduleLike) -> SortPlan | Infeasible:
    """Pointwise-minimal sort of ``p`` on the fixed schedule ``x``.

    Every sorting assignment on ``x`` dominates the returned one pile by
    pile.  Returns :class:`Infeasible` (a value, not an error) when the
    scan runs off the end of a bounded schedule; the plan's types are
    truncated to the piles actually used.
    """
    sched = _schedule(x)
    n = p.n
    if n == 0:
        return _empty_plan()
    pos = kernels.as_int64(p.pos)
    if sched.bounded:
        budget = sched.size
        chi = sched.chi_array(min(budget, n))
    else:
        budget = None
        chi = sched.chi_array(n)
    h, overflow = kernels.minimal_scan(pos, chi)
    if h is None:
        return Infeasible(position=overflow, required=budget + 1, budget=budget)
    used = int(h[-1])
    types = tuple(sched.type_at(i) for i in range(1, used + 1))
    return _plan_from_scan(h, types)


def dealer_choice_minimal_sort(p: Permutation) -> SortPlan:
    """Minimal sort when the dealer picks each new pile's type on the fly.

    Whenever a label opens a pile, the pile becomes a queue if the next
    label arrives in ascending order and a stack otherwise (a pile opened
    by the last label is a queue; its type cannot matter).  No sort on
    any type schedule uses fewer piles.
    """
    n = p.n
    if n == 0:
        return _empty_plan()
    h, chi = kernels.dealer_scan(kernels.as_int64(p.pos))
    types = tuple(PileType.STACK if c else PileType.QUEUE for c in chi.tolist())
    return _plan_from_scan(h, types)


def feasible(p: Permutation, budget: int, mode: SortMode) -> bool:
    """Can ``p`` be sorted in one round with at most ``budget`` piles?"""
    if budget < 0:
        raise ValueError("budget must be >= 0")
    if mode is SortMode.QUEUES:
        return p.ascending_runs() <= budget
    if mode is SortMode.STACKS:
        return p.descending_runs() <= budget
    return dealer_choice_minimal_sort(p).piles_used <= budget
