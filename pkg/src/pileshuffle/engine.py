"""Single-round pile shuffles on queues, stacks, and mixtures of both.

A shuffle deals each label ``s`` onto pile ``h(s)`` and collects the piles
in increasing pile order: queue piles keep their deal order, stack piles
reverse it.  Equivalently, the output deck ranks the labels by the key
``(h(s), p(s))`` for queue piles and ``(h(s), -p(s))`` for stack piles,
which is how :func:`apply_shuffle` computes it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from . import kernels
from .permutation import Permutation

__all__ = [
    "PileType",
    "TypeSchedule",
    "PileAssignment",
    "ShuffleTableau",
    "apply_shuffle",
    "check_sort",
    "render_tableau",
    "shift_shuffle",
    "reduce_to_sort",
]


class PileType(enum.Enum):
    QUEUE = "Q"
    STACK = "S"

    @property
    def chi(self) -> int:
        """Stack indicator: 0 for a queue, 1 for a stack."""
        return 1 if self is PileType.STACK else 0

    @classmethod
    def from_char(cls, c: str) -> "PileType":
        try:
            return cls(c.upper())
        except ValueError:
            raise ValueError(f"unknown pile type {c!r}; expected Q or S") from None


def _as_types(spec: Union[str, Iterable[PileType]]) -> tuple[PileType, ...]:
    if isinstance(spec, str):
        return tuple(PileType.from_char(c) for c in spec)
    return tuple(PileType(t) for t in spec)


@dataclass(frozen=True)
class TypeSchedule:
    """Pile types in collection order: pile ``k`` has type ``types[k-1]``.

    A schedule is either bounded (``types`` materialized, length equals
    the pile budget) or an unbounded run of one type (``uniform`` set),
    so homogeneous shuffles need no pile budget up front.
    """

    types: tuple[PileType, ...] | None
    uniform: PileType | None = None

    def __post_init__(self) -> None:
        if (self.types is None) == (self.uniform is None):
            raise ValueError("exactly one of types/uniform must be given")
        if self.types is not None:
            object.__setattr__(self, "types", tuple(PileType(t) for t in self.types))

    @classmethod
    def fixed(cls, spec: Union[str, Iterable[PileType]]) -> "TypeSchedule":
        return cls(types=_as_types(spec))

    @classmethod
    def all_queues(cls) -> "TypeSchedule":
        return cls(types=None, uniform=PileType.QUEUE)

    @classmethod
    def all_stacks(cls) -> "TypeSchedule":
        return cls(types=None, uniform=PileType.STACK)

    @property
    def bounded(self) -> bool:
        return self.types is not None

    @property
    def size(self) -> int | None:
        """Pile budget, or None when unbounded."""
        return None if self.types is None else len(self.types)

    def type_at(self, pile: int) -> PileType:
        if pile < 1:
            raise ValueError(f"pile index {pile} must be >= 1")
        if self.types is None:
            return self.uniform  # type: ignore[return-value]
        if pile > len(self.types):
            raise ValueError(f"pile index {pile} outside schedule of {len(self.types)} piles")
        return self.types[pile - 1]

    def chi_array(self, limit: int) -> np.ndarray:
        """Stack indicators of piles 1..limit as uint8."""
        if self.types is None:
            fill = self.uniform.chi  # type: ignore[union-attr]
            return np.full(limit, fill, dtype=np.uint8)
        if limit > len(self.types):
            raise ValueError(f"requested {limit} piles from schedule of {len(self.types)}")
        return np.fromiter((t.chi for t in self.types[:limit]), dtype=np.uint8, count=limit)

    def as_string(self, limit: int | None = None) -> str:
        if self.types is None:
            if limit is None:
                raise ValueError("unbounded schedule needs an explicit length")
            return self.uniform.value * limit  # type: ignore[union-attr]
        ts = self.types if limit is None else self.types[:limit]
        return "".join(t.value for t in ts)


@dataclass(frozen=True)
class PileAssignment:
    """Deal of one round: ``piles[s-1]`` is the pile index of label ``s``.

    Pile indices are 1-based and need not be contiguous; empty piles
    between used ones are fine.
    """

    piles: tuple[int, ...]

    def __post_init__(self) -> None:
        piles = tuple(int(v) for v in self.piles)
        for v in piles:
            if v < 1:
                raise ValueError(f"pile index {v} must be >= 1")
        object.__setattr__(self, "piles", piles)

    @classmethod
    def of(cls, piles: Iterable[int]) -> "PileAssignment":
        return cls(tuple(piles))

    @property
    def n(self) -> int:
        return len(self.piles)

    @property
    def max_pile(self) -> int:
        return max(self.piles, default=0)

    @property
    def distinct_piles(self) -> int:
        return len(set(self.piles))


ScheduleLike = Union[TypeSchedule, str]
AssignmentLike = Union[PileAssignment, Sequence[int]]


def _schedule(types: ScheduleLike) -> TypeSchedule:
    return TypeSchedule.fixed(types) if isinstance(types, str) else types


def _assignment(assignment: AssignmentLike) -> PileAssignment:
    if isinstance(assignment, PileAssignment):
        return assignment
    return PileAssignment(tuple(assignment))


def _checked_arrays(types: ScheduleLike, assignment: AssignmentLike, p: Permutation):
    """Validate lengths/coverage; return (schedule, piles, pos, chi-by-label)."""
    sched = _schedule(types)
    assign = _assignment(assignment)
    if assign.n != p.n:
        raise ValueError(f"assignment length {assign.n} != permutation length {p.n}")
    piles = kernels.as_int64(assign.piles)
    pos = kernels.as_int64(p.pos)
    if p.n == 0:
        return sched, piles, pos, np.empty(0, dtype=np.uint8)
    top = int(piles.max())
    if sched.bounded and top > sched.size:
        raise ValueError(f"pile index {top} outside schedule of {sched.size} piles")
    if sched.bounded:
        chi = sched.chi_array(top)[piles - 1]
    else:
        chi = np.full(p.n, sched.uniform.chi, dtype=np.uint8)  # type: ignore[union-attr]
    return sched, piles, pos, chi


def apply_shuffle(types: ScheduleLike, assignment: AssignmentLike, p: Permutation) -> Permutation:
    """Shuffle deck ``p`` with pile assignment ``assignment`` on ``types``.

    The output permutation ranks the labels lexicographically by
    ``(pile, position-within-pile-order)``.
    """
    _, piles, pos, chi = _checked_arrays(types, assignment, p)
    n = p.n
    if n == 0:
        return p
    keypos = np.where(chi.astype(bool), -pos, pos)
    order = np.lexsort((keypos, piles))
    sigma = np.empty(n, dtype=np.int64)
    sigma[order] = np.arange(1, n + 1)
    return Permutation(tuple(sigma.tolist()))


def check_sort(types: ScheduleLike, assignment: AssignmentLike, p: Permutation) -> bool:
    """True iff the shuffle sorts ``p``, decided by one linear scan.

    Label ``s+1`` may share the pile of ``s`` only when it arrives on the
    collectable side (after ``s`` in a queue, before ``s`` in a stack);
    otherwise it needs a strictly later pile.
    """
    _, piles, pos, chi = _checked_arrays(types, assignment, p)
    return kernels.check_scan(piles, pos, chi) == 0


@dataclass(frozen=True)
class ShuffleTableau:
    """Layout of one deal: label ``s`` sits in row ``h(s)``, column ``p(s)``."""

    rows: tuple[tuple[int | None, ...], ...]
    row_types: tuple[PileType, ...]

    @property
    def n(self) -> int:
        return 0 if not self.rows else len(self.rows[0])

    def row_labels(self, pile: int) -> tuple[int, ...]:
        """Labels of one pile in deal order (left to right as drawn)."""
        return tuple(v for v in self.rows[pile - 1] if v is not None)

    def collected(self) -> tuple[int, ...]:
        """Deck produced by collecting rows top to bottom, queues left to
        right and stacks right to left."""
        out: list[int] = []
        for cells, t in zip(self.rows, self.row_types):
            labels = [v for v in cells if v is not None]
            out.extend(labels if t is PileType.QUEUE else reversed(labels))
        return tuple(out)

    def render(self) -> str:
        n = self.n
        w = max(len(str(n)), 1)
        pw = len(str(max(len(self.rows), 1)))
        head = " " * (pw + 5) + " ".join(str(c).rjust(w) for c in range(1, n + 1))
        lines = [head]
        for i, (cells, t) in enumerate(zip(self.rows, self.row_types), start=1):
            body = " ".join((str(v) if v is not None else "").rjust(w) for v in cells)
            lines.append(f"P{str(i).ljust(pw)} {t.value} | {body}".rstrip())
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "piles": [
                {"pile": i, "type": t.value, "labels": list(self.row_labels(i))}
                for i, t in enumerate(self.row_types, start=1)
            ]
        }


def render_tableau(p: Permutation, assignment: AssignmentLike, types: ScheduleLike) -> ShuffleTableau:
    """Tableau of the deal; collecting it reproduces ``apply_shuffle``."""
    sched, piles, _, _ = _checked_arrays(types, assignment, p)
    n = p.n
    top = int(piles.max()) if n else 0
    m = max(top, sched.size or 0)
    grid: list[list[int | None]] = [[None] * n for _ in range(m)]
    for s in range(1, n + 1):
        grid[int(piles[s - 1]) - 1][p(s) - 1] = s
    return ShuffleTableau(
        rows=tuple(tuple(row) for row in grid),
        row_types=tuple(sched.type_at(i) for i in range(1, m + 1)),
    )


def shift_shuffle(
    types: ScheduleLike,
    assignment: AssignmentLike,
    p: Permutation,
    r: Permutation,
) -> tuple[PileAssignment, Permutation, Permutation]:
    """Relabel a shuffle by ``r``: returns ``(h∘r, p∘r, σ∘r)`` where σ is
    the shuffle output, so shuffling ``p∘r`` with ``h∘r`` yields ``σ∘r``."""
    sched = _schedule(types)
    assign = _assignment(assignment)
    if not (assign.n == p.n == r.n):
        raise ValueError(f"length mismatch: {assign.n}, {p.n}, {r.n}")
    sigma = apply_shuffle(sched, assign, p)
    shifted_h = PileAssignment(tuple(assign.piles[v - 1] for v in r.pos))
    return shifted_h, p.compose(r), sigma.compose(r)


def reduce_to_sort(p: Permutation, target: Permutation) -> Permutation:
    """The permutation whose sorts realize ``p -> target``.

    For any sort ``(x, h)`` of the result, ``(x, h∘target)`` shuffles ``p``
    into ``target``.
    """
    if p.n != target.n:
        raise ValueError(f"length mismatch: {p.n} != {target.n}")
    return p.compose(target.invert())
