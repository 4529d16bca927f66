"""Multi-round shuffles and their reduction to single-round virtual shuffles.

A shuffle in rounds 1..T, with m_t piles in round t, acts exactly like one
shuffle on up to ``m_1 * ... * m_T`` virtual piles: per-round pile digits
embed into a mixed-radix virtual pile index, and each label's digit is
order-reversed whenever the label still faces an odd number of stack
assignments in later rounds (its suffix parity).  The virtual pile types
depend only on the per-round type schedules, never on the assignments, so
sort feasibility and minimal multi-round sorts reduce to the single-round
machinery in linear time.

Round assignments here are 0-based (the embedding is digit arithmetic);
:func:`to_single_round` is the one adapter onto the 1-based single-round
engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from . import kernels
from .engine import PileAssignment, PileType, TypeSchedule, apply_shuffle
from .permutation import Permutation
from .sorting import Infeasible, minimal_sort_on_types

__all__ = [
    "RoundTypes",
    "MultiRoundPlan",
    "VirtualShuffle",
    "BudgetExceeded",
    "to_single_round",
    "apply_multiround",
    "embed_queue_rounds",
    "extract_digits",
    "virtual_type_schedule",
    "embed_hetero_rounds",
    "unembed_hetero",
    "minimal_multiround_sort",
    "feasible_fixed",
    "dealer_search",
]

# Virtual type schedules are materialized; refuse absurd pile counts.
_MAX_MATERIALIZED = 1 << 22

Digits = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """dealer_search hit its candidate budget before finishing."""

    def __init__(self, examined: int):
        super().__init__(f"search budget exceeded after {examined} type schedules")
        self.examined = examined


@dataclass(frozen=True)
class RoundTypes:
    """Per-round pile type schedules; every round has a finite capacity."""

    rounds: tuple[TypeSchedule, ...]

    def __post_init__(self) -> None:
        rounds = tuple(self.rounds)
        for i, sched in enumerate(rounds, start=1):
            if not sched.bounded or sched.size == 0:
                raise ValueError(f"round {i}: capacity must be finite and >= 1")
        object.__setattr__(self, "rounds", rounds)

    @classmethod
    def of(cls, specs: Iterable[Union[str, TypeSchedule]]) -> "RoundTypes":
        return cls(tuple(s if isinstance(s, TypeSchedule) else TypeSchedule.fixed(s)
                         for s in specs))

    @classmethod
    def all_queues(cls, capacities: Sequence[int]) -> "RoundTypes":
        return cls.of("Q" * m for m in capacities)

    @classmethod
    def all_stacks(cls, capacities: Sequence[int]) -> "RoundTypes":
        return cls.of("S" * m for m in capacities)

    @property
    def num_rounds(self) -> int:
        return len(self.rounds)

    @property
    def capacities(self) -> tuple[int, ...]:
        return tuple(s.size for s in self.rounds)  # type: ignore[misc]

    def chi_per_round(self) -> list[np.ndarray]:
        return [s.chi_array(s.size) for s in self.rounds]  # type: ignore[arg-type]


@dataclass(frozen=True)
class MultiRoundPlan:
    """One pile assignment per round, 0-based digits within each capacity."""

    round_types: RoundTypes
    assignments: tuple[Digits, ...]

    def __post_init__(self) -> None:
        assigns = tuple(tuple(int(v) for v in a) for a in self.assignments)
        caps = self.round_types.capacities
        if len(assigns) != len(caps):
            raise ValueError(f"{len(assigns)} assignments for {len(caps)} rounds")
        lengths = {len(a) for a in assigns}
        if len(lengths) > 1:
            raise ValueError("assignments differ in length")
        for t, (a, m) in enumerate(zip(assigns, caps), start=1):
            for v in a:
                if not 0 <= v < m:
                    raise ValueError(f"round {t}: pile digit {v} out of range 0..{m - 1}")
        object.__setattr__(self, "assignments", assigns)

    @property
    def num_rounds(self) -> int:
        return len(self.assignments)

    def to_dict(self) -> dict:
        return {
            "capacities": list(self.round_types.capacities),
            "rounds": [
                {"types": sched.as_string(), "assignment": [v + 1 for v in a]}
                for sched, a in zip(self.round_types.rounds, self.assignments)
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "MultiRoundPlan":
        rt = RoundTypes.of(r["types"] for r in doc["rounds"])
        assigns = tuple(tuple(int(v) - 1 for v in r["assignment"]) for r in doc["rounds"])
        return cls(round_types=rt, assignments=assigns)


@dataclass(frozen=True)
class VirtualShuffle:
    """Single-round equivalent of a multi-round shuffle: virtual pile types
    plus the embedded assignment (0-based virtual pile per label)."""

    virtual_types: TypeSchedule
    virtual_assignment: Digits

    def as_single_round(self) -> tuple[TypeSchedule, PileAssignment]:
        return self.virtual_types, to_single_round(self.virtual_assignment)


def to_single_round(digits: Sequence[int]) -> PileAssignment:
    """Adapter from 0-based round/virtual digits to 1-based pile indices."""
    return PileAssignment(tuple(int(v) + 1 for v in digits))


def _sat_product(capacities: Sequence[int], cap: int) -> int:
    """min(product of capacities, cap); avoids huge intermediate products."""
    prod = 1
    for m in capacities:
        prod *= m
        if prod >= cap:
            return cap
    return prod


def apply_multiround(plan: MultiRoundPlan, p: Permutation) -> Permutation:
    """Run the rounds in order; the output of one round feeds the next."""
    cur = p
    for sched, digits in zip(plan.round_types.rounds, plan.assignments):
        if len(digits) != p.n:
            raise ValueError(f"assignment length {len(digits)} != permutation length {p.n}")
        cur = apply_shuffle(sched, to_single_round(digits), cur)
    return cur


def _check_digits(assignments: Sequence[Sequence[int]], capacities: Sequence[int]) -> list[np.ndarray]:
    if len(assignments) != len(capacities):
        raise ValueError(f"{len(assignments)} assignments for {len(capacities)} rounds")
    out = []
    for t, (a, m) in enumerate(zip(assignments, capacities), start=1):
        arr = kernels.as_int64(a)
        if arr.size and (arr.min() < 0 or arr.max() >= m):
            raise ValueError(f"round {t}: pile digit out of range 0..{m - 1}")
        out.append(arr)
    return out


def embed_queue_rounds(assignments: Sequence[Sequence[int]], capacities: Sequence[int]) -> Digits:
    """Mixed-radix embedding of all-queue rounds into one queue shuffle.

    Round 1 is the least significant digit; the result assigns each label
    a virtual pile in ``0 .. prod(capacities) - 1`` and reproduces the
    multi-round outcome in a single round.
    """
    arrays = _check_digits(assignments, capacities)
    if not arrays:
        return ()
    hhat = arrays[-1]
    for arr, m in zip(reversed(arrays[:-1]), reversed(tuple(capacities)[:-1])):
        hhat = arr + m * hhat
    return tuple(hhat.tolist())


def extract_digits(virtual: Sequence[int], capacities: Sequence[int]) -> tuple[Digits, ...]:
    """Invert :func:`embed_queue_rounds`: recover the per-round digits."""
    vals = kernels.as_int64(virtual)
    if vals.size and vals.min() < 0:
        raise ValueError("virtual pile index out of range")
    caps = tuple(capacities)
    out = []
    for m in caps[:-1]:
        out.append(tuple((vals % m).tolist()))
        vals = vals // m
    if caps:
        if vals.size and vals.max() >= caps[-1]:
            raise ValueError(f"virtual pile index out of range for capacities {caps}")
        out.append(tuple(vals.tolist()))
    elif vals.size and vals.max() > 0:
        raise ValueError("virtual pile index out of range for zero rounds")
    return tuple(out)


def _virtual_chi(round_chis: list[np.ndarray], limit: int) -> np.ndarray:
    """Stack indicators of virtual piles 0..limit-1, from the type schedules
    alone.

    Built from the last round backwards.  A virtual pile splits as
    ``y = d + m_t * v``: its suffix parity is that of virtual pile ``v``
    one level up, its round-t pile is ``d`` order-reversed when that
    parity is odd, and the parities compose by xor.
    """
    if limit <= 0:
        return np.empty(0, dtype=np.uint8)
    T = len(round_chis)
    if T == 0:
        return np.zeros(1, dtype=np.uint8)[:limit]
    needs = [0] * T
    need = limit
    for t in range(T):
        needs[t] = need
        need = -(-need // len(round_chis[t]))
    chi_hat = round_chis[T - 1][: needs[T - 1]]
    for t in range(T - 2, -1, -1):
        m = len(round_chis[t])
        length = min(needs[t], m * len(chi_hat))
        y = np.arange(length, dtype=np.int64)
        v, d = y // m, y % m
        par = chi_hat[v]
        d_real = np.where(par.astype(bool), m - 1 - d, d)
        chi_hat = round_chis[t][d_real] ^ par
    return chi_hat[:limit]


def virtual_type_schedule(rt: RoundTypes, limit: int) -> TypeSchedule:
    """Types of the first ``limit`` virtual piles of the reduction.

    Depends only on the round type schedules.  ``limit`` must not exceed
    the virtual pile count (the product of the capacities); callers doing
    feasibility work pass ``min(n, product)``.
    """
    caps = rt.capacities
    if limit < 0 or limit > _sat_product(caps, limit if limit > 0 else 1):
        raise ValueError(f"limit {limit} exceeds the virtual pile count")
    chi = _virtual_chi(rt.chi_per_round(), limit)
    return TypeSchedule.fixed(tuple(PileType.STACK if c else PileType.QUEUE
                                    for c in chi.tolist()))


def embed_hetero_rounds(plan: MultiRoundPlan) -> VirtualShuffle:
    """Reduce a multi-round plan to its equivalent single-round shuffle.

    The virtual assignment embeds each label's per-round digits after
    reversing every digit whose suffix parity (stacks faced in later
    rounds) is odd; the virtual types cover all virtual piles.
    """
    caps = plan.round_types.capacities
    total = 1
    for m in caps:
        total *= m
        if total > _MAX_MATERIALIZED:
            raise ValueError(
                f"{total}+ virtual piles is too many to materialize; "
                "use virtual_type_schedule with an explicit limit")
    n = len(plan.assignments[0]) if plan.assignments else 0
    chis = plan.round_types.chi_per_round()
    par = np.zeros(n, dtype=np.uint8)
    hhat = np.zeros(n, dtype=np.int64)
    for r in range(plan.num_rounds - 1, -1, -1):
        digits = kernels.as_int64(plan.assignments[r])
        m = caps[r]
        d_tilde = np.where(par.astype(bool), m - 1 - digits, digits)
        hhat = d_tilde if r == plan.num_rounds - 1 else d_tilde + m * hhat
        par = par ^ chis[r][digits]
    return VirtualShuffle(
        virtual_types=virtual_type_schedule(plan.round_types, total),
        virtual_assignment=tuple(hhat.tolist()),
    )


def unembed_hetero(virtual: Sequence[int], rt: RoundTypes) -> tuple[Digits, ...]:
    """Invert :func:`embed_hetero_rounds`: recover per-round assignments
    from virtual pile indices."""
    caps = rt.capacities
    vals = kernels.as_int64(virtual)
    if vals.size and vals.min() < 0:
        raise ValueError("virtual pile index out of range")
    T = len(caps)
    if T == 0:
        if vals.size and vals.max() > 0:
            raise ValueError("virtual pile index out of range for zero rounds")
        return ()
    d_tilde = []
    for m in caps[:-1]:
        d_tilde.append(vals % m)
        vals = vals // m
    if vals.size and vals.max() >= caps[-1]:
        raise ValueError(f"virtual pile index out of range for capacities {caps}")
    d_tilde.append(vals)
    chis = rt.chi_per_round()
    par = np.zeros(len(virtual), dtype=np.uint8)
    out: list[Digits] = [()] * T
    for r in range(T - 1, -1, -1):
        m = caps[r]
        h = np.where(par.astype(bool), m - 1 - d_tilde[r], d_tilde[r])
        par = par ^ chis[r][h]
        out[r] = tuple(h.tolist())
    return tuple(out)


def _virtual_limit(rt: RoundTypes, n: int) -> int:
    return min(n, _sat_product(rt.capacities, n))


def minimal_multiround_sort(p: Permutation, rt: RoundTypes) -> MultiRoundPlan | Infeasible:
    """Sort ``p`` on the given rounds using the fewest virtual piles.

    Builds the virtual type schedule truncated to ``min(n, product)``,
    runs the single-round minimal scan on it, and unembeds the result
    into per-round assignments.  The whole pipeline is linear in ``n``.
    """
    n = p.n
    caps = rt.capacities
    if n == 0:
        return MultiRoundPlan(rt, tuple(() for _ in caps))
    vt = virtual_type_schedule(rt, _virtual_limit(rt, n))
    single = minimal_sort_on_types(p, vt)
    if isinstance(single, Infeasible):
        return single
    hhat = tuple(v - 1 for v in single.assignment.piles)
    return MultiRoundPlan(rt, unembed_hetero(hhat, rt))


def _uniform_chi(rt: RoundTypes) -> int | None:
    """0 if every pile of every round is a queue, 1 if all stacks, else None."""
    seen: set[int] = set()
    for chi in rt.chi_per_round():
        seen.update(np.unique(chi).tolist())
        if len(seen) > 1:
            return None
    if not seen:
        return 0
    return seen.pop()


def _virtual_feasible(p: Permutation, rt: RoundTypes) -> bool:
    if p.n == 0:
        return True
    limit = _virtual_limit(rt, p.n)
    chi = _virtual_chi(rt.chi_per_round(), limit)
    _, overflow = kernels.minimal_scan(kernels.as_int64(p.pos), chi)
    return overflow == 0


def feasible_fixed(p: Permutation, rt: RoundTypes) -> bool:
    """Can the fixed multi-round type schedules sort ``p``?

    Homogeneous rounds use the closed-form run bounds (all queues, or all
    stacks with the parity of the round count deciding which run statistic
    applies); anything mixed goes through the virtual-pile scan.  The two
    routes agree wherever both apply.
    """
    uniform = _uniform_chi(rt)
    bound = _sat_product(rt.capacities, p.n + 1)
    if uniform == 0:
        return p.ascending_runs() <= bound
    if uniform == 1:
        if rt.num_rounds % 2 == 0:
            return p.ascending_runs() <= bound
        return p.descending_runs() <= bound
    return _virtual_feasible(p, rt)


def dealer_search(
    p: Permutation,
    capacities: Sequence[int],
    *,
    search_budget: int | None = None,
    prune: bool = False,
) -> MultiRoundPlan | Infeasible:
    """Brute-force search for pile types sorting ``p`` in the given rounds.

    Enumerates every per-round type schedule in lexicographic order
    (round-major, pile-minor, queue before stack) and decides each by the
    fixed-type reduction; returns the first feasible plan, or
    :class:`Infeasible` once the space is exhausted.  ``search_budget``
    caps the number of schedules examined (raises :class:`BudgetExceeded`
    when more remain past the cap).  ``prune`` enables a sound memo:
    candidates are skipped when their truncated virtual type schedule,
    which alone determines feasibility, was already found infeasible.
    """
    caps = tuple(int(m) for m in capacities)
    for m in caps:
        if m < 1:
            raise ValueError("every round capacity must be >= 1")
    pairs = (PileType.QUEUE, PileType.STACK)
    candidates = itertools.product(*(itertools.product(pairs, repeat=m) for m in caps))
    seen_infeasible: set[bytes] = set()
    examined = 0
    for raw in candidates:
        if search_budget is not None and examined >= search_budget:
            raise BudgetExceeded(examined)
        examined += 1
        rt = RoundTypes(tuple(TypeSchedule.fixed(x) for x in raw))
        key = b""
        if prune:
            limit = _virtual_limit(rt, p.n)
            key = _virtual_chi(rt.chi_per_round(), limit).tobytes()
            if key in seen_infeasible:
                continue
        if _virtual_feasible(p, rt):
            plan = minimal_multiround_sort(p, rt)
            assert isinstance(plan, MultiRoundPlan)
            return plan
        if prune:
            seen_infeasible.add(key)
    return Infeasible(position=None)
