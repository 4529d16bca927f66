"""Brute-force oracles shared across the test suite.

Everything here judges candidate shuffles by simulating them (dealing
piles physically, or ranking the deal keys row by row) and comparing with
the identity; none of it reuses the library's closed-form scan formulas,
so agreement is meaningful.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

import numpy as np
from hypothesis import strategies as st

from pileshuffle import Permutation, PileType, TypeSchedule


def all_perms(n: int):
    for t in itertools.permutations(range(1, n + 1)):
        yield Permutation(t)


def perm_strategy(min_n: int = 0, max_n: int = 8):
    return (
        st.integers(min_n, max_n)
        .flatmap(lambda n: st.permutations(list(range(1, n + 1))))
        .map(lambda seq: Permutation(tuple(seq)))
    )


def physical_shuffle(types: TypeSchedule, piles: Sequence[int], p: Permutation) -> Permutation:
    """Deal the deck card by card onto piles, then collect pile by pile."""
    table: dict[int, list[int]] = {}
    for label in p.deck():
        table.setdefault(piles[label - 1], []).append(label)
    out: list[int] = []
    for idx in sorted(table):
        chunk = table[idx]
        if types.type_at(idx) is PileType.QUEUE:
            out.extend(chunk)
        else:
            out.extend(reversed(chunk))
    return Permutation.from_sequence(out)


@lru_cache(maxsize=None)
def assignment_rows(k: int, n: int) -> np.ndarray:
    """Every assignment of n labels onto piles 0..k-1, one row each."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int8)


@lru_cache(maxsize=None)
def assignment_rows_first0(k: int, n: int) -> np.ndarray:
    rows = assignment_rows(k, n)
    if n == 0:
        return rows
    return rows[rows[:, 0] == 0]


def sorts_mask(rows: np.ndarray, pos: np.ndarray, chi_of_pile: np.ndarray) -> np.ndarray:
    """Which assignment rows sort ``pos``: the deal keys (pile, position
    within the pile's collection order) must run strictly increasing."""
    if rows.shape[1] <= 1:
        return np.ones(len(rows), dtype=bool)
    up = pos[1:] > pos[:-1]
    a, b = rows[:, :-1], rows[:, 1:]
    ok_same = np.where(chi_of_pile[a].astype(bool), ~up[None, :], up[None, :])
    good = (b > a) | ((b == a) & ok_same)
    return good.all(axis=1)


def brute_min_piles(p: Permutation, stacks: bool) -> int:
    """Fewest piles of one type that sort ``p``, by trying every assignment."""
    n = p.n
    if n == 0:
        return 0
    pos = np.asarray(p.pos, dtype=np.int8)
    for k in range(1, n + 1):
        chi = np.full(k, 1 if stacks else 0, dtype=np.uint8)
        if sorts_mask(assignment_rows(k, n), pos, chi).any():
            return k
    raise AssertionError("n piles always sort")


def brute_fixed_types(p: Permutation, chi_x: tuple[int, ...]):
    """(feasible, fewest max-pile-index) over every assignment into the
    fixed schedule ``chi_x``."""
    n = p.n
    if n == 0:
        return True, 0
    pos = np.asarray(p.pos, dtype=np.int8)
    rows = assignment_rows(len(chi_x), n)
    mask = sorts_mask(rows, pos, np.asarray(chi_x, dtype=np.uint8))
    if not mask.any():
        return False, None
    return True, int(rows[mask].max(axis=1).min()) + 1


def brute_dealer_min(p: Permutation) -> int:
    """Fewest piles over every type choice and every assignment opening on
    pile 1."""
    n = p.n
    if n == 0:
        return 0
    pos = np.asarray(p.pos, dtype=np.int8)
    for k in range(1, n + 1):
        rows = assignment_rows_first0(k, n)
        for chi in itertools.product((0, 1), repeat=k):
            if sorts_mask(rows, pos, np.asarray(chi, dtype=np.uint8)).any():
                return k
    raise AssertionError("n piles always sort")


def rank_rows(piles: np.ndarray, pos_rows: np.ndarray, chi_rows: np.ndarray) -> np.ndarray:
    """Shuffle outcome per row: rank labels by (pile, signed position)."""
    n = piles.shape[1]
    sign = np.where(chi_rows == 1, -1, 1)
    key = piles.astype(np.int64) * (2 * n + 2) + sign * pos_rows
    order = np.argsort(key, axis=1, kind="stable")
    return np.argsort(order, axis=1) + 1


def reachable_multiround_feasible(p: Permutation, capacities: tuple[int, ...]) -> bool:
    """Exhaust every (type choice, assignment sequence) by growing the set
    of reachable deck states round by round."""
    n = p.n
    if n == 0:
        return True
    identity = np.arange(1, n + 1, dtype=np.int64)
    start = np.asarray(p.pos, dtype=np.int64)[None, :]
    type_space = itertools.product(
        *(itertools.product((0, 1), repeat=m) for m in capacities))
    for chis in type_space:
        states = start
        for m, chi in zip(capacities, chis):
            rows = assignment_rows(m, n).astype(np.int64)
            piles = np.tile(rows, (len(states), 1))
            pos_rows = np.repeat(states, len(rows), axis=0)
            chi_rows = np.asarray(chi, dtype=np.int64)[piles]
            states = np.unique(rank_rows(piles, pos_rows, chi_rows), axis=0)
        if bool((states == identity[None, :]).all(axis=1).any()):
            return True
    return False
