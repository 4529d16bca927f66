import itertools
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pileshuffle import (
    Permutation,
    PileAssignment,
    TypeSchedule,
    apply_shuffle,
    check_sort,
    dealer_choice_minimal_sort,
    minimal_queue_sort,
    reduce_to_sort,
    render_tableau,
    shift_shuffle,
)

from helpers import all_perms, assignment_rows, perm_strategy, physical_shuffle, sorts_mask

STACK_EXAMPLE = dict(
    p=Permutation.from_sequence([4, 5, 6, 1, 2, 3]),
    h=(4, 2, 1, 2, 4, 2),
    types=TypeSchedule.all_stacks(),
)


def test_stack_example_deck():
    out = apply_shuffle(STACK_EXAMPLE["types"], STACK_EXAMPLE["h"], STACK_EXAMPLE["p"])
    assert out.deck() == (3, 2, 6, 4, 1, 5)


@given(perm_strategy())
def test_single_queue_is_identity_map(p):
    if p.n == 0:
        return
    assert apply_shuffle(TypeSchedule.all_queues(), (1,) * p.n, p) == p


@given(perm_strategy())
def test_single_stack_reverses_deck(p):
    if p.n == 0:
        return
    out = apply_shuffle(TypeSchedule.all_stacks(), (1,) * p.n, p)
    assert out.deck() == tuple(reversed(p.deck()))


def test_apply_shuffle_validation():
    p = Permutation((1, 2, 3))
    with pytest.raises(ValueError, match="assignment length"):
        apply_shuffle("QQ", (1, 2), p)
    with pytest.raises(ValueError, match="outside schedule"):
        apply_shuffle("QQ", (1, 3, 2), p)
    with pytest.raises(ValueError, match=">= 1"):
        PileAssignment((0, 1))


def test_check_sort_examples():
    p = Permutation((3, 7, 2, 4, 6, 8, 1, 5))
    assert check_sort(TypeSchedule.all_queues(), (1, 1, 2, 2, 2, 2, 3, 3), p)
    assert check_sort(TypeSchedule.all_queues(), (1,), Permutation.identity(1))
    assert check_sort("Q", (1, 1, 1), Permutation.identity(3))
    assert not check_sort("S", (1, 1, 1), Permutation.identity(3))


@pytest.mark.parametrize("n", range(7))
def test_check_sort_equals_shuffle_to_identity_exhaustive(n):
    # Sweep all assignments into <= 3 piles and all type schedules over
    # them, vectorized; anchor the two vectorized routes against the real
    # functions on a sample below.
    rows = assignment_rows(3, n)
    identity = Permutation.identity(n)
    up_template = None
    for p in all_perms(n):
        pos = np.asarray(p.pos, dtype=np.int8)
        for chi in itertools.product((0, 1), repeat=3):
            chi_arr = np.asarray(chi, dtype=np.uint8)
            by_keys = sorts_mask(rows, pos, chi_arr)
            if n <= 1:
                assert by_keys.all()
                continue
            up = pos[1:] > pos[:-1]
            a, b = rows[:, :-1], rows[:, 1:]
            need = np.where(chi_arr[a].astype(bool), up[None, :], ~up[None, :])
            by_condition = (b >= a + need).all(axis=1)
            assert np.array_equal(by_keys, by_condition), (p, chi)


def test_vectorized_masks_match_library():
    rng = random.Random(42)
    for _ in range(300):
        n = rng.randint(1, 6)
        p = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        k = rng.randint(1, 3)
        chi = tuple(rng.randint(0, 1) for _ in range(k))
        row = tuple(rng.randint(0, k - 1) for _ in range(n))
        sched = TypeSchedule.fixed("".join("S" if c else "Q" for c in chi))
        piles = tuple(v + 1 for v in row)
        mask = sorts_mask(
            np.asarray([row], dtype=np.int8),
            np.asarray(p.pos, dtype=np.int8),
            np.asarray(chi, dtype=np.uint8),
        )[0]
        sorted_by_lib = apply_shuffle(sched, piles, p) == Permutation.identity(n)
        assert bool(mask) == sorted_by_lib == check_sort(sched, piles, p)


@given(perm_strategy(max_n=10), st.randoms(use_true_random=False))
def test_apply_matches_physical_simulation(p, rnd):
    if p.n == 0:
        return
    piles = tuple(rnd.randint(1, 4) for _ in range(p.n))
    sched = TypeSchedule.fixed("".join(rnd.choice("QS") for _ in range(4)))
    assert apply_shuffle(sched, piles, p) == physical_shuffle(sched, piles, p)


def test_tableau_three_queue_demo():
    p = Permutation((3, 7, 2, 4, 6, 8, 1, 5))
    plan = minimal_queue_sort(p)
    tab = render_tableau(p, plan.assignment, plan.types)
    assert [tab.row_labels(i) for i in (1, 2, 3)] == [(1, 2), (3, 4, 5, 6), (7, 8)]
    assert tab.collected() == (1, 2, 3, 4, 5, 6, 7, 8)
    text = tab.render()
    assert "P1 Q" in text and "P3 Q" in text


def test_tableau_stack_example_rows():
    tab = render_tableau(STACK_EXAMPLE["p"], STACK_EXAMPLE["h"], STACK_EXAMPLE["types"])
    assert len(tab.rows) == 4
    assert tab.row_labels(1) == (3,)
    assert tab.row_labels(2) == (4, 6, 2)
    assert tab.row_labels(3) == ()
    assert tab.row_labels(4) == (5, 1)
    assert tab.collected() == (3, 2, 6, 4, 1, 5)
    assert tab.to_dict()["piles"][2] == {"pile": 3, "type": "S", "labels": []}


def test_tableau_single_cell():
    tab = render_tableau(Permutation((1,)), (1,), "Q")
    assert tab.rows == ((1,),)


def test_tableau_collection_matches_apply_random():
    rng = random.Random(5)
    for _ in range(1000):
        n = rng.randint(0, 12)
        p = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        piles = tuple(rng.randint(1, 5) for _ in range(n))
        sched = TypeSchedule.fixed("".join(rng.choice("QS") for _ in range(5)))
        tab = render_tableau(p, piles, sched)
        assert tab.collected() == apply_shuffle(sched, piles, p).deck()


def test_shift_shuffle_identity_relabel():
    p = STACK_EXAMPLE["p"]
    r = Permutation.identity(6)
    h, pr, sr = shift_shuffle(STACK_EXAMPLE["types"], STACK_EXAMPLE["h"], p, r)
    assert h.piles == STACK_EXAMPLE["h"]
    assert pr == p
    assert sr == apply_shuffle(STACK_EXAMPLE["types"], STACK_EXAMPLE["h"], p)


@pytest.mark.parametrize("n", range(6))
def test_shift_shuffle_exhaustive_small(n):
    hetero = TypeSchedule.fixed("QS" * max(n, 1))
    for p in all_perms(n):
        base_h = minimal_queue_sort(p).assignment
        hetero_h = tuple((s % (2 * max(n, 1))) + 1 for s in range(n))
        for r in all_perms(n):
            for sched, h in ((TypeSchedule.all_queues(), base_h.piles), (hetero, hetero_h)):
                shifted_h, p_r, sigma_r = shift_shuffle(sched, h, p, r)
                assert apply_shuffle(sched, shifted_h, p_r) == sigma_r


@given(perm_strategy(max_n=6), st.randoms(use_true_random=False))
def test_shift_shuffle_random(p, rnd):
    n = p.n
    r = Permutation(tuple(rnd.sample(range(1, n + 1), n)))
    piles = tuple(rnd.randint(1, 3) for _ in range(n))
    sched = TypeSchedule.fixed("".join(rnd.choice("QS") for _ in range(3)))
    shifted_h, p_r, sigma_r = shift_shuffle(sched, piles, p, r)
    assert apply_shuffle(sched, shifted_h, p_r) == sigma_r


def test_reduce_to_sort_edges():
    p = Permutation((3, 1, 2))
    assert reduce_to_sort(p, Permutation.identity(3)) == p
    assert reduce_to_sort(p, p) == Permutation.identity(3)
    with pytest.raises(ValueError):
        reduce_to_sort(p, Permutation.identity(4))


@given(perm_strategy(min_n=1, max_n=6), st.randoms(use_true_random=False))
def test_reduce_to_sort_roundtrip(p, rnd):
    n = p.n
    target = Permutation(tuple(rnd.sample(range(1, n + 1), n)))
    reduced = reduce_to_sort(p, target)
    plan = dealer_choice_minimal_sort(reduced)
    shifted = tuple(plan.assignment.piles[target(s) - 1] for s in range(1, n + 1))
    assert apply_shuffle(plan.types, shifted, p) == target
