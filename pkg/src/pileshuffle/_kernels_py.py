"""Pure-Python/NumPy fallback for the compiled scan kernels.

Same signatures and return types as ``_kernels_c``; ``kernels`` picks one
of the two at import time.  Batch functions vectorize across rows with
NumPy; the sequentially dependent scans fall back to plain Python loops.
"""

from __future__ import annotations

import numpy as np


def check_scan(piles: np.ndarray, pos: np.ndarray, chi: np.ndarray) -> int:
    """First position s (1-based) violating the adjacent sort condition, else 0.

    chi[s-1] is 1 when the pile holding label s is a stack.
    """
    if len(pos) < 2:
        return 0
    up = pos[1:] > pos[:-1]
    need_new = np.where(chi[:-1].astype(bool), up, ~up)
    bad = piles[1:] < piles[:-1] + need_new
    if not bad.any():
        return 0
    return int(np.argmax(bad)) + 1


def minimal_scan(pos: np.ndarray, chi_schedule: np.ndarray):
    """Pointwise-minimal sorting assignment for a fixed pile-type schedule.

    Returns (h, 0) with 1-based piles on success, or (None, s) where s is
    the first 1-based position needing a pile beyond len(chi_schedule).
    """
    n = len(pos)
    if n == 0:
        return np.empty(0, dtype=np.int64), 0
    budget = len(chi_schedule)
    if budget == 0:
        return None, 1
    h = np.empty(n, dtype=np.int64)
    h[0] = 1
    cur = 1
    pl = pos.tolist()
    chi = chi_schedule.tolist()
    for s in range(n - 1):
        grow = (pl[s + 1] > pl[s]) if chi[cur - 1] else (pl[s + 1] < pl[s])
        if grow:
            cur += 1
            if cur > budget:
                return None, s + 2
        h[s + 1] = cur
    return h, 0


def dealer_scan(pos: np.ndarray):
    """Greedy minimal sort with pile types chosen during the deal.

    Returns (h, chi) where h is the 1-based assignment and chi[k-1] the
    chosen type indicator of pile k (0 queue, 1 stack).  A pile opened by
    the final label is a queue.
    """
    n = len(pos)
    h = np.empty(n, dtype=np.int64)
    if n == 0:
        return h, np.empty(0, dtype=np.uint8)
    pl = pos.tolist()
    chi = [0 if (n == 1 or pl[1] > pl[0]) else 1]
    cur = 1
    cur_chi = chi[0]
    h[0] = 1
    for s in range(n - 1):
        grow = (pl[s + 1] > pl[s]) if cur_chi else (pl[s + 1] < pl[s])
        if grow:
            cur += 1
            cur_chi = 1 if (s + 2 < n and pl[s + 2] <= pl[s + 1]) else 0
            chi.append(cur_chi)
        h[s + 1] = cur
    return h, np.array(chi, dtype=np.uint8)


def readings_scan(deck: np.ndarray) -> int:
    """Replay left-to-right scans collecting 1..n in order; count the scans."""
    n = len(deck)
    if n == 0:
        return 0
    dl = deck.tolist()
    passes = 0
    nxt = 1
    while nxt <= n:
        passes += 1
        for v in dl:
            if v == nxt:
                nxt += 1
    return passes


def batch_descents(perms: np.ndarray) -> np.ndarray:
    return np.count_nonzero(perms[:, 1:] < perms[:, :-1], axis=1).astype(np.int64)


def batch_ascents(perms: np.ndarray) -> np.ndarray:
    return np.count_nonzero(perms[:, 1:] > perms[:, :-1], axis=1).astype(np.int64)


def batch_dealer_piles(perms: np.ndarray) -> np.ndarray:
    """Dealer's-choice minimal pile count per row.

    Sequential in the scan position but vectorized across rows: a new pile
    opens at each direction change not absorbed by the previous opening.
    """
    b, n = perms.shape
    if n <= 1:
        return np.full(b, n, dtype=np.int64)
    asc = perms[:, 1:] > perms[:, :-1]
    piles = np.ones(b, dtype=np.int64)
    cur = asc[:, 0].copy()
    for i in range(1, n - 1):
        mismatch = asc[:, i] != cur
        piles += mismatch
        cur = np.where(mismatch, asc[:, min(i + 1, n - 2)], cur)
    return piles
