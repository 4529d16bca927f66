"""Sortability of uniformly random decks.

The number of length-n permutations with exactly k descents is the
Eulerian number <n, k>, so the chance that m piles of one type sort a
random deck is the normalized partial row sum up to k = m - 1.  The
exact path is all big-integer/rational arithmetic; a normal approximation
and a seeded Monte Carlo estimator cover large n and the dealer's-choice
regime, which has no closed form here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .sorting import SortMode

__all__ = [
    "EulerianTable",
    "McEstimate",
    "eulerian",
    "sortable_probability_exact",
    "sortable_probability_mc",
    "normal_approx_probability",
]

# Samples per Monte Carlo shard; each shard draws from its own generator
# seeded by SeedSequence(seed, spawn_key=(shard,)), so estimates do not
# depend on how shards are executed.
MC_SHARD = 1 << 14


class EulerianTable:
    """Rows of the Eulerian triangle as exact integers, grown on demand."""

    def __init__(self, max_n: int = 0):
        self._rows: list[tuple[int, ...]] = [(1,)]
        self.extend(max_n)

    def extend(self, max_n: int) -> None:
        while len(self._rows) <= max_n:
            n = len(self._rows)
            prev = self._rows[-1]
            row = []
            for k in range(n):
                left = prev[k] if k < len(prev) else 0
                right = prev[k - 1] if k >= 1 else 0
                row.append((k + 1) * left + (n - k) * right)
            self._rows.append(tuple(row))

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError("n must be >= 0")
        self.extend(n)
        return self._rows[n]

    def value(self, n: int, k: int) -> int:
        if not 0 <= k < max(n, 1):
            raise ValueError(f"k={k} out of range 0..{max(n, 1) - 1} for n={n}")
        return self.row(n)[k]


_shared_table = EulerianTable()


def eulerian(n: int, k: int) -> int:
    """Count of length-n permutations with exactly k descents (or ascents)."""
    return _shared_table.value(n, k)


def sortable_probability_exact(n: int, m: int, mode: SortMode = SortMode.QUEUES) -> Fraction:
    """Exact probability that m piles sort a uniform random permutation of
    length n, as a rational in lowest terms.

    Queues and stacks give the same value: ascent and descent counts are
    equidistributed.  There is no closed form for dealer's choice.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if mode is SortMode.DEALER:
        raise ValueError("no exact formula for dealer's choice; use the Monte Carlo estimator")
    row = _shared_table.row(n)
    hits = sum(row[: min(m, n)])
    return Fraction(hits, math.factorial(n))


def normal_approx_probability(n: int, m: int) -> float:
    """Normal approximation of the same probability.

    The descent count of a uniform random permutation concentrates at
    n/2 with variance n/12, so P[descents <= m - 1] is approximately
    Phi evaluated at the half-integer-corrected threshold,
    ``(m - 1 + 1/2 - (n - 1)/2) / sqrt(n/12) = (m - n/2) / sqrt(n/12)``.
    Approximation only; Phi is evaluated through erfc, accurate to well
    over 10 significant digits.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    z = (m - n / 2) / math.sqrt(n / 12)
    return 0.5 * math.erfc(-z / math.sqrt(2))


@dataclass(frozen=True)
class McEstimate:
    n: int
    m: int
    mode: SortMode
    samples: int
    seed: int
    hits: int
    estimate: float
    stderr: float

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "seed": self.seed,
        }


def _shard_sizes(samples: int) -> list[int]:
    out = [MC_SHARD] * (samples // MC_SHARD)
    if samples % MC_SHARD:
        out.append(samples % MC_SHARD)
    return out


def sortable_probability_mc(
    n: int, m: int, mode: SortMode, samples: int, seed: int = 0
) -> McEstimate:
    """Monte Carlo estimate of the sortable fraction, with binomial
    standard error.

    Sampling is pinned for reproducibility: PCG64 generators, one per
    fixed-size shard, permuting 1..n rows in place (NumPy's in-place
    Fisher-Yates).  The same (n, m, mode, samples, seed) always returns
    the same estimate.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    hits = 0
    for shard, size in enumerate(_shard_sizes(samples)):
        rng = np.random.Generator(np.random.PCG64(
            np.random.SeedSequence(seed, spawn_key=(shard,))))
        perms = np.tile(np.arange(1, n + 1, dtype=np.int64), (size, 1))
        rng.permuted(perms, axis=1, out=perms)
        if mode is SortMode.QUEUES:
            ok = kernels.batch_descents(perms) <= m - 1
        elif mode is SortMode.STACKS:
            ok = kernels.batch_ascents(perms) <= m - 1
        else:
            ok = kernels.batch_dealer_piles(perms) <= m
        hits += int(np.count_nonzero(ok))
    estimate = hits / samples
    stderr = math.sqrt(estimate * (1.0 - estimate) / samples)
    return McEstimate(n=n, m=m, mode=mode, samples=samples, seed=seed,
                      hits=hits, estimate=estimate, stderr=stderr)
