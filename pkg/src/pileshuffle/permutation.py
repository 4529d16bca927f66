"""Permutations of a labeled deck, in the embedding convention.

A deck of ``n`` cards carries fixed labels ``1..n``.  Its order is
represented by the permutation that maps each label to its position:
``p(s)`` is the position of label ``s``.  This is the inverse of the
perhaps more familiar sequence convention (the labels read off the deck
top to bottom), and it has the property that label ``s`` precedes label
``t`` in the deck exactly when ``p(s) < p(t)``.

>>> p = Permutation.from_sequence([4, 5, 6, 1, 2, 3])
>>> p.pos
(4, 5, 6, 1, 2, 3)
>>> p.deck()
(4, 5, 6, 1, 2, 3)
>>> Permutation.from_sequence([3, 6, 4, 1, 5, 2]).pos
(4, 6, 1, 3, 5, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "InvalidPermutationError",
    "Permutation",
    "compose",
    "parse_labels",
    "readings",
]


class InvalidPermutationError(ValueError):
    """A sequence that was supposed to be a bijection on 1..n is not."""


def _checked_labels(values: Sequence[int], what: str) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    n = len(out)
    seen = bytearray(n + 1)
    for v in out:
        if v < 1 or v > n:
            raise InvalidPermutationError(f"{what} value {v} out of range 1..{n}")
        if seen[v]:
            raise InvalidPermutationError(f"duplicate {what} value {v}")
        seen[v] = 1
    return out


@dataclass(frozen=True)
class Permutation:
    """An immutable deck order; ``pos[s-1]`` is the position of label ``s``."""

    pos: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pos", _checked_labels(self.pos, "position"))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_embedding(cls, positions: Iterable[int]) -> "Permutation":
        """Build from the embedding convention: element ``s`` of the input
        is the position of label ``s``."""
        return cls(tuple(positions))

    @classmethod
    def from_sequence(cls, deck: Iterable[int]) -> "Permutation":
        """Build from the sequence convention: the input lists labels in
        deck order, and the result maps each label to its position.

        >>> Permutation.from_sequence([2, 1]).pos
        (2, 1)
        """
        labels = _checked_labels(tuple(deck), "label")
        pos = [0] * len(labels)
        for k, s in enumerate(labels, start=1):
            pos[s - 1] = k
        return cls(tuple(pos))

    @property
    def n(self) -> int:
        return len(self.pos)

    def __call__(self, s: int) -> int:
        if not 1 <= s <= self.n:
            raise IndexError(f"label {s} out of range 1..{self.n}")
        return self.pos[s - 1]

    def deck(self) -> tuple[int, ...]:
        """The deck in the sequence convention (label at each position)."""
        out = [0] * self.n
        for s, k in enumerate(self.pos, start=1):
            out[k - 1] = s
        return tuple(out)

    def invert(self) -> "Permutation":
        return Permutation(self.deck())

    def compose(self, g: "Permutation") -> "Permutation":
        """``self`` after ``g``: the permutation ``s -> self(g(s))``."""
        if self.n != g.n:
            raise ValueError(f"length mismatch: {self.n} != {g.n}")
        pos = self.pos
        return Permutation(tuple(pos[v - 1] for v in g.pos))

    def is_identity(self) -> bool:
        return all(v == s for s, v in enumerate(self.pos, start=1))

    def descents(self) -> int:
        """Positions ``s`` with ``p(s+1) < p(s)``; 0 for ``n <= 1``."""
        pos = self.pos
        return sum(b < a for a, b in zip(pos, pos[1:]))

    def ascents(self) -> int:
        pos = self.pos
        return sum(b > a for a, b in zip(pos, pos[1:]))

    def ascending_runs(self) -> int:
        """Maximal increasing contiguous segments of ``pos``; 0 when empty."""
        return 0 if self.n == 0 else 1 + self.descents()

    def descending_runs(self) -> int:
        return 0 if self.n == 0 else 1 + self.ascents()


def compose(f: Permutation, g: Permutation) -> Permutation:
    """The permutation ``s -> f(g(s))``."""
    return f.compose(g)


def readings(deck: Sequence[int]) -> int:
    """Left-to-right scans needed to pick the labels 1..n out of ``deck``
    in increasing order without backtracking.

    Counted by literally replaying the scans, so this is an independent
    route to the ascending-runs statistic of the deck's embedding.

    >>> readings([3, 6, 4, 1, 5, 2])
    3
    """
    labels = _checked_labels(tuple(deck), "label")
    n = len(labels)
    if n == 0:
        return 0
    from . import kernels

    return kernels.readings_scan(kernels.as_int64(labels))


def parse_labels(text: str) -> tuple[int, ...]:
    """Parse a whitespace- or comma-separated list of integers.

    Raises ValueError naming the offending token and its position.
    """
    tokens = text.replace(",", " ").split()
    out = []
    for i, tok in enumerate(tokens, start=1):
        try:
            out.append(int(tok))
        except ValueError:
            raise ValueError(f"token {i}: {tok!r} is not an integer") from None
    return tuple(out)
