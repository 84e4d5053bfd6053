"""Integer partitions and boxwise-nested pairs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .charalg import LocalCharacter
from .errors import InvalidNesting


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers; () is the partition of 0."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def boxes(self):
        """Yield boxes (i, j): column i along t1, row j along t2, 0-indexed."""
        for j, part in enumerate(self.parts):
            for i in range(part):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        """Boxwise containment: other sits inside self."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def __repr__(self):
        return f"Partition({list(self.parts)})"


EMPTY = Partition(())


@dataclass(frozen=True)
class NestedPair:
    """A pair inner <= outer of boxwise-nested partitions."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise InvalidNesting(f"{self.inner} not contained in {self.outer}")


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, bound: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in lexicographic descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions_bounded(n, n)]


def nested_pairs(n1: int, n2: int) -> list[NestedPair]:
    """All pairs (mu1 of n1, mu2 of n2) with mu2 boxwise inside mu1."""
    if n2 < 0 or n1 < n2:
        raise InvalidNesting(f"need n1 >= n2 >= 0, got ({n1}, {n2})")
    return [
        NestedPair(mu1, mu2)
        for mu1 in partitions_of(n1)
        for mu2 in partitions_of(n2)
        if mu1.contains(mu2)
    ]


def box_char(mu: Partition) -> LocalCharacter:
    """Sum of t1^i t2^j over the boxes of mu."""
    return LocalCharacter({box: 1 for box in mu.boxes()})
