"""Partitions and Young-diagram combinatorics."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Instances are ordinary tuples, so they hash, compare and slice as such.
    Note that tuple comparison is lexicographic, which is the canonical
    order used everywhere in this package.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> set[tuple[int, int]]:
        """Set of (row, column) boxes of the Young diagram, zero based."""
        return {(r, c) for r, part in enumerate(self) for c in range(part)}

    def contains(self, other: "Partition") -> bool:
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"


def parse_partition(text: str) -> Partition:
    """Read the bracketed text form, e.g. ``"[3,1,1]"`` or ``"[]"``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must be bracketed: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Partition()
    return Partition(int(tok) for tok in body.split(","))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > c) for c in range(lam[0]))


def is_self_conjugate(lam: Partition) -> bool:
    return conjugate(lam) == tuple(lam)


def gamma_hook(j: int) -> Partition:
    """The symmetric hook (j, 1^(j-1)) with 2j - 1 boxes."""
    if j < 1:
        raise ValueError("gamma_hook needs j >= 1")
    return Partition((j,) + (1,) * (j - 1))


def square_partition(j: int) -> Partition:
    if j < 0:
        raise ValueError("square side must be nonnegative")
    return Partition((j,) * j)


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(d: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(d, d))


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of d, lexicographically decreasing."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return list(_partitions_cached(d))


def partition_count(d: int) -> int:
    return len(_partitions_cached(d))


def is_border_strip(outer: Partition, inner: Partition) -> bool:
    """True iff outer/inner is a nonempty, edge-connected skew shape without a 2x2 block."""
    if not outer.contains(inner):
        return False
    cells = outer.cells() - inner.cells()
    if not cells:
        return False
    for r, c in cells:
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        r, c = queue.popleft()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cells)


def border_strip_additions(lam: Partition, k: int) -> list[Partition]:
    """All mu containing lam with mu/lam a border strip of size k."""
    if k < 1:
        raise ValueError("border strip size must be positive")
    lam = Partition(lam)
    return [
        mu
        for mu in _partitions_cached(lam.size + k)
        if mu.contains(lam) and is_border_strip(mu, lam)
    ]


def count_self_conjugate(d: int) -> int:
    return sum(1 for lam in _partitions_cached(d) if is_self_conjugate(lam))
