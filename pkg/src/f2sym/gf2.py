"""Bit-packed linear algebra over GF(2).

Rows are Python ints used as bitsets: bit ``j`` is the entry in column ``j``.
XOR of two ints is row addition, so elimination runs on whole words at a time.
Pivots are taken at the highest set bit of a row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:#x} does not fit in {self.ncols} columns")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        """Build from 0/1 lists; column j of a list becomes bit j."""
        ncols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            packed.append(sum(1 << j for j, bit in enumerate(row) if bit & 1))
        return cls(tuple(packed), ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def mul_vec(self, v: int) -> int:
        """M.v as a bitset over row indices."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(tuple(cols), len(self.rows))


class Echelon:
    """Incremental row-echelon accumulator.

    Keeps one row per pivot (its highest bit). Inserting is O(rank) XORs,
    so large spanning sets can be streamed without building a matrix.
    """

    __slots__ = ("pivots",)

    def __init__(self, rows: Iterable[int] = ()) -> None:
        self.pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, v: int) -> int:
        piv = self.pivots
        while v:
            top = v.bit_length() - 1
            row = piv.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert v; return True if it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        self.pivots[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.pivots)

    def reduced_rows(self) -> tuple[int, ...]:
        """Rows of the unique reduced echelon form, ordered by pivot."""
        done: dict[int, int] = {}
        for p in sorted(self.pivots):
            row = self.pivots[p]
            for q in sorted(done, reverse=True):
                if (row >> q) & 1:
                    row ^= done[q]
            done[p] = row
        return tuple(done[p] for p in sorted(done))

    def residue(self, v: int) -> int:
        """Fully reduced representative of v modulo the span."""
        out = 0
        while v:
            top = v.bit_length() - 1
            row = self.pivots.get(top)
            if row is None:
                out |= 1 << top
                v ^= 1 << top
            else:
                v ^= row
        return out


def rref(m: BitMatrix) -> tuple[BitMatrix, int]:
    """Reduced row-echelon form (zero rows dropped) and rank."""
    rows = Echelon(m.rows).reduced_rows()
    return BitMatrix(rows, m.ncols), len(rows)


def rank(rows: Iterable[int]) -> int:
    return len(Echelon(rows))


def pivot_of(row: int) -> int:
    return row.bit_length() - 1


def kernel(m: BitMatrix) -> BitMatrix:
    """Basis of {v : M.v = 0}; one vector per free column of rref(M)."""
    reduced, _ = rref(m)
    by_pivot = {pivot_of(r): r for r in reduced.rows}
    basis = []
    for f in range(m.ncols):
        if f in by_pivot:
            continue
        v = 1 << f
        for p, r in by_pivot.items():
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(tuple(basis), m.ncols)


def map_kernel_image(images: Sequence[int]) -> tuple[list[int], list[int]]:
    """Kernel and image of the linear map sending basis vector j to images[j].

    Returns (kernel vectors over the source basis, echelon image rows).
    Runs one elimination on the augmented rows ``image_j | e_j``.
    """
    n = len(images)
    shift = n
    ech = Echelon()
    kern = []
    for j, img in enumerate(images):
        row = (img << shift) | (1 << j)
        row = ech.reduce(row)
        if row >> shift:
            ech.pivots[row.bit_length() - 1] = row
        else:
            kern.append(row)
    image_rows = [r >> shift for r in ech.pivots.values()]
    return kern, image_rows


class GradedSubspace:
    """A subspace of the span of an explicit ordered list of basis labels.

    The labels are opaque to this class. Rows are kept in reduced echelon
    form, so two subspaces over the same ambient basis are equal exactly
    when their row tuples are equal.
    """

    __slots__ = ("degree", "basis", "rows", "_ech")

    def __init__(self, degree: int, basis: Sequence[Hashable], vectors: Iterable[int] = ()) -> None:
        self.degree = degree
        self.basis = tuple(basis)
        limit = 1 << len(self.basis)
        ech = Echelon()
        for v in vectors:
            if v < 0 or v >= limit:
                raise ValueError("vector does not fit the ambient basis")
            ech.add(v)
        self._ech = ech
        self.rows = ech.reduced_rows()

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        return len(self.basis)

    @property
    def rowspace(self) -> BitMatrix:
        return BitMatrix(self.rows, len(self.basis))

    def _check_ambient(self, other: "GradedSubspace") -> None:
        if self.degree != other.degree or self.basis != other.basis:
            raise ValueError("subspaces live in different ambient spaces")

    def contains(self, v: int) -> bool:
        if v < 0 or v >= 1 << len(self.basis):
            raise ValueError("vector length does not match the ambient dimension")
        return self._ech.reduce(v) == 0

    def residue(self, v: int) -> int:
        return self._ech.residue(v)

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        self._check_ambient(other)
        return GradedSubspace(self.degree, self.basis, self.rows + other.rows)

    def intersect(self, other: "GradedSubspace") -> "GradedSubspace":
        """Zassenhaus: reduce rows (a|a) and (b|0); rows with empty left half span A n B."""
        self._check_ambient(other)
        n = len(self.basis)
        ech = Echelon()
        for a in self.rows:
            ech.add((a << n) | a)
        for b in other.rows:
            ech.add(b << n)
        mask = (1 << n) - 1
        meet = [r & mask for r in ech.pivots.values() if not r >> n]
        return GradedSubspace(self.degree, self.basis, meet)

    def issubset(self, other: "GradedSubspace") -> bool:
        self._check_ambient(other)
        return all(other.contains(r) for r in self.rows)

    def defect(self, other: "GradedSubspace") -> list[int]:
        """Rows of self that fail to lie in other (witnesses of non-inclusion)."""
        self._check_ambient(other)
        return [r for r in self.rows if not other.contains(r)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return self.degree == other.degree and self.basis == other.basis and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.degree, self.basis, self.rows))

    def __repr__(self) -> str:
        return f"GradedSubspace(degree={self.degree}, dim={self.dim}, ambient={len(self.basis)})"


def intersect(a: GradedSubspace, b: GradedSubspace) -> GradedSubspace:
    return a.intersect(b)


def contains(a: GradedSubspace, v: int) -> bool:
    return a.contains(v)
