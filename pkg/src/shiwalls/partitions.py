"""Integer partitions, hooks, beta-numbers and the n-core predicate.

Cells use 1-based ``(row, col)`` coordinates in English notation.
"""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Iterator, NamedTuple


class NotACoreError(ValueError):
    """Raised when an operation needs an n-core and gets something else."""


class Partition(tuple):
    """Weakly decreasing tuple of positive parts, trailing zeros trimmed.

    Being a tuple subclass, ``Partition((2, 1)) == (2, 1)`` and partitions
    hash like plain tuples.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    @property
    def first_part(self) -> int:
        return self[0] if self else 0

    def part(self, row: int) -> int:
        """``lambda_row`` with 1-based rows; 0 beyond the length."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def cells(self) -> Iterator[Cell]:
        for i, row_len in enumerate(self, start=1):
            for j in range(1, row_len + 1):
                yield Cell(i, j)

    def __contains__(self, cell) -> bool:  # type: ignore[override]
        if isinstance(cell, Cell):
            return cell.row >= 1 and 1 <= cell.col <= self.part(cell.row)
        return super().__contains__(cell)


class Cell(NamedTuple):
    row: int
    col: int


def conjugate(lam: Partition) -> Partition:
    lam = Partition(lam)
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam.first_part + 1))


def hook_length(lam: Partition, cell: Cell) -> int:
    lam = Partition(lam)
    cell = Cell(*cell)
    if cell not in lam:
        raise ValueError(f"cell {tuple(cell)} is outside the diagram of {tuple(lam)}")
    arm = lam.part(cell.row) - cell.col
    leg = sum(1 for x in lam[cell.row:] if x >= cell.col)
    return arm + leg + 1


def first_hook(lam: Partition) -> int:
    """Hook length of the corner cell, with the convention -1 for the empty partition."""
    lam = Partition(lam)
    if not lam:
        return -1
    return lam[0] + len(lam) - 1


def hook_lengths(lam: Partition) -> list[list[int]]:
    lam = Partition(lam)
    conj = conjugate(lam)
    return [[(row_len - j) + (conj[j - 1] - i) + 1 for j in range(1, row_len + 1)]
            for i, row_len in enumerate(lam, start=1)]


def beta_numbers(lam: Partition) -> tuple[int, ...]:
    """First-column hook lengths, strictly decreasing."""
    lam = Partition(lam)
    ell = len(lam)
    return tuple(lam[k] + ell - 1 - k for k in range(ell))


def partition_from_beta(beta: Iterable[int]) -> Partition:
    beta = sorted(set(beta), reverse=True)
    if beta and beta[-1] <= 0:
        raise ValueError("beta-numbers must be positive")
    ell = len(beta)
    return Partition(b - (ell - 1 - k) for k, b in enumerate(beta))


def is_core(lam: Partition, n: int) -> bool:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return all(h % n for row in hook_lengths(lam) for h in row)


def residue(cell: Cell, n: int) -> int:
    cell = Cell(*cell)
    return (cell.col - cell.row) % n


def addable_cells(lam: Partition) -> list[Cell]:
    lam = Partition(lam)
    cells = []
    for i in range(1, len(lam) + 2):
        if i == 1 or lam.part(i - 1) > lam.part(i):
            cells.append(Cell(i, lam.part(i) + 1))
    return cells


def removable_cells(lam: Partition) -> list[Cell]:
    lam = Partition(lam)
    return [Cell(i, lam.part(i)) for i in range(1, len(lam) + 1)
            if lam.part(i) > lam.part(i + 1)]


def partitions_of(size: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size`` in reverse lexicographic order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield Partition()
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, first):
            yield Partition((first, *rest))


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    for size in range(max_size + 1):
        yield from partitions_of(size)


def cores_up_to(n: int, max_size: int) -> list[Partition]:
    """Every n-core with at most ``max_size`` boxes, found by filtering all partitions."""
    return [lam for lam in partitions_up_to(max_size) if is_core(lam, n)]


def partitions_with_first_hook(h: int) -> Iterator[Partition]:
    """All partitions whose corner hook length equals ``h`` (there are 2**(h-1) for h >= 1)."""
    if h < 1:
        if h == -1:
            yield Partition()
        return
    for first in range(h, 0, -1):
        ell = h + 1 - first
        for rest in combinations_with_replacement(range(first, 0, -1), ell - 1):
            yield Partition((first, *rest))
