"""n-abacus summaries of n-cores.

An abacus is never materialized.  A flush abacus is described by the entry
of the first gap on each runner; everything else follows from that.

Two normalizations appear:

* the *original* abacus has beads at the beta-numbers and at every negative
  integer.  Its first-gap levels form the level vector ``(b_0, ..., b_{n-1})``
  with ``b_0 == 0``.
* the *balanced* abacus is the shift of the original whose balance number
  (sum over runners of the largest bead level) is zero.  Its largest bead
  levels, read on runners ``0..n-1``, form the balanced vector
  ``(a_1, ..., a_n)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import NotACoreError, Partition, beta_numbers, partition_from_beta


@dataclass(frozen=True)
class LevelVector:
    n: int
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if len(self.b) != self.n:
            raise ValueError(f"level vector needs {self.n} entries, got {len(self.b)}")
        if any(x < 0 for x in self.b):
            raise ValueError(f"level numbers must be nonnegative: {self.b}")

    def to_json(self) -> dict:
        return {"n": self.n, "b": list(self.b)}

    @classmethod
    def from_json(cls, data: dict) -> LevelVector:
        return cls(int(data["n"]), tuple(data["b"]))


@dataclass(frozen=True)
class BalancedVector:
    n: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) != self.n:
            raise ValueError(f"balanced vector needs {self.n} entries, got {len(self.a)}")

    @property
    def balance(self) -> int:
        return sum(self.a)


def is_flush(beads: Iterable[int], n: int) -> bool:
    """Whether the abacus with the given positive beads (plus all negatives) is flush."""
    beads = set(beads)
    return all(x - n < 0 or (x - n) in beads for x in beads)


def _first_gaps(lam: Partition, n: int) -> list[int]:
    beta = beta_numbers(lam)
    if not is_flush(beta, n):
        raise NotACoreError(f"{tuple(lam)} is not a {n}-core (abacus not flush)")
    counts = [0] * n
    for x in beta:
        counts[x % n] += 1
    if counts[0]:
        raise NotACoreError(f"{tuple(lam)} is not a {n}-core (bead on runner 0)")
    return [counts[i] * n + i for i in range(n)]


def level_vector(lam: Partition, n: int) -> LevelVector:
    gaps = _first_gaps(Partition(lam), n)
    return LevelVector(n, tuple(g // n for g in gaps))


def core_from_level_vector(v: LevelVector) -> Partition:
    if v.b[0] != 0:
        raise ValueError(f"b_0 must be 0, got {v.b[0]}")
    n = v.n
    beta = [q * n + i for i in range(1, n) for q in range(v.b[i])]
    return partition_from_beta(beta)


def balance_number(runner_levels: Sequence[int]) -> int:
    return sum(runner_levels)


def balanced_vector(lam: Partition, n: int) -> BalancedVector:
    lam = Partition(lam)
    gaps = _first_gaps(lam, n)
    # original balance number is sum(b_i - 1) = len(lam) - n; shift every entry to cancel it
    shift = n - len(lam)
    a = [0] * n
    for g in gaps:
        g += shift
        a[g % n] = g // n - 1
    return BalancedVector(n, tuple(a))
