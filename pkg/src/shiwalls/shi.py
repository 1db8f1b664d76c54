"""Shi coordinates, Shi tableaux and separating walls for dominant regions.

Staircase arrays are stored flat in column order of the roots:
``(1,1), (1,2), (2,2), (1,3), (2,3), (3,3), ...``.  With that order the
array for dimension ``n - 1`` is a prefix of the array for ``n``, so
adding or removing the column ``e_{*, n-1}`` is a slice.

JSON and display use the diagram layout instead: row ``i`` lists
``e_{i,n-1}, ..., e_{i,i}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .abacus import LevelVector, core_from_level_vector, level_vector
from .partitions import Partition


class ResourceCapExceeded(RuntimeError):
    """The requested enumeration is larger than the configured cap."""


DEFAULT_REGION_CAP = 2_000_000


def index(u: int, v: int) -> int:
    return v * (v - 1) // 2 + u - 1


def staircase_size(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def diagram_order(n: int) -> tuple[int, ...]:
    """Flat indices in diagram row-major order."""
    return tuple(index(u, v) for u in range(1, n) for v in range(n - 1, u - 1, -1))


class Root(NamedTuple):
    u: int
    v: int

    @classmethod
    def theta(cls, n: int) -> Root:
        return cls(1, n - 1)

    def check(self, n: int) -> Root:
        if not 1 <= self.u <= self.v <= n - 1:
            raise ValueError(f"root alpha_{self.u},{self.v} is not a positive root for n={n}")
        return self

    def __str__(self) -> str:
        return f"alpha_{self.u},{self.v}"


def all_roots(n: int) -> list[Root]:
    return [Root(u, v) for v in range(1, n) for u in range(1, v + 1)]


class _Staircase:
    n: int
    entries: tuple[int, ...]

    def _check_shape(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if len(self.entries) != staircase_size(self.n):
            raise ValueError(
                f"n={self.n} needs {staircase_size(self.n)} entries, got {len(self.entries)}")

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.entries[index(u, v)]

    def rows(self) -> list[list[int]]:
        n = self.n
        return [[self[u, v] for v in range(n - 1, u - 1, -1)] for u in range(1, n)]

    def diagram_sequence(self) -> tuple[int, ...]:
        return tuple(self.entries[i] for i in diagram_order(self.n))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(u, v): self[u, v] for v in range(1, self.n) for u in range(1, v + 1)}

    @staticmethod
    def _entries_from_rows(n: int, rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
        if len(rows) != n - 1 or any(len(r) != n - 1 - i for i, r in enumerate(rows)):
            raise ValueError(f"rows do not form a staircase for n={n}: {rows}")
        flat = [0] * staircase_size(n)
        for u, row in enumerate(rows, start=1):
            for offset, x in enumerate(row):
                flat[index(u, n - 1 - offset)] = x
        return tuple(flat)

    def __str__(self) -> str:
        width = max((len(str(x)) for x in self.entries), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows())


@dataclass(frozen=True)
class AlcoveCoords(_Staircase):
    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        self._check_shape()

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence[int]]) -> AlcoveCoords:
        return cls(n, cls._entries_from_rows(n, rows))

    @classmethod
    def from_mapping(cls, n: int, k: Mapping[tuple[int, int], int]) -> AlcoveCoords:
        return cls(n, tuple(k[u, v] for v in range(1, n) for u in range(1, v + 1)))

    @classmethod
    def zero(cls, n: int) -> AlcoveCoords:
        return cls(n, (0,) * staircase_size(n))

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.rows()}

    @classmethod
    def from_json(cls, data: dict) -> AlcoveCoords:
        return cls.from_rows(int(data["n"]), data["k"])


@dataclass(frozen=True)
class RegionTableau(_Staircase):
    n: int
    m: int
    entries: tuple[int, ...]

    def __post_init__(self):
        self._check_shape()
        if self.m < 1:
            raise ValueError(f"m must be at least 1, got {self.m}")
        if any(not 0 <= x <= self.m for x in self.entries):
            raise ValueError(f"entries must lie in [0, {self.m}]: {self.entries}")

    @classmethod
    def from_rows(cls, n: int, m: int, rows: Sequence[Sequence[int]]) -> RegionTableau:
        return cls(n, m, cls._entries_from_rows(n, rows))

    @classmethod
    def zero(cls, n: int, m: int) -> RegionTableau:
        return cls(n, m, (0,) * staircase_size(n))

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "e": self.rows()}

    @classmethod
    def from_json(cls, data: dict) -> RegionTableau:
        return cls.from_rows(int(data["n"]), int(data["m"]), data["e"])


# -- validity -----------------------------------------------------------------

def alcove_violation(k: AlcoveCoords, dominant: bool = True) -> str | None:
    """Describe the first failed alcove condition, or None when ``k`` is valid."""
    n = k.n
    if dominant:
        for (u, v), x in k.as_dict().items():
            if x < 0:
                return f"k_{u}{v} = {x} < 0 (not dominant)"
    for v in range(2, n):
        for u in range(1, v):
            x = k[u, v]
            for t in range(u, v):
                s = k[u, t] + k[t + 1, v]
                if not s <= x <= s + 1:
                    return (f"sandwich condition fails: k_{u}{t} + k_{t + 1}{v} = {s} "
                            f"but k_{u}{v} = {x}")
    return None


def is_valid_alcove_coords(k: AlcoveCoords, dominant: bool = True) -> bool:
    return alcove_violation(k, dominant) is None


def region_violation(e: RegionTableau) -> str | None:
    n, m = e.n, e.m
    for v in range(2, n):
        for u in range(1, v):
            x = e[u, v]
            for t in range(u, v):
                s = e[u, t] + e[t + 1, v]
                if s <= m - 1:
                    if x not in (s, s + 1):
                        return (f"e_{u}{t} + e_{t + 1}{v} = {s} <= m-1 requires "
                                f"e_{u}{v} in {{{s},{s + 1}}}, got {x}")
                elif x != m:
                    return f"e_{u}{t} + e_{t + 1}{v} = {s} >= m forces e_{u}{v} = {m}, got {x}"
    return None


def is_valid_region_tableau(e: RegionTableau) -> bool:
    return region_violation(e) is None


def region_from_alcove(k: AlcoveCoords, m: int) -> RegionTableau:
    e = RegionTableau(k.n, m, tuple(min(x, m) for x in k.entries))
    problem = region_violation(e)
    if problem:
        raise ValueError(f"capped coordinates are not a region tableau: {problem}")
    return e


# -- the combinatorial bijection ----------------------------------------------

def psi(lam: Partition, n: int) -> AlcoveCoords:
    b = level_vector(lam, n).b
    p = sorted(b[i - 1] * n + i - 1 for i in range(1, n + 1))
    return AlcoveCoords.from_mapping(
        n, {(i, j): (p[j] - p[i - 1]) // n for j in range(1, n) for i in range(1, j + 1)})


def psi_inverse(k: AlcoveCoords) -> Partition:
    problem = alcove_violation(k)
    if problem:
        raise ValueError(f"not the coordinates of a dominant alcove: {problem}")
    n = k.n
    q = [0] + [k[1, i - 1] for i in range(2, n + 1)]
    # inv[j] = number of earlier positions 2..j whose residue exceeds r_{j+1}
    inv = {1: 0}
    for j in range(2, n):
        inv[j] = sum(1 for i in range(2, j + 1) if k[1, j] == k[1, i - 1] + k[i, j] + 1)
    r = [0] * (n + 1)
    placed: list[int] = []  # residues r_2..r_{j+1} sorted ascending
    for j in range(1, n):
        if inv[j] > len(placed):
            raise ValueError(f"inconsistent inversion count at position {j + 1}")
        placed.insert(len(placed) - inv[j], j + 1)
    # ``placed`` lists positions in increasing residue order
    for rank, pos in enumerate(placed, start=1):
        r[pos] = rank
    b = [0] * n
    for i in range(2, n + 1):
        b[r[i]] = q[i - 1]
    lam = core_from_level_vector(LevelVector(n, b))
    if psi(lam, n) != k:
        raise ValueError("coordinates do not come from an n-core")
    return lam


# -- enumeration --------------------------------------------------------------

def dominant_region_count(n: int, m: int) -> int:
    """Extended Catalan number ``C((m+1)n, n) / (mn+1)``."""
    return comb((m + 1) * n, n) // (m * n + 1)


def _allowed(sums: Iterable[int], m: int) -> range | tuple[int, ...]:
    sums = list(sums)
    if not sums:
        return range(m + 1)
    lo, hi = min(sums), max(sums)
    if hi >= m:
        return (m,) if lo >= m - 1 else ()
    if hi == lo:
        return (lo, lo + 1)
    if hi == lo + 1:
        return (hi,)
    return ()


def new_columns(prefix: Sequence[int], n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Valid entries ``(e_{1,n-1}, ..., e_{n-1,n-1})`` extending an (n-1)-tableau prefix."""
    v = n - 1
    col = [0] * (v + 1)

    def fill(i: int):
        if i == 0:
            yield tuple(col[1:])
            return
        sums = (prefix[index(i, t)] + col[t + 1] for t in range(i, v))
        for x in _allowed(sums, m):
            col[i] = x
            yield from fill(i - 1)

    return fill(v)


def dominant_alcoves(n: int, bound: int) -> Iterator[AlcoveCoords]:
    """Every dominant alcove whose Shi coordinates are all at most ``bound``."""
    def extend(prefix: tuple[int, ...], d: int):
        if d > n:
            yield prefix
            return
        v = d - 1
        col = [0] * (v + 1)

        def fill(i: int):
            if i == 0:
                yield tuple(col[1:])
                return
            sums = [prefix[index(i, t)] + col[t + 1] for t in range(i, v)]
            lo, hi = (max(sums), min(sums) + 1) if sums else (0, bound)
            for x in range(max(lo, 0), min(hi, bound) + 1):
                col[i] = x
                yield from fill(i - 1)

        for c in fill(v):
            yield from extend(prefix + c, d + 1)

    return (AlcoveCoords(n, ent) for ent in extend((), 2))


@lru_cache(maxsize=32)
def _region_entries(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    level: list[tuple[int, ...]] = [()]
    for d in range(2, n + 1):
        level = [prefix + col for prefix in level for col in new_columns(prefix, d, m)]
    order = diagram_order(n)
    level.sort(key=lambda ent: tuple(ent[i] for i in order))
    return tuple(level)


def enumerate_regions(n: int, m: int, cap: int | None = DEFAULT_REGION_CAP) -> Iterator[RegionTableau]:
    if n < 2 or m < 1:
        raise ValueError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    expected = dominant_region_count(n, m)
    if cap is not None and expected > cap:
        raise ResourceCapExceeded(f"{expected} regions for n={n}, m={m} exceeds cap {cap}")
    return (RegionTableau(n, m, ent) for ent in _region_entries(n, m))


# -- walls and statistics -----------------------------------------------------

def is_separating_wall(e: RegionTableau, root: Root) -> bool:
    u, v = root.check(e.n)
    m = e.m
    if e[u, v] != m:
        return False
    return all(e[u, t] + e[t + 1, v] == m - 1 for t in range(u, v))


def neighbor_wall_oracle(e: RegionTableau, root: Root) -> bool:
    u, v = root.check(e.n)
    if e[u, v] != e.m:
        return False
    entries = list(e.entries)
    entries[index(u, v)] = e.m - 1
    return is_valid_region_tableau(RegionTableau(e.n, e.m, entries))


def stat_r(e: RegionTableau) -> int:
    return sum(e[1, j] for j in range(1, e.n))


def stat_c(e: RegionTableau) -> int:
    return sum(e[i, e.n - 1] for i in range(1, e.n))


def remove_first_column(e: RegionTableau) -> RegionTableau:
    if e.n <= 2:
        raise ValueError("cannot remove a column from a tableau with n = 2")
    return RegionTableau(e.n - 1, e.m, e.entries[:staircase_size(e.n - 1)])


def conjugate_tableau(e: RegionTableau) -> RegionTableau:
    n = e.n
    return RegionTableau(n, e.m, tuple(e[n - j, n - i] for j in range(1, n) for i in range(1, j + 1)))


def conjugate_root(root: Root, n: int) -> Root:
    return Root(n - root.v, n - root.u)


def column_sums(e: RegionTableau) -> Partition:
    """``mu_j = sum_i e_{i,n-j}``: the diagram's column sums, left to right."""
    n = e.n
    return Partition(sum(e[i, n - j] for i in range(1, n - j + 1)) for j in range(1, n))


def region_from_column_sums(mu: Sequence[int], n: int, m: int) -> RegionTableau:
    mu = list(mu) + [0] * (n - len(mu))
    if len(mu) != n or mu[-1] != 0:
        raise ValueError(f"need mu_1..mu_n with mu_n = 0 for n={n}: {mu}")
    if any(mu[i] < mu[i + 1] for i in range(n - 1)):
        raise ValueError(f"column sums must be weakly decreasing: {mu}")
    if any(not 0 <= mu[i - 1] <= (n - i) * m for i in range(1, n + 1)):
        raise ValueError(f"column sums out of range for n={n}, m={m}: {mu}")

    # column with roots ending at v must sum to mu_{n-v}; build v = 1, 2, ... and backtrack
    def extend(prefix: tuple[int, ...], d: int) -> Iterator[tuple[int, ...]]:
        if d > n:
            yield prefix
            return
        target = mu[n - (d - 1) - 1]
        for col in new_columns(prefix, d, m):
            if sum(col) == target:
                yield from extend(prefix + col, d + 1)

    found = list(extend((), 2))
    if len(found) != 1:
        raise AssertionError(f"expected a unique region for column sums {mu}, found {len(found)}")
    return RegionTableau(n, m, found[0])
