"""The affine symmetric group acting on n-cores and on the hyperplane V.

Points of V are stored as integer numerators over a common denominator
``den`` so every pairing and floor is exact.  Most points use ``den == n``;
``rho / n`` needs ``den == 2 * n`` when n is even.

Words follow one convention throughout: ``AffineWord.letters`` are applied
left to right to the empty core, so ``letters == (a1, ..., ak)`` means
``lam = s_ak ... s_a1 (empty)`` and ``w = s_ak ... s_a1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .partitions import (
    Partition,
    addable_cells,
    removable_cells,
    residue,
)


@dataclass(frozen=True)
class AffineWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        bad = [x for x in self.letters if not 0 <= x < self.n]
        if bad:
            raise ValueError(f"generator indices out of range for n={self.n}: {bad}")

    def __len__(self) -> int:
        return len(self.letters)

    def to_json(self) -> list[int]:
        return list(self.letters)


@dataclass(frozen=True)
class Point:
    n: int
    coords: tuple[int, ...]
    den: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if not self.den:
            object.__setattr__(self, "den", self.n)
        if len(self.coords) != self.n:
            raise ValueError(f"point needs {self.n} coordinates, got {len(self.coords)}")
        if sum(self.coords) != 0:
            raise ValueError(f"coordinates must sum to zero: {self.coords}")

    @classmethod
    def origin(cls, n: int) -> Point:
        return cls(n, (0,) * n)

    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.coords)

    def pair(self, vector: Sequence[int]) -> Fraction:
        """Exact inner product with an integer vector."""
        return Fraction(sum(c * x for c, x in zip(self.coords, vector)), self.den)


@dataclass(frozen=True)
class TranslationDecomposition:
    """``w = t_beta . u`` with ``u`` in one-line notation (``u[i-1] = u(i)``)."""

    beta: tuple[int, ...]
    u: tuple[int, ...]

    def apply_u(self, x: Point) -> Point:
        out = [0] * x.n
        for i, c in enumerate(x.coords):
            out[self.u[i] - 1] = c
        return Point(x.n, out, x.den)

    def apply(self, x: Point) -> Point:
        y = self.apply_u(x)
        return Point(x.n, [c + b * x.den for c, b in zip(y.coords, self.beta)], x.den)


def rho_over_n(n: int) -> Point:
    """``rho / n`` where ``rho = ((n-1)/2, ..., (1-n)/2)``."""
    return Point(n, [n + 1 - 2 * i for i in range(1, n + 1)], 2 * n)


def fundamental_weight(n: int, j: int) -> Point:
    """``Lambda_j``; ``Lambda_0 = 0`` (and ``Lambda_n`` coincides with it)."""
    j %= n
    return Point(n, [n - j if i <= j else -j for i in range(1, n + 1)], n)


def root_vector(n: int, u: int, v: int) -> tuple[int, ...]:
    """``alpha_uv = e_u - e_{v+1}`` as an integer vector."""
    vec = [0] * n
    vec[u - 1] = 1
    vec[v] = -1
    return tuple(vec)


def theta_vector(n: int) -> tuple[int, ...]:
    return root_vector(n, 1, n - 1)


def gamma_vector(n: int) -> tuple[int, ...]:
    """Sum of the roots ``alpha_{i,n-1}``; pairs with V like ``-n e_n``."""
    return (1,) * (n - 1) + (1 - n,)


def big_gamma_vector(n: int) -> tuple[int, ...]:
    """Sum of the roots ``alpha_{1,j}``; pairs with V like ``n e_1``."""
    return (n - 1,) + (-1,) * (n - 1)


def apply_generator_core(r: int, lam: Partition, n: int) -> Partition:
    lam = Partition(lam)
    add = [c for c in addable_cells(lam) if residue(c, n) == r]
    if add:
        parts = list(lam) + [0]
        for c in add:
            parts[c.row - 1] += 1
        return Partition(parts)
    remove = [c for c in removable_cells(lam) if residue(c, n) == r]
    if remove:
        parts = list(lam)
        for c in remove:
            parts[c.row - 1] -= 1
        return Partition(parts)
    return lam


def apply_generator_point(i: int, x: Point) -> Point:
    c = list(x.coords)
    if i == 0:
        c[0], c[-1] = c[-1] + x.den, c[0] - x.den
    else:
        c[i - 1], c[i] = c[i], c[i - 1]
    return Point(x.n, c, x.den)


def apply_word_core(word: AffineWord, lam: Partition = Partition()) -> Partition:
    for r in word.letters:
        lam = apply_generator_core(r, lam, word.n)
    return lam


def act(word: AffineWord, x: Point) -> Point:
    """``w(x)``: letters applied left to right."""
    for i in word.letters:
        x = apply_generator_point(i, x)
    return x


def act_inverse(word: AffineWord, x: Point) -> Point:
    """``w^{-1}(x)``: letters applied right to left."""
    for i in reversed(word.letters):
        x = apply_generator_point(i, x)
    return x


def minimal_word(lam: Partition, n: int) -> AffineWord:
    """Minimal length coset representative building ``lam`` from the empty core.

    Peels ``lam`` one generator at a time, always using the smallest residue
    whose action shrinks the core.
    """
    lam = Partition(lam)
    peeled = []
    while lam:
        for r in range(n):
            smaller = apply_generator_core(r, lam, n)
            if smaller.size < lam.size:
                peeled.append(r)
                lam = smaller
                break
        else:
            raise ValueError(f"cannot peel {tuple(lam)}; not a {n}-core")
    return AffineWord(n, tuple(reversed(peeled)))


def translation_decomposition(lam: Partition, n: int) -> TranslationDecomposition:
    from .abacus import balanced_vector

    beta = balanced_vector(lam, n).a
    # u^{-1} stably sorts -beta into weakly decreasing order
    order = sorted(range(n), key=lambda i: beta[i])
    return TranslationDecomposition(tuple(beta), tuple(i + 1 for i in order))


def floor_pairings(x: Point) -> dict[tuple[int, int], int]:
    """``floor(<x, alpha_uv>)`` for every positive root, keyed by ``(u, v)``."""
    n, c, d = x.n, x.coords, x.den
    return {(u, v): (c[u - 1] - c[v]) // d for v in range(1, n) for u in range(1, v + 1)}


def phi_map(lam: Partition, n: int):
    """The geometric core-to-alcove bijection: Shi coordinates of ``w^{-1} A_0``."""
    from .shi import AlcoveCoords

    x = act_inverse(minimal_word(lam, n), rho_over_n(n))
    return AlcoveCoords.from_mapping(n, floor_pairings(x))


def vertex_image(lam: Partition, n: int, j: int) -> Point:
    return act_inverse(minimal_word(lam, n), fundamental_weight(n, j))


def center_image(lam: Partition, n: int) -> Point:
    return act_inverse(minimal_word(lam, n), rho_over_n(n))


def hook_identity_check(lam: Partition, n: int) -> bool:
    lam = Partition(lam)
    x = center_image(lam, n)
    return n * x.pair(theta_vector(n)) == lam.first_part + len(lam) + n - 1


def words_agree(first: AffineWord, second: TranslationDecomposition, points: Iterable[Point]) -> bool:
    return all(act(first, x) == second.apply(x) for x in points)
