"""Bivariate generating functions for regions with a fixed separating wall.

``F(p, q)`` sums ``p**stat_c * q**stat_r`` over the dominant regions having
``H_{alpha,m}`` as a separating wall.  ``recursion`` builds it from the
closed form for the highest root by column-append operators and a p/q swap;
``brute`` sums over every region and is the reference.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .shi import (
    DEFAULT_REGION_CAP,
    Root,
    all_roots,
    enumerate_regions,
    is_separating_wall,
    stat_c,
    stat_r,
)

_VARS = ("p", "q")


class BivariatePolynomial:
    """Sparse polynomial in p and q with integer coefficients.

    ``terms`` maps ``(p_degree, q_degree)`` to a nonzero coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent ({a}, {b})")
            acc[int(a), int(b)] += int(c)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> BivariatePolynomial:
        return cls({(a, b): coeff})

    @classmethod
    def constant(cls, c: int) -> BivariatePolynomial:
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        return BivariatePolynomial(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> BivariatePolynomial:
        return self * -1

    def __sub__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        return self + -other

    def __mul__(self, other) -> BivariatePolynomial:
        if isinstance(other, int):
            return BivariatePolynomial({k: c * other for k, c in self._terms.items()})
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                acc[a1 + a2, b1 + b2] += c1 * c2
        return BivariatePolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BivariatePolynomial:
        if k < 0:
            raise ValueError("negative power")
        out = BivariatePolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, p: int = 1, q: int = 1) -> int:
        return sum(c * p ** a * q ** b for (a, b), c in self._terms.items())

    def degree(self, var: str) -> int:
        i = _VARS.index(var)
        return max((k[i] for k in self._terms), default=-1)

    def to_json(self) -> list[dict]:
        return [{"p": a, "q": b, "coeff": c} for (a, b), c in self._terms.items()]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> BivariatePolynomial:
        return cls([((d["p"], d["q"]), d["coeff"]) for d in data])

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for (a, b), c in self._terms.items():
            mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(_VARS, (a, b)) if e)
            body = mono if abs(c) == 1 and mono else "*".join(filter(None, (str(abs(c)), mono)))
            if not out:
                out = f"-{body}" if c < 0 else body
            else:
                out += f" - {body}" if c < 0 else f" + {body}"
        return out

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self._terms!r})"


ZERO = BivariatePolynomial()
ONE = BivariatePolynomial.constant(1)


@dataclass(frozen=True)
class WallQuery:
    n: int
    m: int
    root: Root

    def __post_init__(self):
        if self.n < 2 or self.m < 1:
            raise ValueError(f"need n >= 2 and m >= 1, got n={self.n}, m={self.m}")
        object.__setattr__(self, "root", Root(*self.root).check(self.n))


def bracket(k: int) -> BivariatePolynomial:
    """``[k]_{p,q} = sum_{j<k} p^j q^(k-1-j)``."""
    if k < 0:
        raise ValueError(f"bracket size must be nonnegative, got {k}")
    return BivariatePolynomial({(j, k - 1 - j): 1 for j in range(k)})


def p_bracket(k: int) -> BivariatePolynomial:
    """``[k]`` specialized at ``q = 1``: ``1 + p + ... + p^(k-1)``."""
    return BivariatePolynomial({(j, 0): 1 for j in range(k)})


def truncate(f: BivariatePolynomial, var: str, bound: int) -> BivariatePolynomial:
    i = _VARS.index(var)
    return BivariatePolynomial({k: c for k, c in f if k[i] <= bound})


def phi_op(k: int, m: int, f: BivariatePolynomial) -> BivariatePolynomial:
    """Append a column: lifts the generating function from dimension k-1 to k."""
    if k < 3:
        raise ValueError(f"phi_op needs k >= 3, got {k}")
    shifted = BivariatePolynomial({(a, b + m): c for (a, b), c in f})
    return truncate(shifted * p_bracket(m * (k - 2) + 1), "p", (k - 1) * m)


def rho_op(f: BivariatePolynomial) -> BivariatePolynomial:
    return BivariatePolynomial({(b, a): c for (a, b), c in f})


def base_theta(n: int, m: int) -> BivariatePolynomial:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return BivariatePolynomial.monomial(m, m) * bracket(m) ** (n - 2)


def recursion_steps(query: WallQuery) -> list[tuple[str, int]]:
    """Operator schedule, innermost first: ``("base", d)``, ``("phi", k)``, ``("rho", d)``."""
    u, v = query.root
    steps = [("base", v - u + 2)]
    steps += [("phi", k) for k in range(v - u + 3, v + 2)]
    steps.append(("rho", v + 1))
    steps += [("phi", k) for k in range(v + 2, query.n + 1)]
    return steps


def recursion(query: WallQuery) -> BivariatePolynomial:
    f = ZERO
    for op, k in recursion_steps(query):
        if op == "base":
            f = base_theta(k, query.m)
        elif op == "phi":
            f = phi_op(k, query.m, f)
        else:
            f = rho_op(f)
    return f


def brute_all(n: int, m: int, cap: int | None = DEFAULT_REGION_CAP) -> dict[Root, BivariatePolynomial]:
    """Generating functions for every positive root from one pass over the regions."""
    roots = all_roots(n)
    acc: dict[Root, dict[tuple[int, int], int]] = {r: defaultdict(int) for r in roots}
    for e in enumerate_regions(n, m, cap):
        key = None
        for r in roots:
            if is_separating_wall(e, r):
                if key is None:
                    key = (stat_c(e), stat_r(e))
                acc[r][key] += 1
    return {r: BivariatePolynomial(acc[r]) for r in roots}


def brute(query: WallQuery, cap: int | None = DEFAULT_REGION_CAP) -> BivariatePolynomial:
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for e in enumerate_regions(query.n, query.m, cap):
        if is_separating_wall(e, query.root):
            acc[stat_c(e), stat_r(e)] += 1
    return BivariatePolynomial(acc)
