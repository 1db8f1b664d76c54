"""Exhaustive verification batteries behind ``shiwalls verify``.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
identity.  Counterexamples are collected into ``detail`` instead.
"""
from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import abacus, affine, genfunc, shi
from .partitions import (
    Partition,
    beta_numbers,
    conjugate,
    cores_up_to,
    first_hook,
    is_core,
    partitions_up_to,
    partitions_with_first_hook,
)

SUITES = ("bijection", "walls", "geometry", "genfunc")


@dataclass
class Bounds:
    max_n: int = 5
    max_m: int = 2
    max_core_size: int = 20
    max_entry: int = 4

    def ns(self, lo: int = 2, cap: int | None = None) -> range:
        hi = self.max_n if cap is None else min(self.max_n, cap)
        return range(lo, hi + 1)

    def ms(self) -> range:
        return range(1, self.max_m + 1)


@dataclass
class CheckResult:
    suite: str
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, what: Callable[[], str] | str):
        self.cases += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(what() if callable(what) else what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  [{self.suite}] {self.name}  ({self.cases} cases)"
        if self.failures:
            text += "\n" + "\n".join(f"      - {f}" for f in self.failures)
        return text


@lru_cache(maxsize=None)
def _cores(n: int, max_size: int) -> tuple[Partition, ...]:
    return tuple(cores_up_to(n, max_size))


def theta_wall_regions(n: int, m: int) -> set[shi.RegionTableau]:
    theta = shi.Root.theta(n)
    return {e for e in shi.enumerate_regions(n, m) if shi.is_separating_wall(e, theta)}


def theta_wall_cores(n: int, m: int) -> list[Partition]:
    """n-cores whose corner hook is ``n(m-1)+1``, found by scanning all partitions with that hook."""
    return [lam for lam in partitions_with_first_hook(n * (m - 1) + 1) if is_core(lam, n)]


def regions_from_cores(cores: Iterable[Partition], n: int, m: int, bijection) -> set[shi.RegionTableau]:
    return {shi.region_from_alcove(bijection(lam, n), m) for lam in cores}


# -- bijection ------------------------------------------------------------------

def check_bijection(b: Bounds) -> list[CheckResult]:
    out = []
    ex = CheckResult("bijection", "worked example (5,2,1,1,1) <-> Shi coordinates, b = (0,3,1,1)")
    lam = Partition((5, 2, 1, 1, 1))
    k = shi.AlcoveCoords.from_rows(4, [[3, 1, 1], [1, 0], [1]])
    ex.expect(abacus.level_vector(lam, 4).b == (0, 3, 1, 1), "level vector")
    ex.expect(shi.psi(lam, 4) == k, "psi")
    ex.expect(shi.psi_inverse(k) == lam, "psi_inverse")
    out.append(ex)

    rt = CheckResult("bijection", f"psi_inverse(psi(core)) = core, |core| <= {b.max_core_size}")
    ab = CheckResult("bijection", "abacus round trip and sum of level numbers = length")
    agree = CheckResult("bijection", "phi_map = psi (empirical agreement)")
    for n in b.ns():
        for lam in _cores(n, b.max_core_size):
            rt.expect(shi.psi_inverse(shi.psi(lam, n)) == lam, lambda: f"n={n} {tuple(lam)}")
            v = abacus.level_vector(lam, n)
            ab.expect(abacus.core_from_level_vector(v) == lam and sum(v.b) == len(lam),
                      lambda: f"n={n} {tuple(lam)}")
            agree.expect(affine.phi_map(lam, n) == shi.psi(lam, n),
                         lambda: f"counterexample n={n} {tuple(lam)}: phi={affine.phi_map(lam, n).rows()} "
                                 f"psi={shi.psi(lam, n).rows()}")
    out += [rt, ab, agree]

    inv = CheckResult("bijection", f"psi(psi_inverse(k)) = k, entries <= {b.max_entry}")
    for n in b.ns(cap=5):
        for k in shi.dominant_alcoves(n, b.max_entry):
            inv.expect(shi.psi(shi.psi_inverse(k), n) == k, lambda: f"n={n} {k.rows()}")
    out.append(inv)

    flush = CheckResult("bijection", "abacus flush <=> n-core, |lambda| <= 15")
    conj = CheckResult("bijection", "n-core status is conjugation invariant, |lambda| <= 15")
    for n in b.ns():
        for lam in partitions_up_to(min(15, b.max_core_size)):
            core = is_core(lam, n)
            flush.expect(abacus.is_flush(beta_numbers(lam), n) == core, lambda: f"n={n} {tuple(lam)}")
            conj.expect(is_core(conjugate(lam), n) == core, lambda: f"n={n} {tuple(lam)}")
    out += [flush, conj]
    return out


# -- walls -----------------------------------------------------------------------

def check_walls(b: Bounds) -> list[CheckResult]:
    out = []
    cat = CheckResult("walls", "region count = C((m+1)n, n)/(mn+1)")
    oracle = CheckResult("walls", "is_separating_wall <=> neighbor_wall_oracle")
    count = CheckResult("walls", "#regions with H(theta,m) as separating wall = m^(n-2)")
    stab = CheckResult("walls", "wall status for v <= n-2 survives column removal")
    sym = CheckResult("walls", "conjugation is a valid involution swapping walls and statistics")
    cols = CheckResult("walls", "column sums biject regions with bounded partitions")
    for n in b.ns():
        for m in b.ms():
            regions = list(shi.enumerate_regions(n, m))
            cat.expect(len(regions) == shi.dominant_region_count(n, m),
                       lambda: f"n={n} m={m}: {len(regions)} regions")
            roots = shi.all_roots(n)
            theta_count = 0
            seen_mu = set()
            for e in regions:
                for r in roots:
                    wall = shi.is_separating_wall(e, r)
                    oracle.expect(wall == shi.neighbor_wall_oracle(e, r), lambda: f"{e.rows()} {r}")
                    if n >= 3 and r.v <= n - 2:
                        stab.expect(wall == shi.is_separating_wall(shi.remove_first_column(e), r),
                                    lambda: f"{e.rows()} {r}")
                theta_count += shi.is_separating_wall(e, shi.Root.theta(n))
                c = shi.conjugate_tableau(e)
                sym.expect(shi.is_valid_region_tableau(c) and shi.conjugate_tableau(c) == e
                           and shi.stat_r(c) == shi.stat_c(e) and shi.stat_c(c) == shi.stat_r(e)
                           and all(shi.is_separating_wall(e, r)
                                   == shi.is_separating_wall(c, shi.conjugate_root(r, n)) for r in roots),
                           lambda: f"{e.rows()}")
                mu = shi.column_sums(e)
                seen_mu.add(mu)
                cols.expect(shi.region_from_column_sums(mu, n, m) == e, lambda: f"{e.rows()}")
            count.expect(theta_count == m ** (n - 2), lambda: f"n={n} m={m}: {theta_count}")
            cols.expect(len(seen_mu) == len(regions), lambda: f"n={n} m={m}: column sums collide")
    out += [cat, oracle, count, stab, sym, cols]

    thm = CheckResult("walls", "H(theta,m) separating <=> corner hook n(m-1)+1, via psi and via phi")
    stats = CheckResult("walls", "on S(theta): r = length, c = first part; alcove is (nm+1)-core minimal")
    for n in b.ns():
        for m in b.ms():
            walls = theta_wall_regions(n, m)
            cores = theta_wall_cores(n, m)
            via_psi = regions_from_cores(cores, n, m, shi.psi)
            via_phi = regions_from_cores(cores, n, m, affine.phi_map)
            thm.expect(walls == via_psi, lambda: f"n={n} m={m}: psi set differs")
            thm.expect(walls == via_phi, lambda: f"n={n} m={m}: phi set differs")
            for lam in cores:
                k = shi.psi(lam, n)
                e = shi.region_from_alcove(k, m)
                stats.expect(k.entries == e.entries and is_core(lam, n * m + 1)
                             and shi.stat_r(e) == len(lam) and shi.stat_c(e) == lam.first_part,
                             lambda: f"n={n} m={m} {tuple(lam)}")
    out += [thm, stats]
    return out


# -- geometry --------------------------------------------------------------------

def check_geometry(b: Bounds, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    gamma = CheckResult("geometry", "<w^-1(rho/n), gamma> = lambda_1 + (n-1)/2 and <w^-1(Lambda_r), gamma> = lambda_1")
    big = CheckResult("geometry", "<w^-1(rho/n), Gamma> = length + (n-1)/2 and <w^-1(Lambda_(s-1)), Gamma> = length")
    hook = CheckResult("geometry", "n<w^-1(rho/n), theta> = lambda_1 + length + n - 1 = h11 + n")
    sums = CheckResult("geometry", "phi coordinates: column sum = lambda_1, row sum = length")
    deco = CheckResult("geometry", "t_beta u reproduces the word action; beta = w(0)")
    word = CheckResult("geometry", "minimal word rebuilds the core with growing prefixes")
    for n in b.ns():
        g, big_g, th = affine.gamma_vector(n), affine.big_gamma_vector(n), affine.theta_vector(n)
        half = Fraction(n - 1, 2)
        for lam in _cores(n, b.max_core_size):
            w = affine.minimal_word(lam, n)
            x = affine.act_inverse(w, affine.rho_over_n(n))
            lam1, ell = lam.first_part, len(lam)
            r = lam1 % n or n
            s = (1 - ell) % n or n
            gamma.expect(x.pair(g) == lam1 + half
                         and affine.act_inverse(w, affine.fundamental_weight(n, r)).pair(g) == lam1,
                         lambda: f"n={n} {tuple(lam)}")
            big.expect(x.pair(big_g) == ell + half
                       and affine.act_inverse(w, affine.fundamental_weight(n, s - 1)).pair(big_g) == ell,
                       lambda: f"n={n} {tuple(lam)}")
            hook.expect(n * x.pair(th) == lam1 + ell + n - 1 == first_hook(lam) + n,
                        lambda: f"n={n} {tuple(lam)}")
            k = affine.phi_map(lam, n)
            sums.expect(shi.is_valid_alcove_coords(k)
                        and sum(k[i, n - 1] for i in range(1, n)) == lam1
                        and sum(k[1, j] for j in range(1, n)) == ell,
                        lambda: f"n={n} {tuple(lam)}")
            dec = affine.translation_decomposition(lam, n)
            pts = [_random_point(rng, n) for _ in range(3)]
            deco.expect(affine.words_agree(w, dec, pts)
                        and affine.act(w, affine.Point.origin(n)).coords == tuple(n * c for c in dec.beta),
                        lambda: f"n={n} {tuple(lam)}")
            mu, ok = Partition(), True
            for letter in w.letters:
                nxt = affine.apply_generator_core(letter, mu, n)
                ok &= nxt.size > mu.size
                mu = nxt
            word.expect(ok and mu == lam, lambda: f"n={n} {tuple(lam)}")
    return [gamma, big, hook, sums, deco, word]


def _random_point(rng: random.Random, n: int) -> affine.Point:
    c = [rng.randint(-3 * n, 3 * n) for _ in range(n - 1)]
    return affine.Point(n, c + [-sum(c)])


# -- generating functions ------------------------------------------------------------

def check_genfunc(b: Bounds) -> list[CheckResult]:
    rec = CheckResult("genfunc", "recursion = brute force for every root")
    base = CheckResult("genfunc", "brute(theta) = p^m q^m [m]^(n-2), value m^(n-2) at p=q=1")
    sym = CheckResult("genfunc", "F(alpha_uv)(p,q) = F(alpha_(n-v),(n-u))(q,p)")
    for n in b.ns():
        for m in b.ms():
            table = genfunc.brute_all(n, m)
            for root, f in table.items():
                g = genfunc.recursion(genfunc.WallQuery(n, m, root))
                rec.expect(f == g, lambda: f"n={n} m={m} {root}: brute {f} vs recursion {g}")
                sym.expect(f == genfunc.rho_op(table[shi.conjugate_root(root, n)]),
                           lambda: f"n={n} m={m} {root}")
            closed = genfunc.base_theta(n, m)
            base.expect(table[shi.Root.theta(n)] == closed and closed(1, 1) == m ** (n - 2),
                        lambda: f"n={n} m={m}")
    return [rec, base, sym]


def run(suite: str, bounds: Bounds) -> list[CheckResult]:
    runners = {
        "bijection": check_bijection,
        "walls": check_walls,
        "geometry": check_geometry,
        "genfunc": check_genfunc,
    }
    names = SUITES if suite == "all" else (suite,)
    results: list[CheckResult] = []
    for name in names:
        results += runners[name](bounds)
    return results
