from __future__ import annotations

import itertools
import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shiwalls import shi
from shiwalls.abacus import level_vector
from shiwalls.partitions import Partition, conjugate, first_hook
from shiwalls.shi import (
    AlcoveCoords,
    RegionTableau,
    ResourceCapExceeded,
    Root,
    all_roots,
    column_sums,
    conjugate_root,
    conjugate_tableau,
    dominant_alcoves,
    dominant_region_count,
    enumerate_regions,
    is_separating_wall,
    is_valid_alcove_coords,
    is_valid_region_tableau,
    neighbor_wall_oracle,
    psi,
    psi_inverse,
    region_from_alcove,
    region_from_column_sums,
    remove_first_column,
    stat_c,
    stat_r,
)

from conftest import cores

LAM = Partition((5, 2, 1, 1, 1))
K_EXAMPLE = AlcoveCoords.from_mapping(4, {(1, 3): 3, (1, 2): 1, (1, 1): 1, (2, 3): 1, (2, 2): 0, (3, 3): 1})


def region(n, m, *rows):
    return RegionTableau.from_rows(n, m, rows)


def all_arrays(n, top):
    size = shi.staircase_size(n)
    return itertools.product(range(top + 1), repeat=size)


def test_flat_index_is_prefix_stable():
    assert [shi.index(u, v) for v in range(1, 4) for u in range(1, v + 1)] == list(range(6))
    assert K_EXAMPLE.rows() == [[3, 1, 1], [1, 0], [1]]
    assert str(K_EXAMPLE) == "3 1 1\n1 0\n1"


def test_root_validation():
    assert Root.theta(5) == Root(1, 4)
    assert str(Root(2, 4)) == "alpha_2,4"
    with pytest.raises(ValueError):
        Root(3, 2).check(5)
    with pytest.raises(ValueError):
        Root(1, 5).check(5)
    assert len(all_roots(5)) == 10


@pytest.mark.parametrize(
    "k, valid",
    [
        (AlcoveCoords.zero(4), True),
        (K_EXAMPLE, True),
        (AlcoveCoords.from_mapping(3, {(1, 2): 2, (1, 1): 0, (2, 2): 0}), False),
        (AlcoveCoords.from_mapping(3, {(1, 2): 0, (1, 1): -1, (2, 2): 0}), False),
    ],
)
def test_alcove_validity_examples(k, valid):
    assert is_valid_alcove_coords(k) is valid


def test_non_dominant_alcove_is_allowed_when_asked():
    k = AlcoveCoords.from_mapping(3, {(1, 2): 0, (1, 1): -1, (2, 2): 0})
    assert is_valid_alcove_coords(k, dominant=False)
    assert "not dominant" in shi.alcove_violation(k)


@pytest.mark.parametrize(
    "rows, valid",
    [
        (([2, 1], [2]), True),
        (([0, 0], [0]), True),
        (([1, 1], [1]), False),
        (([2, 1], [0]), True),
        (([1, 1], [0]), True),
        (([0, 1], [0]), False),
    ],
)
def test_region_validity_examples(rows, valid):
    assert is_valid_region_tableau(region(3, 2, *rows)) is valid


def test_region_entries_bounded():
    with pytest.raises(ValueError):
        region(3, 2, [3, 0], [0])


@pytest.mark.parametrize("n, m", [(2, 1), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)])
def test_regions_are_capped_alcoves(n, m):
    """The entrywise validity conditions agree with capping genuine alcoves at m."""
    by_conditions = {
        ent for ent in all_arrays(n, m) if is_valid_region_tableau(RegionTableau(n, m, ent))
    }
    # the m-minimal alcove of a region has entries at most (n - 1) m
    capped = {tuple(min(x, m) for x in k.entries) for k in dominant_alcoves(n, (n - 1) * m + 1)}
    assert by_conditions == capped
    listed = [e.entries for e in enumerate_regions(n, m)]
    assert len(listed) == len(set(listed)) == dominant_region_count(n, m)
    assert set(listed) == by_conditions


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dominant_alcoves_brute(n):
    expected = {ent for ent in all_arrays(n, 3) if is_valid_alcove_coords(AlcoveCoords(n, ent))}
    assert {k.entries for k in dominant_alcoves(n, 3)} == expected


def test_region_from_alcove():
    assert region_from_alcove(AlcoveCoords.from_rows(3, [[3, 1], [2]]), 2) == region(3, 2, [2, 1], [2])
    assert region_from_alcove(AlcoveCoords.zero(5), 3) == RegionTableau.zero(5, 3)
    assert region_from_alcove(K_EXAMPLE, 1) == region(4, 1, [1, 1, 1], [1, 0], [1])


def test_psi_examples():
    assert psi(LAM, 4) == K_EXAMPLE
    assert level_vector(LAM, 4).b == (0, 3, 1, 1)
    assert psi(Partition(), 5) == AlcoveCoords.zero(5)
    assert psi(Partition((2,)), 3) == AlcoveCoords.from_mapping(3, {(1, 2): 1, (1, 1): 0, (2, 2): 1})


def test_psi_inverse_examples():
    assert psi_inverse(K_EXAMPLE) == LAM
    assert psi_inverse(AlcoveCoords.zero(4)) == Partition()
    with pytest.raises(ValueError, match="sandwich"):
        psi_inverse(AlcoveCoords.from_mapping(3, {(1, 2): 2, (1, 1): 0, (2, 2): 0}))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_psi_round_trip_on_cores(n):
    seen = set()
    for lam in cores(n, 20):
        k = psi(lam, n)
        assert is_valid_alcove_coords(k)
        assert psi_inverse(k) == lam
        seen.add(k.entries)
    assert len(seen) == len(cores(n, 20))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_psi_inverse_round_trip_on_alcoves(n):
    for k in dominant_alcoves(n, 4):
        assert psi(psi_inverse(k), n) == k


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.randoms(use_true_random=False))))
@settings(max_examples=60, deadline=None)
def test_psi_inverse_random_alcove(args):
    n, rng = args
    # random walk down the columns, choosing a valid entry at each step
    entries = []
    for v in range(1, n):
        col = [0] * (v + 2)
        for u in range(v, 0, -1):
            sums = [entries[shi.index(u, t)] + col[t + 1] for t in range(u, v)]
            lo, hi = (max(sums), min(sums) + 1) if sums else (0, 4)
            col[u] = rng.randint(lo, hi) if lo <= hi else lo
        entries.extend(col[1 : v + 1])
    k = AlcoveCoords(n, entries)
    if is_valid_alcove_coords(k):
        assert psi(psi_inverse(k), n) == k


@pytest.mark.parametrize("n, m, count", [(3, 2, 12), (2, 1, 2), (4, 2, 55), (5, 3, 969)])
def test_region_counts(n, m, count):
    assert sum(1 for _ in enumerate_regions(n, m)) == count == comb((m + 1) * n, n) // (m * n + 1)


def test_enumeration_small_listing_and_order():
    assert [e.entries for e in enumerate_regions(2, 1)] == [(0,), (1,)]
    for n, m in [(3, 2), (4, 2), (5, 1)]:
        seqs = [e.diagram_sequence() for e in enumerate_regions(n, m)]
        assert seqs == sorted(seqs)


def test_enumeration_cap():
    with pytest.raises(ResourceCapExceeded):
        enumerate_regions(5, 3, cap=100)
    assert sum(1 for _ in enumerate_regions(5, 3, cap=None)) == 969


def test_wall_examples():
    theta, a11 = Root(1, 2), Root(1, 1)
    assert is_separating_wall(region(3, 2, [2, 1], [0]), theta)
    assert neighbor_wall_oracle(region(3, 2, [2, 1], [0]), theta)
    assert not neighbor_wall_oracle(region(3, 2, [2, 1], [1]), theta)
    assert not is_separating_wall(region(3, 2, [2, 1], [1]), theta)
    assert is_separating_wall(region(3, 2, [2, 2], [0]), a11)
    assert not is_separating_wall(region(3, 2, [1, 1], [0]), theta)
    hits = [e for e in enumerate_regions(3, 2) if is_separating_wall(e, a11)]
    assert [e.rows() for e in hits] == [[[2, 2], [0]], [[2, 2], [1]], [[2, 2], [2]]]


@pytest.mark.parametrize("n, m", [(n, m) for n in range(2, 6) for m in range(1, 4)])
def test_wall_criterion_matches_neighbor_oracle(n, m):
    for e in enumerate_regions(n, m):
        for root in all_roots(n):
            assert is_separating_wall(e, root) == neighbor_wall_oracle(e, root)


@pytest.mark.parametrize("n, m", [(n, m) for n in range(2, 7) for m in range(1, 4)])
def test_theta_wall_count(n, m):
    theta = Root.theta(n)
    assert sum(is_separating_wall(e, theta) for e in enumerate_regions(n, m)) == m ** (n - 2)


def test_statistics():
    e = region(3, 2, [2, 1], [0])
    assert (stat_r(e), stat_c(e)) == (3, 2)
    z = RegionTableau.zero(4, 2)
    assert (stat_r(z), stat_c(z)) == (0, 0)


@pytest.mark.parametrize("n, m", [(3, 2), (4, 2), (5, 2), (4, 3)])
def test_statistics_on_theta_walls_are_core_dimensions(n, m):
    theta = Root.theta(n)
    for lam in cores(n, 30):
        if first_hook(lam) != n * (m - 1) + 1:
            continue
        e = region_from_alcove(psi(lam, n), m)
        assert is_separating_wall(e, theta)
        assert stat_r(e) == len(lam)
        assert stat_c(e) == lam.first_part


def test_remove_first_column_examples():
    assert remove_first_column(region(3, 2, [2, 1], [2])) == RegionTableau.from_rows(2, 2, [[1]])
    smaller = {remove_first_column(region(4, 2, [2, 2, 1], [2, 2], [x])) for x in (2, 1, 0)}
    assert smaller == {region(3, 2, [2, 1], [2])}
    assert remove_first_column(RegionTableau.zero(4, 3)) == RegionTableau.zero(3, 3)
    with pytest.raises(ValueError):
        remove_first_column(RegionTableau.zero(2, 1))


@pytest.mark.parametrize("n, m", [(3, 1), (3, 2), (4, 2), (5, 2), (4, 3)])
def test_remove_first_column_preserves_walls(n, m):
    smaller = {e.entries for e in enumerate_regions(n - 1, m)}
    for e in enumerate_regions(n, m):
        r = remove_first_column(e)
        assert r.entries in smaller
        for root in all_roots(n - 1):
            assert is_separating_wall(e, root) == is_separating_wall(r, root)


def test_conjugate_example():
    e = conjugate_tableau(region(3, 2, [2, 2], [0]))
    assert (e[1, 1], e[2, 2], e[1, 2]) == (0, 2, 2)
    sym = region(3, 2, [2, 1], [1])
    assert conjugate_tableau(sym) == sym


@pytest.mark.parametrize("n, m", [(3, 2), (4, 2), (5, 2), (4, 3)])
def test_conjugation_symmetries(n, m):
    regions = set(enumerate_regions(n, m))
    for e in regions:
        c = conjugate_tableau(e)
        assert c in regions
        assert conjugate_tableau(c) == e
        assert (stat_r(c), stat_c(c)) == (stat_c(e), stat_r(e))
        for root in all_roots(n):
            assert is_separating_wall(e, root) == is_separating_wall(c, conjugate_root(root, n))


def test_conjugation_matches_core_conjugation():
    for lam in cores(4, 20):
        assert conjugate_tableau(region_from_alcove(psi(lam, 4), 30)) == region_from_alcove(
            psi(conjugate(lam), 4), 30
        )


@pytest.mark.parametrize("n, m", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_column_sums_bijection(n, m):
    images = {}
    for e in enumerate_regions(n, m):
        mu = column_sums(e)
        assert mu not in images
        images[mu] = e
        assert region_from_column_sums(mu, n, m) == e
    in_range = [
        mu
        for mu in itertools.product(*(range((n - i) * m + 1) for i in range(1, n)))
        if all(a >= b for a, b in zip(mu, mu[1:]))
    ]
    assert len(in_range) == len(images)


def test_column_sums_rejects_bad_input():
    assert column_sums(RegionTableau.zero(4, 2)) == Partition()
    assert region_from_column_sums((), 4, 2) == RegionTableau.zero(4, 2)
    with pytest.raises(ValueError):
        region_from_column_sums((1, 2), 3, 2)
    with pytest.raises(ValueError):
        region_from_column_sums((5, 0), 3, 2)


def test_json_round_trips():
    e = region(3, 2, [2, 1], [2])
    assert json.loads(json.dumps(e.to_json())) == {"n": 3, "m": 2, "e": [[2, 1], [2]]}
    assert RegionTableau.from_json(e.to_json()) == e
    assert AlcoveCoords.from_json(K_EXAMPLE.to_json()) == K_EXAMPLE
