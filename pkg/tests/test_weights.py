import itertools

import pytest
from hypothesis import given, strategies as st

from sympweight.weights import (
    dominant_rep,
    enumerate_dominant_weights,
    is_dominant,
    layer_index,
    orbit_size,
    partitions,
    weyl_orbit,
)

weight_strategy = st.integers(2, 5).flatmap(lambda r: st.lists(st.integers(-6, 6), min_size=r, max_size=r))


@pytest.mark.parametrize(
    "w, expected", [((0, -3, 2), (3, 2, 0)), ((1, 1), (1, 1)), ((-1, 0, 0), (1, 0, 0))]
)
def test_dominant_rep(w, expected):
    assert dominant_rep(w) == expected


@given(weight_strategy)
def test_dominant_rep_idempotent(w):
    d = dominant_rep(w)
    assert is_dominant(d)
    assert dominant_rep(d) == d
    assert d in weyl_orbit(w)


@pytest.mark.parametrize(
    "w, n, m, expected", [((3, 2), 3, 2, 0), ((1, 0), 1, 1, None), ((0, 0), 1, 1, 1), ((5, 0), 2, 2, None)]
)
def test_layer_index(w, n, m, expected):
    assert layer_index(w, n, m) == expected


@given(weight_strategy, st.integers(0, 8), st.integers(0, 8))
def test_layer_index_is_weyl_invariant(w, n, m):
    assert layer_index(dominant_rep(w), n, m) == layer_index(w, n, m)


@pytest.mark.parametrize("w, expected", [((0, 0), 1), ((1, 0), 4), ((2, 1), 8), ((1, 1), 4)])
def test_orbit_size_examples(w, expected):
    assert orbit_size(w) == expected


@given(weight_strategy)
def test_orbit_size_matches_enumeration(w):
    assert orbit_size(dominant_rep(w)) == len(weyl_orbit(w))


def test_enumerate_examples():
    assert enumerate_dominant_weights(1, 0, 2) == [((1, 0), 0)]
    assert enumerate_dominant_weights(1, 1, 2) == [((2, 0), 0), ((1, 1), 0), ((0, 0), 1)]
    assert enumerate_dominant_weights(2, 0, 2) == [((2, 0), 0), ((1, 1), 0), ((0, 0), 1)]


def test_partitions_are_sorted_descending():
    parts = list(partitions(6, 3))
    assert parts == sorted(parts, reverse=True)
    assert len(parts) == len(set(parts)) == 7


@pytest.mark.parametrize("r, n, m", [(2, 3, 2), (3, 2, 2), (3, 4, 1), (4, 3, 0)])
def test_orbits_cover_the_support(r, n, m):
    # every integer point with sum |x| in {n+m-2k} arises from exactly one record
    N = n + m
    support = {
        x for x in itertools.product(range(-N, N + 1), repeat=r)
        if sum(map(abs, x)) <= N and (N - sum(map(abs, x))) % 2 == 0
    }
    records = enumerate_dominant_weights(n, m, r)
    assert sum(orbit_size(w) for w, _ in records) == len(support)
    assert set().union(*(weyl_orbit(w) for w, _ in records)) == support
    assert all(layer_index(w, n, m) == k for w, k in records)
