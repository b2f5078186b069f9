"""Weight lattice of type C_r.

Weights are plain tuples of integers. The Weyl group acts by signed
permutations, so every orbit has a unique representative with
``x_1 >= ... >= x_r >= 0``.
"""
from __future__ import annotations

from collections import Counter
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence

Weight = tuple[int, ...]

__all__ = [
    "Weight",
    "as_weight",
    "check_rank",
    "is_dominant",
    "dominant_rep",
    "layer_index",
    "orbit_size",
    "weyl_orbit",
    "partitions",
    "enumerate_dominant_weights",
    "check_highest_weight",
    "highest_weight_tuple",
]


def check_rank(rank: int) -> int:
    if int(rank) != rank or rank < 2:
        raise ValueError(f"rank must be an integer >= 2, got {rank}")
    return int(rank)


def as_weight(w: Sequence[int], rank: int | None = None) -> Weight:
    w = tuple(int(x) for x in w)
    if rank is not None and len(w) != rank:
        raise ValueError(f"weight {w} has {len(w)} entries, expected rank {rank}")
    return w


def is_dominant(w: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(w, w[1:])) and (len(w) == 0 or w[-1] >= 0)


def dominant_rep(w: Sequence[int]) -> Weight:
    """Dominant representative: absolute values sorted non-increasingly."""
    return tuple(sorted((abs(int(x)) for x in w), reverse=True))


def layer_index(w: Sequence[int], n: int, m: int = 0) -> int | None:
    """Layer ``k`` with ``sum |x_j| = n + m - 2k``, or ``None`` off the support."""
    if n < 0 or m < 0:
        raise ValueError("degrees must be non-negative")
    gap = n + m - sum(abs(x) for x in w)
    if gap < 0 or gap % 2:
        return None
    return gap // 2


def orbit_size(w: Sequence[int]) -> int:
    """Number of distinct signed permutations of a weight."""
    w = dominant_rep(w)
    size = factorial(len(w))
    for repeat in Counter(w).values():
        size //= factorial(repeat)
    return size * 2 ** sum(1 for x in w if x)


def weyl_orbit(w: Sequence[int]) -> set[Weight]:
    """All signed permutations of ``w`` (brute force; small ranks only)."""
    orbit = set()
    for perm in set(permutations(w)):
        for signs in product((1, -1), repeat=len(w)):
            orbit.add(tuple(s * x for s, x in zip(signs, perm)))
    return orbit


def partitions(total: int, parts: int, largest: int | None = None) -> Iterator[Weight]:
    """Non-increasing tuples of ``parts`` non-negative integers summing to ``total``.

    Yielded in lexicographically descending order.
    """
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    # the remaining parts cannot exceed the first one
    for first in range(min(total, largest), -1, -1):
        if first * parts < total:
            break
        for rest in partitions(total - first, parts - 1, first):
            yield (first,) + rest


def enumerate_dominant_weights(n: int, m: int, rank: int) -> list[tuple[Weight, int]]:
    """Dominant weights of the degree-``n + m`` diagram paired with their layer.

    Sorted lexicographically descending by weight.
    """
    rank = check_rank(rank)
    if n < 0 or m < 0:
        raise ValueError("degrees must be non-negative")
    out = []
    for k in range((n + m) // 2 + 1):
        out.extend((w, k) for w in partitions(n + m - 2 * k, rank))
    out.sort(reverse=True)
    return out


def check_highest_weight(n: int, m: int) -> tuple[int, int]:
    """Validate the pair ``(n, m)`` of a bivariate highest weight."""
    n, m = int(n), int(m)
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if n < m:
        raise ValueError(f"highest weight ({n}, {m}, 0, ...) is not dominant: need n >= m")
    return n, m


def highest_weight_tuple(n: int, m: int, rank: int) -> Weight:
    return (n, m) + (0,) * (check_rank(rank) - 2)
