"""Exact binomials and bounded composition counting.

Two interchangeable counters are provided for the number of solutions of
``x_1 + ... + x_n = m`` with ``0 <= x_j <= c_j``:

* :func:`bounded_count_sieve` evaluates the alternating inclusion-exclusion
  sum over subsums of the caps. Its cost grows like ``2**n``.
* :func:`bounded_count_dp` convolves one box polynomial per cap, costing
  ``O(n * m)`` additions.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb
from typing import Sequence

__all__ = [
    "binom",
    "validate_caps",
    "enumerate_subsums",
    "signed_subsum_table",
    "sieve_sum",
    "clear_caches",
    "bounded_count_sieve",
    "bounded_count_dp",
    "bounded_count_table",
    "box_convolve",
    "COUNTERS",
    "bounded_count",
]

COUNTERS = ("dp", "sieve")


def binom(a: int, n: int) -> int:
    """Binomial coefficient that vanishes whenever ``a < n``.

    ``a`` may be any integer, including negative ones; ``n`` must be
    non-negative.
    """
    if n < 0:
        raise ValueError(f"binom: n must be non-negative, got {n}")
    if a < n:
        return 0
    return comb(a, n)


def validate_caps(caps: Sequence[int]) -> tuple[int, ...]:
    caps = tuple(int(c) for c in caps)
    if len(caps) == 0:
        raise ValueError("caps must contain at least one entry")
    if any(c < 0 for c in caps):
        raise ValueError(f"caps must be non-negative, got {caps}")
    return caps


def _all_subsets(caps: tuple[int, ...]) -> list[tuple[int, int]]:
    # (size, sum) for every subset of cap positions, built by doubling
    subsets = [(0, 0)]
    for c in caps:
        subsets += [(size + 1, total + c) for size, total in subsets]
    return subsets


def enumerate_subsums(caps: Sequence[int], i: int) -> Counter:
    """Multiset of the sums of all ``i``-element subsets of cap positions.

    Returned as a :class:`collections.Counter` mapping each sum to the number
    of position subsets producing it, so ``sum(result.values())`` equals
    ``binom(len(caps), i)``.
    """
    caps = validate_caps(caps)
    if i < 0 or i > len(caps):
        raise ValueError(f"subset length {i} outside 0..{len(caps)}")
    return Counter(total for size, total in _all_subsets(caps) if size == i)


def signed_subsum_table(caps: Sequence[int]) -> dict[int, int]:
    """Map ``s + i`` to the signed count ``sum (-1)**i`` over all subsets.

    This is the grouped form of the alternating subsum multisets: every
    subset of size ``i`` and sum ``s`` contributes ``(-1)**i`` at key
    ``s + i``. Keys with a zero total are dropped.
    """
    return dict(_signed_subsums(validate_caps(caps)))


@lru_cache(maxsize=4096)
def _signed_subsums(caps: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    table: Counter = Counter()
    for size, total in _all_subsets(caps):
        table[total + size] += -1 if size % 2 else 1
    return tuple((shift, v) for shift, v in sorted(table.items()) if v)


def clear_caches() -> None:
    """Drop memoized subsum tables (used to time cold runs)."""
    _signed_subsums.cache_clear()


def sieve_sum(caps: Sequence[int], m: int, depth: int | None = None) -> int:
    """Alternating subsum sum with binomials ``binom(m - (s+i) + depth, depth)``.

    With the default ``depth = len(caps) - 1`` this is the bounded composition
    count. Smaller depths give the finite differences of that count in ``m``;
    ``depth = len(caps) - 2`` is the irreducible-multiplicity summand.
    """
    caps = validate_caps(caps)
    if depth is None:
        depth = len(caps) - 1
    return sum(
        sign * binom(m - shift + depth, depth)
        for shift, sign in _signed_subsums(caps)
        if shift <= m
    )


def bounded_count_sieve(caps: Sequence[int], m: int) -> int:
    """Count bounded compositions of ``m`` by inclusion-exclusion.

    Returns 0 for ``m < 0`` and for ``m > sum(caps)``.
    """
    caps = validate_caps(caps)
    if m < 0 or m > sum(caps):
        return 0
    return sieve_sum(caps, m)


def box_convolve(counts: list[int], cap: int) -> list[int]:
    """Multiply a truncated count series by ``1 + z + ... + z**cap``."""
    out = []
    running = 0
    for s, value in enumerate(counts):
        running += value
        if s - cap - 1 >= 0:
            running -= counts[s - cap - 1]
        out.append(running)
    return out


def bounded_count_table(caps: Sequence[int], m: int) -> list[int]:
    """Bounded composition counts for every total ``0..m`` (``m >= 0``)."""
    caps = validate_caps(caps)
    counts = [1] + [0] * m
    for c in caps:
        counts = box_convolve(counts, min(c, m))
    return counts


def bounded_count_dp(caps: Sequence[int], m: int) -> int:
    """Count bounded compositions of ``m`` by a running box convolution."""
    caps = validate_caps(caps)
    if m < 0 or m > sum(caps):
        return 0
    return bounded_count_table(caps, m)[m]


def bounded_count(caps: Sequence[int], m: int, counter: str = "dp") -> int:
    """Dispatch to the counter named by ``counter`` (``"dp"`` or ``"sieve"``)."""
    if counter == "dp":
        return bounded_count_dp(caps, m)
    if counter == "sieve":
        return bounded_count_sieve(caps, m)
    raise ValueError(f"unknown counter {counter!r}; expected one of {COUNTERS}")
