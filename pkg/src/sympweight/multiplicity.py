"""Closed-form weight multiplicities for sp(2r, C).

Three representations are covered, all built on the standard 2r-dimensional
module ``V``:

* ``Sym^n V`` (:func:`mult_sym`),
* ``Sym^n V (x) Sym^m V`` (:func:`mult_tensor`),
* the irreducible ``V(n, m, 0, ..., 0)`` with ``n >= m`` (:func:`mult_irrep`).

A weight ``x`` of ``Sym^n V (x) Sym^m V`` sits in layer ``k`` where
``sum |x_j| = n + m - 2k``. Its monomials ``a x b`` are grouped by the
combined exponent vector ``c = a + b``. Each such ``c`` is fixed by a
composition ``(c_{r+1}, ..., c_{2r})`` of ``k`` through
``c_j = |x_j| + c_{2r+1-j}``, and contributes the number of ways to split it
as ``b <= c`` with ``sum b = m``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Iterator, Sequence

from .combinatorics import (
    COUNTERS,
    binom,
    box_convolve,
    bounded_count_sieve,
    sieve_sum,
)
from .weights import (
    Weight,
    as_weight,
    check_highest_weight,
    check_rank,
    enumerate_dominant_weights,
    layer_index,
    orbit_size,
)

__all__ = [
    "REPRESENTATIONS",
    "layer_compositions",
    "layer_caps",
    "mult_sym",
    "mult_tensor",
    "mult_irrep",
    "mult_irrep_via_virtual",
    "multiplicity",
    "dim_irrep",
    "dim_by_summation",
    "DiagramRecord",
    "weight_diagram",
]

REPRESENTATIONS = ("irrep", "tensor", "sym")


def _check_counter(counter: str) -> None:
    if counter not in COUNTERS:
        raise ValueError(f"unknown counter {counter!r}; expected one of {COUNTERS}")


def layer_compositions(k: int, rank: int) -> Iterator[tuple[int, ...]]:
    """Compositions ``(c_{r+1}, ..., c_{2r})`` of ``k`` in colexicographic order.

    The last coordinate varies slowest.
    """
    if k < 0:
        return
    if rank == 1:
        yield (k,)
        return
    for last in range(k + 1):
        for head in layer_compositions(k - last, rank - 1):
            yield head + (last,)


def layer_caps(w: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors ``(c_1, ..., c_{2r})`` of total weight ``w`` in layer ``k``."""
    x = [abs(v) for v in w]
    r = len(x)
    for upper in layer_compositions(k, r):
        # upper[r - j] is c_{2r+1-j} for 1-based j
        lower = tuple(x[j] + upper[r - 1 - j] for j in range(r))
        yield lower + upper


def _layer_count_table(x: Sequence[int], k: int, top: int) -> list[int]:
    """Sum over layer-``k`` exponent vectors of the bounded-count series to ``top``.

    Equivalent to summing ``bounded_count_table(caps, top)`` over
    :func:`layer_caps`, but shares the convolution of common prefixes along a
    depth-first walk in the same colexicographic order.
    """
    r = len(x)
    total = [0] * (top + 1)
    if k < 0 or top < 0:
        return total

    def walk(j: int, remaining: int, counts: list[int]) -> None:
        # pair j couples c_{j+1} = x_j + t with c_{2r-j} = t
        if j == r - 1:
            t = remaining
            counts = box_convolve(box_convolve(counts, min(x[j] + t, top)), min(t, top))
            for s, v in enumerate(counts):
                total[s] += v
            return
        for t in range(remaining + 1):
            walk(
                j + 1,
                remaining - t,
                box_convolve(box_convolve(counts, min(x[j] + t, top)), min(t, top)),
            )

    walk(0, k, [1] + [0] * top)
    return total


def _prepare(rank: int, w: Sequence[int]) -> Weight:
    return as_weight(w, check_rank(rank))


def mult_sym(n: int, rank: int, w: Sequence[int]) -> int:
    """Multiplicity of ``w`` in ``Sym^n V``: ``binom(k + r - 1, r - 1)`` on layer ``k``."""
    w = _prepare(rank, w)
    if n < 0:
        return 0
    k = layer_index(w, n, 0)
    if k is None:
        return 0
    return binom(k + rank - 1, rank - 1)


def mult_tensor(n: int, m: int, rank: int, w: Sequence[int], counter: str = "dp") -> int:
    """Multiplicity of ``w`` in ``Sym^n V (x) Sym^m V``.

    Negative degrees denote the zero module and give 0.
    """
    w = _prepare(rank, w)
    _check_counter(counter)
    if n < 0 or m < 0:
        return 0
    k = layer_index(w, n, m)
    if k is None:
        return 0
    if counter == "sieve":
        return sum(bounded_count_sieve(caps, m) for caps in layer_caps(w, k))
    return _layer_count_table([abs(v) for v in w], k, m)[m]


def _irrep_layer_term(x: list[int], k: int, top: int, rank: int, counter: str) -> int:
    # sum over layer-k caps of the alternating sum with binomial depth 2r - 2
    if k < 0 or top < 0:
        return 0
    if counter == "sieve":
        return sum(sieve_sum(caps, top, 2 * rank - 2) for caps in layer_caps(x, k))
    table = _layer_count_table(x, k, top)
    return table[top] - (table[top - 1] if top >= 1 else 0)


def mult_irrep(n: int, m: int, rank: int, w: Sequence[int], counter: str = "dp") -> int:
    """Multiplicity of ``w`` in the irreducible module ``V(n, m, 0, ..., 0)``.

    The value is a difference of two layer sums whose summands are
    alternating subsum binomials of depth ``2r - 2``; the second sum runs over
    layer ``k - 1`` at argument ``m - 1`` and is empty when ``k = 0``.

    Raises
    ------
    ValueError
        If ``n < m`` (the highest weight would not be dominant).
    """
    n, m = check_highest_weight(n, m)
    w = _prepare(rank, w)
    _check_counter(counter)
    k = layer_index(w, n, m)
    if k is None:
        return 0
    x = [abs(v) for v in w]
    return _irrep_layer_term(x, k, m, rank, counter) - _irrep_layer_term(
        x, k - 1, m - 1, rank, counter
    )


def mult_irrep_via_virtual(
    n: int, m: int, rank: int, w: Sequence[int], counter: str = "dp"
) -> int:
    """Multiplicity of ``w`` in ``V(n, m, 0, ...)`` from its virtual decomposition.

    Evaluates :func:`mult_tensor` on each symbol of
    :func:`sympweight.decomposition.virtual_irrep` and sums with signs.
    """
    from .decomposition import virtual_irrep, virtual_mult

    return virtual_mult(virtual_irrep(n, m, rank), w, counter=counter)


def multiplicity(
    rep: str, n: int, m: int, rank: int, w: Sequence[int], counter: str = "dp"
) -> int:
    """Dispatch on ``rep`` in ``("irrep", "tensor", "sym")``.

    For ``"sym"`` the degree is ``n`` and ``m`` must be 0.
    """
    if rep == "irrep":
        return mult_irrep(n, m, rank, w, counter=counter)
    if rep == "tensor":
        return mult_tensor(n, m, rank, w, counter=counter)
    if rep == "sym":
        if m != 0:
            raise ValueError("rep 'sym' takes a single degree n; m must be 0")
        return mult_sym(n, rank, w)
    raise ValueError(f"unknown representation {rep!r}; expected one of {REPRESENTATIONS}")


@dataclass(frozen=True)
class DiagramRecord:
    weight: Weight
    k: int
    multiplicity: int
    orbit_size: int


def _record(item, rep, n, m, rank, counter):
    w, k = item
    return DiagramRecord(w, k, multiplicity(rep, n, m, rank, w, counter), orbit_size(w))


def weight_diagram(
    n: int,
    m: int,
    rank: int,
    rep: str = "irrep",
    counter: str = "dp",
    workers: int = 1,
) -> list[DiagramRecord]:
    """Dominant weights with nonzero multiplicity, lexicographically descending.

    ``workers > 1`` evaluates weights in a process pool; the output does not
    depend on the worker count.
    """
    if rep == "irrep":
        check_highest_weight(n, m)
    items = enumerate_dominant_weights(n, m, rank)
    job = partial(_record, rep=rep, n=n, m=m, rank=rank, counter=counter)
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(job, items, chunksize=max(1, len(items) // (4 * workers))))
    else:
        records = [job(item) for item in items]
    records = [rec for rec in records if rec.multiplicity]
    records.sort(key=lambda rec: rec.weight, reverse=True)
    return records


def dim_by_summation(
    n: int, m: int, rank: int, rep: str = "irrep", counter: str = "dp"
) -> int:
    """Total dimension as ``sum(multiplicity * orbit_size)`` over dominant weights."""
    return sum(
        rec.multiplicity * rec.orbit_size
        for rec in weight_diagram(n, m, rank, rep=rep, counter=counter)
    )


def dim_irrep(n: int, m: int, rank: int, counter: str = "dp") -> int:
    """Dimension of ``V(n, m, 0, ..., 0)`` by summing multiplicities over orbits."""
    check_highest_weight(n, m)
    return dim_by_summation(n, m, rank, rep="irrep", counter=counter)
