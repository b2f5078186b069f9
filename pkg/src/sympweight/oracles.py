"""Independent ground truth for the closed-form multiplicities.

* :func:`brute_tensor_weights` enumerates the monomial basis of
  ``Sym^n V (x) Sym^m V`` and tallies weights.
* :func:`freudenthal_mult` runs Freudenthal's recursion on the C_r root data.
* :func:`weyl_dim` evaluates the Weyl dimension formula.

None of these call into :mod:`sympweight.multiplicity`.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combinatorics import binom
from .liealg import compositions, positive_roots
from .weights import Weight, as_weight, check_rank, dominant_rep, is_dominant

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "enumeration_budget",
    "WeightTable",
    "sym_weights",
    "brute_tensor_weights",
    "dominates",
    "freudenthal_mult",
    "freudenthal_table",
    "weyl_vector",
    "weyl_dim",
]

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Raised instead of running an enumeration larger than the budget."""


def enumeration_budget() -> int:
    """Budget from ``SYMPWEIGHT_BUDGET`` if set, else :data:`DEFAULT_BUDGET`."""
    raw = os.environ.get("SYMPWEIGHT_BUDGET")
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"SYMPWEIGHT_BUDGET must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("SYMPWEIGHT_BUDGET must be non-negative")
    return value


@dataclass
class WeightTable:
    """Weight -> multiplicity map with the parameters that produced it."""

    rank: int
    meta: dict
    table: dict[Weight, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.table.values())

    def __getitem__(self, w) -> int:
        return self.table.get(tuple(w), 0)

    def __len__(self):
        return len(self.table)

    def dominant(self) -> dict[Weight, int]:
        return {w: v for w, v in self.table.items() if is_dominant(w)}

    def to_dict(self) -> dict:
        return {
            "meta": {"rank": self.rank, **self.meta},
            "records": [
                {"weight": list(w), "multiplicity": str(v)}
                for w, v in sorted(self.table.items(), reverse=True)
            ],
        }


def sym_weights(n: int, rank: int) -> Counter:
    """Weights of the monomials of ``Sym^n V``, counted with repetition."""
    r = check_rank(rank)
    out: Counter = Counter()
    for a in compositions(n, 2 * r):
        out[tuple(a[i] - a[2 * r - 1 - i] for i in range(r))] += 1
    return out


def brute_tensor_weights(n: int, m: int, rank: int, budget: int | None = None) -> WeightTable:
    """Tally weights over every monomial pair of ``Sym^n V (x) Sym^m V``.

    Raises
    ------
    BudgetExceeded
        If the number of pairs exceeds ``budget`` (default
        :func:`enumeration_budget`).
    """
    r = check_rank(rank)
    if n < 0 or m < 0:
        raise ValueError("degrees must be non-negative")
    if budget is None:
        budget = enumeration_budget()
    pairs = binom(n + 2 * r - 1, 2 * r - 1) * binom(m + 2 * r - 1, 2 * r - 1)
    if pairs > budget:
        raise BudgetExceeded(
            f"brute enumeration of {pairs} monomial pairs exceeds budget {budget}"
        )
    left, right = sym_weights(n, r), sym_weights(m, r)
    table: Counter = Counter()
    # every (left monomial, right monomial) pair is counted once
    for wa, ca in left.items():
        for wb, cb in right.items():
            table[tuple(x + y for x, y in zip(wa, wb))] += ca * cb
    return WeightTable(r, {"n": n, "m": m, "pairs": pairs}, dict(table))


def weyl_vector(rank: int) -> Weight:
    """Half the sum of the positive roots: ``(r, r-1, ..., 1)``."""
    return tuple(range(check_rank(rank), 0, -1))


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def dominates(hw: Sequence[int], w: Sequence[int]) -> bool:
    """Whether ``hw - w`` is a non-negative integer combination of simple roots.

    Simple roots are ``eps_i - eps_{i+1}`` and ``2 eps_r``, so the condition
    is non-negative partial sums of the difference plus an even total.
    """
    running = 0
    for x, y in zip(hw, w):
        running += x - y
        if running < 0:
            return False
    return running % 2 == 0


@lru_cache(maxsize=None)
def freudenthal_table(hw: Weight) -> dict[Weight, int]:
    """Multiplicities of every dominant weight of the irreducible module ``V(hw)``."""
    r = check_rank(len(hw))
    if not is_dominant(hw):
        raise ValueError(f"highest weight {hw} is not dominant")
    roots = positive_roots(r)
    shift = weyl_vector(r)
    top = [x + s for x, s in zip(hw, shift)]
    norm_top = _dot(top, top)
    memo: dict[Weight, int] = {hw: 1}

    def mult(mu: Weight) -> int:
        if mu in memo:
            return memo[mu]
        if not dominates(hw, mu):
            return 0
        acc = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(x + k * a for x, a in zip(mu, alpha))
                rep = dominant_rep(nu)
                if not dominates(hw, rep):
                    break
                acc += mult(rep) * _dot(nu, alpha)
                k += 1
        shifted = [x + s for x, s in zip(mu, shift)]
        denom = norm_top - _dot(shifted, shifted)
        if denom <= 0 or (2 * acc) % denom:
            raise ArithmeticError(f"Freudenthal recursion failed at {mu} for {hw}")
        memo[mu] = 2 * acc // denom
        return memo[mu]

    # visit dominant weights from the top down so recursion depth stays small
    from .weights import partitions

    degree = sum(hw)
    for k in range(degree // 2 + 1):
        for mu in partitions(degree - 2 * k, r):
            if dominates(hw, mu):
                mult(mu)
    return {w: v for w, v in memo.items() if v}


def freudenthal_mult(hw: Sequence[int], w: Sequence[int], rank: int | None = None) -> int:
    """Multiplicity of ``w`` in the irreducible module of highest weight ``hw``."""
    hw = as_weight(hw, rank)
    w = as_weight(w, len(hw))
    return freudenthal_table(hw).get(dominant_rep(w), 0)


def weyl_dim(hw: Sequence[int], rank: int | None = None) -> int:
    """Weyl dimension formula ``prod <hw + rho, alpha> / <rho, alpha>``."""
    hw = as_weight(hw, rank)
    r = check_rank(len(hw))
    if not is_dominant(hw):
        raise ValueError(f"highest weight {hw} is not dominant")
    shift = weyl_vector(r)
    top = [x + s for x, s in zip(hw, shift)]
    value = Fraction(1)
    for alpha in positive_roots(r):
        value *= Fraction(_dot(top, alpha), _dot(shift, alpha))
    if value.denominator != 1:
        raise ArithmeticError(f"Weyl dimension of {hw} is not integral: {value}")
    return value.numerator
