"""Virtual modules over tensor products of symmetric powers.

A :class:`VirtualModule` is a finite integer combination of symbols
``<a, b>`` standing for ``Sym^a V (x) Sym^b V``. Multiplicities descend to
weight spaces, so a virtual module has a well defined (possibly negative)
multiplicity at every weight.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .multiplicity import mult_irrep, mult_tensor
from .weights import (
    Weight,
    as_weight,
    check_highest_weight,
    check_rank,
    enumerate_dominant_weights,
    orbit_size,
)

__all__ = [
    "VirtualModule",
    "virtual_irrep",
    "virtual_mult",
    "Violation",
    "VerificationReport",
    "check_prop2",
    "check_balance",
    "check_virtual_dimension",
]


class VirtualModule:
    """Sparse integer combination of symbols ``<a, b>`` at a fixed rank.

    Symbols with a negative index stand for the zero module and are dropped
    on construction, as are zero coefficients.
    """

    __slots__ = ("rank", "_terms")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = (), rank: int = 2):
        self.rank = check_rank(rank)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (a, b), coef in items:
            if a < 0 or b < 0:
                continue
            acc[(a, b)] = acc.get((a, b), 0) + coef
        self._terms = {sym: c for sym, c in sorted(acc.items()) if c}

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, VirtualModule):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, tuple(self._terms.items())))

    def _combine(self, other: "VirtualModule", sign: int) -> "VirtualModule":
        if self.rank != other.rank:
            raise ValueError("cannot combine virtual modules of different rank")
        terms = list(self._terms.items()) + [(s, sign * c) for s, c in other]
        return VirtualModule(terms, self.rank)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return VirtualModule({s: -c for s, c in self}, self.rank)

    def __rmul__(self, scalar: int):
        return VirtualModule({s: scalar * c for s, c in self}, self.rank)

    def __repr__(self):
        body = " ".join(f"{c:+d}<{a},{b}>" for (a, b), c in self._terms.items()) or "0"
        return f"VirtualModule({body}, rank={self.rank})"


def virtual_irrep(n: int, m: int, rank: int) -> VirtualModule:
    """Virtual decomposition of ``V(n, m, 0, ..., 0)`` into symmetric-power tensors."""
    n, m = check_highest_weight(n, m)
    if m == 0:
        terms = [((n, 0), 1)]
    elif m == 1:
        terms = [((n, 1), 1), ((n + 1, 0), -1), ((n - 1, 0), -1)]
    else:
        terms = [((n, m), 1), ((n, m - 2), 1), ((n - 1, m - 1), -1), ((n + 1, m - 1), -1)]
    return VirtualModule(terms, rank)


def virtual_mult(vm: VirtualModule, w: Sequence[int], counter: str = "dp") -> int:
    """Signed sum of tensor multiplicities of ``w`` over the symbols of ``vm``."""
    w = as_weight(w, vm.rank)
    return sum(c * mult_tensor(a, b, vm.rank, w, counter=counter) for (a, b), c in vm)


@dataclass(frozen=True)
class Violation:
    weight: Weight
    expected: int
    actual: int


@dataclass
class VerificationReport:
    """Per-weight outcome of an identity check."""

    name: str
    params: dict
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "checked": self.checked,
            "passed": self.passed,
            "violations": [
                {"weight": list(v.weight), "expected": str(v.expected), "actual": str(v.actual)}
                for v in sorted(self.violations, key=lambda v: v.weight, reverse=True)
            ],
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name} {args}: {status} over {self.checked} weights"


def check_prop2(n: int, m: int, rank: int, counter: str = "dp") -> VerificationReport:
    """Check ``T(n,m) = T(n-1,m-1) + sum_p V(n+m-p, p)`` on every dominant weight.

    ``T(a, b)`` is ``Sym^a V (x) Sym^b V``; requires ``n >= m >= 1``.
    """
    n, m = check_highest_weight(n, m)
    if m < 1:
        raise ValueError("check_prop2 needs m >= 1")
    report = VerificationReport("prop2", {"rank": rank, "n": n, "m": m})
    for w, _ in enumerate_dominant_weights(n, m, rank):
        actual = mult_tensor(n, m, rank, w, counter=counter)
        expected = mult_tensor(n - 1, m - 1, rank, w, counter=counter) + sum(
            mult_irrep(n + m - p, p, rank, w, counter=counter) for p in range(m + 1)
        )
        report.checked += 1
        if actual != expected:
            report.violations.append(Violation(w, expected, actual))
    return report


def check_balance(n: int, m: int, rank: int, counter: str = "dp") -> VerificationReport:
    """Check ``T(n,m) + T(n,m-2) = T(n+1,m-1) + V(n,m) + T(n-1,m-1)`` for ``n >= m >= 2``."""
    n, m = check_highest_weight(n, m)
    if m < 2:
        raise ValueError("check_balance needs m >= 2")
    report = VerificationReport("balance", {"rank": rank, "n": n, "m": m})
    for w, _ in enumerate_dominant_weights(n, m, rank):
        left = mult_tensor(n, m, rank, w, counter=counter) + mult_tensor(
            n, m - 2, rank, w, counter=counter
        )
        right = (
            mult_tensor(n + 1, m - 1, rank, w, counter=counter)
            + mult_irrep(n, m, rank, w, counter=counter)
            + mult_tensor(n - 1, m - 1, rank, w, counter=counter)
        )
        report.checked += 1
        if left != right:
            report.violations.append(Violation(w, right, left))
    return report


def check_virtual_dimension(n: int, m: int, rank: int, counter: str = "dp") -> VerificationReport:
    """Check the virtual multiplicities are non-negative and sum to the Weyl dimension."""
    from .oracles import weyl_dim

    vm = virtual_irrep(n, m, rank)
    report = VerificationReport("virtual-dimension", {"rank": rank, "n": n, "m": m})
    total = 0
    for w, _ in enumerate_dominant_weights(n, m, rank):
        value = virtual_mult(vm, w, counter=counter)
        report.checked += 1
        if value < 0:
            report.violations.append(Violation(w, 0, value))
        total += value * orbit_size(w)
    highest = (n, m) + (0,) * (rank - 2)
    expected = weyl_dim(highest, rank)
    if total != expected:
        report.violations.append(Violation(highest, expected, total))
    return report
