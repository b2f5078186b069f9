"""Symbolic action of sp(2r, C) on ``Sym^n V (x) Sym^m V*``.

Basis vectors are exponent pairs ``a x b``: ``a_i`` counts the factor
``e_i`` of ``Sym^n V`` and ``b_i`` counts the dual factor ``f_i`` of
``Sym^m V*``. All coefficients are Python integers.

The symplectic form uses ``J = [[0, J_r], [-J_r, 0]]`` with ``J_r`` the
anti-diagonal identity, so the positive root vectors are

* ``E_ij - E_{2r+1-j, 2r+1-i}`` (root ``eps_i - eps_j``),
* ``E_{i, 2r+1-j} + E_{j, 2r+1-i}`` (root ``eps_i + eps_j``),
* ``E_{i, 2r+1-i}`` (root ``2 eps_i``),

with ``1 <= i < j <= r`` (a single ``i`` for the long roots). Indices are
1-based throughout to match the matrix-unit notation.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from math import gcd
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .combinatorics import binom
from .weights import Weight, check_highest_weight, check_rank

__all__ = [
    "ExponentPair",
    "FormalVector",
    "RootVectorSpec",
    "ROOT_KINDS",
    "root_vectors",
    "positive_roots",
    "compositions",
    "monomial_basis",
    "weight_of",
    "apply_root_vector",
    "act",
    "rho",
    "rho_star",
    "highest_weight_vector",
    "is_highest_weight",
    "dual_to_standard",
    "matrix_of",
    "exact_rank",
    "weight_space_basis",
    "highest_weight_space_dim",
    "rho_ranks",
]


class ExponentPair(NamedTuple):
    """Monomial ``e^a (x) f^b`` given by two exponent tuples of length ``2r``."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.a) // 2

    @property
    def degrees(self) -> tuple[int, int]:
        return sum(self.a), sum(self.b)

    def __str__(self):
        return f"{self.a} x {self.b}"


def _pair(a: Sequence[int], b: Sequence[int]) -> ExponentPair:
    a, b = tuple(int(v) for v in a), tuple(int(v) for v in b)
    if len(a) != len(b) or len(a) % 2 or len(a) < 4:
        raise ValueError(f"exponent tuples must both have even length 2r >= 4: {a}, {b}")
    if min(a + b) < 0:
        raise ValueError(f"exponents must be non-negative: {a} x {b}")
    return ExponentPair(a, b)


class FormalVector:
    """Immutable sparse integer combination of exponent pairs.

    Parameters
    ----------
    terms : mapping or iterable of (ExponentPair, int)
        Repeated keys are summed; zero coefficients are discarded.
    n, m : int
        Degrees of the ambient ``Sym^n V (x) Sym^m W``.
    rank : int
    dual : bool
        ``True`` when the second factor is ``V*`` (the default), ``False``
        when it is ``V`` itself.
    """

    __slots__ = ("n", "m", "rank", "dual", "_terms")

    def __init__(self, terms=(), *, n: int, m: int, rank: int, dual: bool = True):
        self.n, self.m, self.rank, self.dual = n, m, check_rank(rank), dual
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ExponentPair, int] = {}
        for pair, coef in items:
            pair = ExponentPair(*pair)
            if len(pair.a) != 2 * rank or pair.degrees != (n, m):
                raise ValueError(f"{pair} does not lie in degrees ({n}, {m}) at rank {rank}")
            acc[pair] = acc.get(pair, 0) + coef
        self._terms = {p: c for p, c in sorted(acc.items()) if c}

    @classmethod
    def monomial(cls, a, b, coef: int = 1, dual: bool = True) -> "FormalVector":
        pair = _pair(a, b)
        n, m = pair.degrees
        return cls({pair: coef}, n=n, m=m, rank=pair.rank, dual=dual)

    def _like(self, terms) -> "FormalVector":
        return FormalVector(terms, n=self.n, m=self.m, rank=self.rank, dual=self.dual)

    @property
    def space(self) -> tuple[int, int, int, bool]:
        return self.n, self.m, self.rank, self.dual

    @property
    def terms(self) -> dict[ExponentPair, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[ExponentPair, int]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, pair) -> int:
        return self._terms.get(ExponentPair(*pair), 0)

    def __eq__(self, other):
        if not isinstance(other, FormalVector):
            return NotImplemented
        return self.space == other.space and self._terms == other._terms

    def __hash__(self):
        return hash((self.space, tuple(self._terms.items())))

    def _check_same(self, other: "FormalVector"):
        if self.space != other.space:
            raise ValueError(f"incompatible spaces {self.space} and {other.space}")

    def __add__(self, other: "FormalVector") -> "FormalVector":
        self._check_same(other)
        return self._like(chain(self._terms.items(), other._terms.items()))

    def __sub__(self, other: "FormalVector") -> "FormalVector":
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar: int) -> "FormalVector":
        return self._like((p, scalar * c) for p, c in self._terms.items())

    def dump(self) -> str:
        """One ``coefficient a-tuple x b-tuple`` line per term, canonical order."""
        return "\n".join(
            f"{c} {' '.join(map(str, p.a))} x {' '.join(map(str, p.b))}"
            for p, c in self._terms.items()
        )

    def __repr__(self):
        kind = "V*" if self.dual else "V"
        return f"FormalVector(<{len(self)} terms> in Sym^{self.n}V (x) Sym^{self.m}{kind}, r={self.rank})"


ROOT_KINDS = ("difference", "sum", "long")


@dataclass(frozen=True)
class RootVectorSpec:
    """A positive root vector of sp(2r, C).

    ``kind`` is ``"difference"`` for ``E_ij - E_{2r+1-j,2r+1-i}``, ``"sum"``
    for ``E_{i,2r+1-j} + E_{j,2r+1-i}`` and ``"long"`` for ``E_{i,2r+1-i}``.
    """

    kind: str
    rank: int
    i: int
    j: int | None = None

    def __post_init__(self):
        r = check_rank(self.rank)
        if self.kind not in ROOT_KINDS:
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.kind == "long":
            if self.j is not None or not 1 <= self.i <= r:
                raise ValueError(f"long root needs 1 <= i <= {r} and no j")
        elif self.j is None or not 1 <= self.i < self.j <= r:
            raise ValueError(f"{self.kind} root needs 1 <= i < j <= {r}")

    def matrix_entries(self) -> list[tuple[int, int, int]]:
        """``(row, col, coefficient)`` triples of the matrix-unit expansion."""
        t = 2 * self.rank + 1
        i, j = self.i, self.j
        if self.kind == "difference":
            return [(i, j, 1), (t - j, t - i, -1)]
        if self.kind == "sum":
            return [(i, t - j, 1), (j, t - i, 1)]
        return [(i, t - i, 1)]

    @property
    def root(self) -> Weight:
        out = [0] * self.rank
        out[self.i - 1] += 2 if self.kind == "long" else 1
        if self.kind != "long":
            out[self.j - 1] += -1 if self.kind == "difference" else 1
        return tuple(out)

    def __str__(self):
        return " + ".join(
            f"{'-' if c < 0 else ''}E[{row},{col}]" for row, col, c in self.matrix_entries()
        ).replace("+ -", "- ")


def root_vectors(rank: int) -> list[RootVectorSpec]:
    """All ``r**2`` positive root vectors."""
    r = check_rank(rank)
    out = []
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            out.append(RootVectorSpec("difference", r, i, j))
            out.append(RootVectorSpec("sum", r, i, j))
    out.extend(RootVectorSpec("long", r, i) for i in range(1, r + 1))
    return out


def positive_roots(rank: int) -> list[Weight]:
    return [x.root for x in root_vectors(rank)]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` non-negative integers summing to ``total``, lex descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def monomial_basis(n: int, m: int, rank: int) -> list[ExponentPair]:
    """Sorted monomial basis of ``Sym^n V (x) Sym^m W`` with ``dim V = dim W = 2r``."""
    d = 2 * check_rank(rank)
    if n < 0 or m < 0:
        return []
    return sorted(ExponentPair(a, b) for a in compositions(n, d) for b in compositions(m, d))


def weight_of(p: ExponentPair, dual: bool = True) -> Weight:
    """Weight of a monomial; dual factors carry the negated weight of ``e_i``."""
    a, b = p
    r = len(a) // 2
    sign = -1 if dual else 1
    return tuple(
        (a[i] - a[2 * r - 1 - i]) + sign * (b[i] - b[2 * r - 1 - i]) for i in range(r)
    )


def _shift(exps: tuple[int, ...], down: int, up: int) -> tuple[int, ...]:
    out = list(exps)
    out[down - 1] -= 1
    out[up - 1] += 1
    return tuple(out)


def _bump(exps: tuple[int, ...], i: int, delta: int) -> tuple[int, ...]:
    # 0-based index
    return exps[:i] + (exps[i] + delta,) + exps[i + 1:]


def _act_on_pair(x: RootVectorSpec, p: ExponentPair, dual: bool) -> list[tuple[ExponentPair, int]]:
    a, b = p
    out = []
    for row, col, c in x.matrix_entries():
        # e_col -> e_row on V; on V*, f_row -> -f_col
        if a[col - 1]:
            out.append((ExponentPair(_shift(a, col, row), b), c * a[col - 1]))
        if dual:
            if b[row - 1]:
                out.append((ExponentPair(a, _shift(b, row, col)), -c * b[row - 1]))
        elif b[col - 1]:
            out.append((ExponentPair(a, _shift(b, col, row)), c * b[col - 1]))
    return out


def apply_root_vector(x: RootVectorSpec, p: ExponentPair, dual: bool = True) -> FormalVector:
    """Action of a positive root vector on one monomial.

    Terms whose shift would need a zero exponent to drop are absent, since
    their coefficient is that exponent.
    """
    p = _pair(*p)
    if p.rank != x.rank:
        raise ValueError("rank mismatch between root vector and monomial")
    n, m = p.degrees
    return FormalVector(_act_on_pair(x, p, dual), n=n, m=m, rank=x.rank, dual=dual)


def act(x: RootVectorSpec, v: FormalVector) -> FormalVector:
    """Linear extension of :func:`apply_root_vector`."""
    if v.rank != x.rank:
        raise ValueError("rank mismatch between root vector and vector")
    terms = (
        (q, coef * c) for p, coef in v for q, c in _act_on_pair(x, p, v.dual)
    )
    return v._like(terms)


def _require_dual(v: FormalVector):
    if not v.dual:
        raise ValueError("rho and rho_star act on Sym^n V (x) Sym^m V*")


def rho(v: FormalVector) -> FormalVector:
    """Multiplication by the invariant element ``sum_i e_i (x) f_i``."""
    _require_dual(v)
    d = 2 * v.rank
    terms = [
        ((_bump(a, i, 1), _bump(b, i, 1)), coef) for (a, b), coef in v for i in range(d)
    ]
    return FormalVector(terms, n=v.n + 1, m=v.m + 1, rank=v.rank)


def rho_star(v: FormalVector) -> FormalVector:
    """Contraction ``a x b -> sum_i a_i b_i (a - e_i) x (b - f_i)``."""
    _require_dual(v)
    if v.n < 1 or v.m < 1:
        raise ValueError("rho_star needs degrees n, m >= 1")
    terms = [
        ((_bump(a, i, -1), _bump(b, i, -1)), coef * a[i] * b[i])
        for (a, b), coef in v
        for i in range(len(a))
        if a[i] and b[i]
    ]
    return FormalVector(terms, n=v.n - 1, m=v.m - 1, rank=v.rank)


def highest_weight_vector(n: int, m: int, p: int, rank: int) -> FormalVector:
    """The vector ``v_p`` of weight ``(n+m-p, p, 0, ..., 0)`` in ``ker rho_star``.

    ``v_p = sum_i binom(p, i) (-1)**i (n-p+i, p-i, 0, ...) x (0, ..., i, m-i)``.
    """
    n, m = check_highest_weight(n, m)
    r = check_rank(rank)
    if m < 1:
        raise ValueError("highest_weight_vector needs m >= 1")
    if not 0 <= p <= m:
        raise ValueError(f"p must lie in 0..{m}, got {p}")
    zeros = (0,) * (2 * r - 2)
    terms = [
        (ExponentPair((n - p + i, p - i) + zeros, zeros + (i, m - i)), binom(p, i) * (-1) ** i)
        for i in range(p + 1)
    ]
    return FormalVector(terms, n=n, m=m, rank=r)


def is_highest_weight(v: FormalVector) -> bool:
    """Whether every positive root vector annihilates ``v``."""
    if not v:
        raise ValueError("the zero vector has no weight")
    return all(not act(x, v) for x in root_vectors(v.rank))


def dual_to_standard(p: ExponentPair) -> FormalVector:
    """Rewrite the dual factor through ``V* -> V``.

    ``f_i -> e_{2r+1-i}`` for ``i > r`` and ``f_i -> -e_{2r+1-i}`` for
    ``i <= r``; the result lies in ``Sym^n V (x) Sym^m V``.
    """
    p = _pair(*p)
    a, b = p
    r = p.rank
    sign = (-1) ** sum(b[:r])
    n, m = p.degrees
    return FormalVector({ExponentPair(a, b[::-1]): sign}, n=n, m=m, rank=r, dual=False)


def matrix_of(
    f: Callable[[ExponentPair], FormalVector],
    source: Sequence[ExponentPair],
    target: Sequence[ExponentPair],
) -> list[list[int]]:
    """Integer matrix (rows indexed by ``target``) of a map given on basis vectors."""
    index = {p: i for i, p in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    for col, p in enumerate(source):
        for q, c in f(p):
            rows[index[q]][col] += c
    return rows


def exact_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        top = mat[rank]
        for i in range(rank + 1, len(mat)):
            row = mat[i]
            if not row[col]:
                continue
            lead, factor = top[col], row[col]
            new = [lead * u - factor * t for u, t in zip(row, top)]
            g = 0
            for v in new:
                g = gcd(g, v)
            mat[i] = [v // g for v in new] if g > 1 else new
        rank += 1
        if rank == len(mat):
            break
    return rank


def weight_space_basis(n: int, m: int, rank: int, weight: Sequence[int], dual: bool = True):
    w = tuple(weight)
    return [p for p in monomial_basis(n, m, rank) if weight_of(p, dual) == w]


def highest_weight_space_dim(n: int, m: int, rank: int, weight: Sequence[int]) -> int:
    """Dimension of the highest-weight vectors of ``weight`` inside ``ker rho_star``.

    Computed as the nullity of all positive root vectors stacked with
    ``rho_star`` on the monomial weight space of ``Sym^n V (x) Sym^m V*``.
    """
    source = weight_space_basis(n, m, rank, weight)
    if not source:
        return 0
    rows: list[list[int]] = []
    maps = [
        (lambda p, x=x: apply_root_vector(x, p)) for x in root_vectors(rank)
    ]
    for f in maps:
        images = {q for p in source for q, _ in f(p)}
        rows += matrix_of(f, source, sorted(images))
    if n >= 1 and m >= 1:
        g = lambda p: rho_star(FormalVector.monomial(*p))
        images = {q for p in source for q, _ in g(p)}
        rows += matrix_of(g, source, sorted(images))
    return len(source) - exact_rank(rows)


def rho_ranks(n: int, m: int, rank: int) -> dict[str, int]:
    """Exact ranks of ``rho`` into and ``rho_star`` out of degrees ``(n, m)``.

    ``rho`` is injective when ``rho_rank == small_dim`` and ``rho_star`` is
    surjective when ``rho_star_rank == small_dim``.
    """
    if n < 1 or m < 1:
        raise ValueError("rho_ranks needs n, m >= 1")
    small = monomial_basis(n - 1, m - 1, rank)
    big = monomial_basis(n, m, rank)
    up = matrix_of(lambda p: rho(FormalVector.monomial(*p)), small, big)
    down = matrix_of(lambda p: rho_star(FormalVector.monomial(*p)), big, small)
    return {
        "small_dim": len(small),
        "big_dim": len(big),
        "rho_rank": exact_rank(up),
        "rho_star_rank": exact_rank(down),
    }
