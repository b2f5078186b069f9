"""Exit criteria. Each test records a PASS/FAIL line shown in the terminal summary.

Run directly with ``python tests/test_acceptance.py`` for the same lines
without pytest.
"""
import random
import re
import time

import pytest

from sympweight.cli import run
from sympweight.combinatorics import binom, bounded_count_dp, bounded_count_sieve
from sympweight.decomposition import check_balance, check_prop2
from sympweight.liealg import highest_weight_vector, is_highest_weight, rho_ranks, rho_star
from sympweight.multiplicity import (
    dim_irrep,
    mult_irrep,
    mult_irrep_via_virtual,
    mult_sym,
    mult_tensor,
)
from sympweight.oracles import brute_tensor_weights, freudenthal_mult, weyl_dim
from sympweight.weights import enumerate_dominant_weights

RESULTS: list[str] = []


def record(number: int, title: str, failures: list, detail: str = "") -> None:
    status = "PASS" if not failures else f"FAIL ({len(failures)} violations, first: {failures[0]})"
    RESULTS.append(f"criterion {number:>2} {title}: {status}{' - ' + detail if detail else ''}")
    assert not failures, failures[:5]


def pairs(max_total, min_m=0):
    for total in range(max_total + 1):
        for m in range(min_m, total // 2 + 1):
            yield total - m, m


def test_c01_tensor_oracle():
    start = time.perf_counter()
    failures, checked = [], 0
    for r in (2, 3):
        for n, m in pairs(8):
            table = brute_tensor_weights(n, m, r)
            for w, count in table.table.items():
                checked += 1
                if mult_tensor(n, m, r, w) != count:
                    failures.append((r, n, m, w))
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    record(1, "tensor multiplicities = brute enumeration", failures, f"{checked} weights, {elapsed:.1f}s")


def test_c02_irrep_oracle():
    start = time.perf_counter()
    failures, checked = [], 0
    for r in (2, 3):
        for n, m in pairs(6):
            hw = (n, m) + (0,) * (r - 2)
            for w, _ in enumerate_dominant_weights(n, m, r):
                checked += 1
                if mult_irrep(n, m, r, w) != freudenthal_mult(hw, w):
                    failures.append((r, hw, w))
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    record(2, "irreducible multiplicities = Freudenthal", failures, f"{checked} weights, {elapsed:.1f}s")


def test_c03_grothendieck_consistency():
    failures, checked = [], 0
    for r in (2, 3, 4):
        for n, m in pairs(10):
            for w, _ in enumerate_dominant_weights(n, m, r):
                checked += 1
                if mult_irrep(n, m, r, w) != mult_irrep_via_virtual(n, m, r, w):
                    failures.append((r, n, m, w))
    record(3, "closed form = virtual decomposition", failures, f"{checked} weights")


def test_c04_j_plus_one():
    n, m = 5, 4
    failures = [
        j for j in range(m + 1) if mult_tensor(n, m, 3, (n + m - j, j, 0)) != j + 1
    ]
    record(4, "multiplicity of (n+m-j, j, 0) is j+1 at r=3, n=5, m=4", failures)


def test_c05_diamond_law():
    failures, checked = [], 0
    for r in (2, 3, 4):
        for n in range(9):
            table = brute_tensor_weights(n, 0, r)
            support = set(table.table) | {w for w, _ in enumerate_dominant_weights(n, 0, r)}
            for w in support:
                checked += 1
                k = (n - sum(map(abs, w))) // 2
                closed = binom(k + r - 1, r - 1)
                if not mult_sym(n, r, w) == closed == table[w]:
                    failures.append((r, n, w))
    record(5, "Sym^n multiplicity = binom(k+r-1, r-1) = brute", failures, f"{checked} weights")


def test_c06_highest_weight_vectors():
    failures, checked = [], 0
    for r in (2, 3):
        for n, m in pairs(6, min_m=1):
            for p in range(m + 1):
                checked += 1
                v = highest_weight_vector(n, m, p, r)
                if not is_highest_weight(v) or rho_star(v):
                    failures.append((r, n, m, p))
    for n in range(1, 4):
        for m in range(1, 4):
            ranks = rho_ranks(n, m, 2)
            if not ranks["rho_rank"] == ranks["rho_star_rank"] == ranks["small_dim"]:
                failures.append(("rank", n, m, ranks))
    record(6, "v_p highest weight and in ker rho_star; rho injective, rho_star surjective", failures,
           f"{checked} vectors, 9 rank checks")


def test_c07_decomposition_sweeps():
    failures, checked = [], 0
    for r in (2, 3):
        for n, m in pairs(8, min_m=1):
            reports = [check_prop2(n, m, r)]
            if m >= 2:
                reports.append(check_balance(n, m, r))
            for rep in reports:
                checked += rep.checked
                if not rep.passed:
                    failures.append(rep.summary())
    record(7, "direct-sum and balance identities", failures, f"{checked} weight checks")


def test_c08_dimensions_and_counters():
    failures = []
    for r in (2, 3):
        for n, m in pairs(6):
            if dim_irrep(n, m, r) != weyl_dim((n, m) + (0,) * (r - 2)):
                failures.append(("dim", r, n, m))
    rng = random.Random(20261015)
    queries = 0
    for _ in range(10_000):
        caps = [rng.randint(0, 10) for _ in range(rng.randint(1, 12))]
        for m in range(sum(caps) + 1):
            queries += 1
            if bounded_count_sieve(caps, m) != bounded_count_dp(caps, m):
                failures.append((caps, m))
    record(8, "dimension by summation = Weyl; sieve = DP on 10000 cap vectors", failures,
           f"{queries} counter queries")


def _bench_median(capsys, counter):
    code = run(["bench", "--rank", "5", "-n", "4", "-m", "3", "--counter", counter, "--repeat", "3"])
    out, err = capsys.readouterr()
    assert code == 0
    return float(re.search(r"median=([0-9.]+)s", err).group(1)), out


def test_c09_performance(capsys):
    failures = []
    n, m, r = 20, 15, 5
    weights = [w for w, k in enumerate_dominant_weights(n, m, r)]
    # the deepest layers carry the most compositions; also sample the rest
    sample = weights[-8:] + weights[:: max(1, len(weights) // 40)]
    worst = 0.0
    for w in sample:
        start = time.perf_counter()
        mult_irrep(n, m, r, w)
        elapsed = time.perf_counter() - start
        worst = max(worst, elapsed)
        if elapsed >= 1.0:
            failures.append((w, round(elapsed, 3)))
    sieve, sieve_out = _bench_median(capsys, "sieve")
    dp, dp_out = _bench_median(capsys, "dp")
    if sieve_out != dp_out:
        failures.append(("bench results differ", sieve_out, dp_out))
    if not sieve > dp:
        failures.append(("sieve not slower", sieve, dp))
    record(9, "r=5 n=20 m=15 single weight < 1 s; sieve slower than DP", failures,
           f"worst {worst:.3f}s over {len(sample)} weights; bench median sieve {sieve:.4f}s vs dp {dp:.4f}s")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
