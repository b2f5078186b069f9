"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 enumeration
budget refusal.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import statistics
import sys
import tempfile
import time
from typing import Callable, Sequence

from .combinatorics import COUNTERS, clear_caches
from .decomposition import check_balance, check_prop2, check_virtual_dimension
from .multiplicity import (
    REPRESENTATIONS,
    dim_by_summation,
    mult_irrep,
    mult_irrep_via_virtual,
    multiplicity,
    weight_diagram,
)
from .oracles import BudgetExceeded, brute_tensor_weights, freudenthal_mult, weyl_dim
from .weights import enumerate_dominant_weights

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
SAFE_INTEGER = 2**53
SUITES = ("tensor", "irrep", "liealg", "decomp", "all")


class UsageError(Exception):
    pass


def _parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be comma-separated integers: {text!r}")


def _json_int(value: int, name: str) -> dict:
    out = {name: str(value)}
    if abs(value) < SAFE_INTEGER:
        out[f"{name}_value"] = value
    return out


def _emit(text: str, out: str | None) -> None:
    """Write to stdout or atomically replace ``out``."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sympweight-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _check_common(args) -> None:
    if args.rank < 2:
        raise UsageError("--rank must be at least 2")
    for name in ("n", "m"):
        if getattr(args, name, 0) < 0:
            raise UsageError(f"-{name} must be non-negative")
    if getattr(args, "rep", None) == "irrep" and args.n < args.m:
        raise UsageError("irreducible highest weight needs n >= m")
    if getattr(args, "rep", None) == "sym" and args.m != 0:
        raise UsageError("--rep sym takes a single degree -n; -m must be 0")


def cmd_mult(args) -> int:
    _check_common(args)
    if len(args.weight) != args.rank:
        raise UsageError(f"--weight needs {args.rank} entries, got {len(args.weight)}")
    value = multiplicity(args.rep, args.n, args.m, args.rank, args.weight, counter=args.counter)
    _emit(f"{value}\n", args.out)
    return EXIT_OK


def render_diagram(records, meta: dict, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "meta": meta,
            "records": [
                {
                    "weight": list(rec.weight),
                    "k": rec.k,
                    **_json_int(rec.multiplicity, "multiplicity"),
                    **_json_int(rec.orbit_size, "orbit_size"),
                }
                for rec in records
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["weight", "k", "multiplicity", "orbit_size"])
    for rec in records:
        writer.writerow(["-".join(map(str, rec.weight)), rec.k, rec.multiplicity, rec.orbit_size])
    return buf.getvalue()


def cmd_diagram(args) -> int:
    _check_common(args)
    records = weight_diagram(
        args.n, args.m, args.rank, rep=args.rep, counter=args.counter, workers=args.workers
    )
    total = sum(rec.multiplicity * rec.orbit_size for rec in records)
    meta = {
        "rank": args.rank,
        "n": args.n,
        "m": args.m,
        "rep": args.rep,
        "counter": args.counter,
        "records": len(records),
        **_json_int(total, "dimension"),
    }
    _emit(render_diagram(records, meta, args.format), args.out)
    return EXIT_OK


def cmd_dim(args) -> int:
    args.rep = "irrep"
    _check_common(args)
    total = dim_by_summation(args.n, args.m, args.rank, counter=args.counter)
    expected = weyl_dim((args.n, args.m) + (0,) * (args.rank - 2))
    if total != expected:
        print(f"dimension mismatch: summation {total} != Weyl formula {expected}", file=sys.stderr)
        return EXIT_FAIL
    _emit(f"{total}\n", args.out)
    return EXIT_OK


# verify suites ------------------------------------------------------------


def _pairs(max_degree: int, min_m: int = 0):
    for total in range(max_degree + 1):
        for m in range(min_m, total // 2 + 1):
            yield total - m, m


def suite_tensor(rank: int, max_degree: int, counter: str) -> list[str]:
    from .multiplicity import mult_tensor

    failures = []
    for n, m in _pairs(max_degree):
        table = brute_tensor_weights(n, m, rank)
        for w, count in table.table.items():
            got = mult_tensor(n, m, rank, w, counter=counter)
            if got != count:
                failures.append(f"tensor r={rank} n={n} m={m} w={w}: formula {got} != brute {count}")
    return failures


def suite_irrep(rank: int, max_degree: int, counter: str) -> list[str]:
    failures = []
    for n, m in _pairs(max_degree):
        hw = (n, m) + (0,) * (rank - 2)
        for w, _ in enumerate_dominant_weights(n, m, rank):
            got = mult_irrep(n, m, rank, w, counter=counter)
            want = freudenthal_mult(hw, w)
            virtual = mult_irrep_via_virtual(n, m, rank, w, counter=counter)
            if not got == want == virtual:
                failures.append(
                    f"irrep r={rank} hw={hw} w={w}: formula {got}, virtual {virtual}, Freudenthal {want}"
                )
        total = dim_by_summation(n, m, rank, counter=counter)
        if total != weyl_dim(hw):
            failures.append(f"dim r={rank} hw={hw}: summation {total} != Weyl {weyl_dim(hw)}")
    return failures


def suite_liealg(rank: int, max_degree: int, counter: str) -> list[str]:
    from .liealg import highest_weight_vector, is_highest_weight, rho_ranks, rho_star

    failures = []
    for n, m in _pairs(max_degree, min_m=1):
        weights = set()
        for p in range(m + 1):
            v = highest_weight_vector(n, m, p, rank)
            if not is_highest_weight(v):
                failures.append(f"liealg r={rank} n={n} m={m} p={p}: v_p not annihilated")
            if rho_star(v):
                failures.append(f"liealg r={rank} n={n} m={m} p={p}: rho_star(v_p) != 0")
            weights.add((n + m - p, p))
        if len(weights) != m + 1:
            failures.append(f"liealg r={rank} n={n} m={m}: v_p weights not distinct")
        if rank == 2 and n <= 3:
            ranks = rho_ranks(n, m, rank)
            if not ranks["rho_rank"] == ranks["rho_star_rank"] == ranks["small_dim"]:
                failures.append(f"liealg r={rank} n={n} m={m}: rho/rho_star ranks {ranks}")
    return failures


def suite_decomp(rank: int, max_degree: int, counter: str) -> list[str]:
    failures = []
    for n, m in _pairs(max_degree):
        reports = [check_virtual_dimension(n, m, rank, counter=counter)]
        if m >= 1:
            reports.append(check_prop2(n, m, rank, counter=counter))
        if m >= 2:
            reports.append(check_balance(n, m, rank, counter=counter))
        failures += [r.summary() for r in reports if not r.passed]
    return failures


SUITE_RUNNERS: dict[str, Callable[[int, int, str], list[str]]] = {
    "tensor": suite_tensor,
    "irrep": suite_irrep,
    "liealg": suite_liealg,
    "decomp": suite_decomp,
}


def cmd_verify(args) -> int:
    if args.rank < 2:
        raise UsageError("--rank must be at least 2")
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    names = list(SUITE_RUNNERS) if args.suite == "all" else [args.suite]
    failed = False
    lines = []
    for name in names:
        start = time.perf_counter()
        failures = SUITE_RUNNERS[name](args.rank, args.max_degree, args.counter)
        elapsed = time.perf_counter() - start
        status = "PASS" if not failures else f"FAIL ({len(failures)})"
        lines.append(f"{name}: {status} rank={args.rank} max-degree={args.max_degree} [{elapsed:.2f}s]")
        lines += [f"  {f}" for f in failures]
        failed = failed or bool(failures)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bench(args) -> int:
    _check_common(args)
    if args.repeat < 1:
        raise UsageError("--repeat must be at least 1")
    if args.weight is not None and len(args.weight) != args.rank:
        raise UsageError(f"--weight needs {args.rank} entries")

    if args.weight is None:
        job = lambda: dim_by_summation(args.n, args.m, args.rank, rep=args.rep, counter=args.counter)
    else:
        job = lambda: multiplicity(args.rep, args.n, args.m, args.rank, args.weight, counter=args.counter)
    timings = []
    for _ in range(args.repeat):
        clear_caches()
        start = time.perf_counter()
        result = job()
        timings.append(time.perf_counter() - start)
    target = "dimension" if args.weight is None else f"weight={','.join(map(str, args.weight))}"
    print(
        f"bench counter={args.counter} rep={args.rep} rank={args.rank} n={args.n} m={args.m} "
        f"{target} repeat={args.repeat} median={statistics.median(timings):.6f}s",
        file=sys.stderr,
    )
    _emit(f"{result}\n", args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sympweight", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, degrees=True, rep=True):
        p.add_argument("--rank", "-r", type=int, required=True)
        if degrees:
            p.add_argument("-n", type=int, required=True)
            p.add_argument("-m", type=int, default=0)
        if rep:
            p.add_argument("--rep", choices=REPRESENTATIONS, default="irrep")
        p.add_argument("--counter", choices=COUNTERS, default="dp")
        p.add_argument("--out", default=None, help="write to FILE instead of stdout")

    p = sub.add_parser("mult", help="multiplicity of one weight")
    common(p)
    p.add_argument("--weight", type=_parse_weight, required=True)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("diagram", help="all dominant weights with multiplicities")
    common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("dim", help="dimension of V(n, m, 0, ...) by summation")
    common(p, rep=False)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("verify", help="oracle verification sweeps")
    common(p, degrees=False, rep=False)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time a query with a chosen counter")
    common(p)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--weight", type=_parse_weight, default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"sympweight: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"sympweight: refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except KeyboardInterrupt:
        print("sympweight: interrupted", file=sys.stderr)
        return 130


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
