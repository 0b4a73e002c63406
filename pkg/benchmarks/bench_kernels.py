#!/usr/bin/env python3
"""Compare the compiled search kernels against the pure-Python fallback.

Runs the two hot kernels — minimal-generating-set enumeration and ordered
generating-tuple search — through both implementations on a spread of
catalog groups, checks that the outputs agree, and prints best-of-N
timings with speedups.

Usage:
    python3 benchmarks/bench_kernels.py [--groups S4,A5,...] [--repeat N]
"""

import argparse
import sys
import time

from indigraph._kernels import _pure
from indigraph.catalog import catalog_entry
from indigraph.gensets import size_cap_for
from indigraph.groups import frattini

try:
    from indigraph._kernels import _core
except ImportError:
    _core = None

DEFAULT_GROUPS = "S4,C2^4,D12,C3^3,A5,C2^5"
NODE_BUDGET = 10**9
TUPLE_BUDGET = 10**7


def best_of(repeat, fn):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = (time.perf_counter() - t0) * 1000.0
        best = dt if best is None else min(best, dt)
    return best, result


def bench_group(name, repeat):
    group = catalog_entry(name).build()
    frat_mask = frattini(group).mask
    cap = size_cap_for(group.order)
    kernels = [("pure", _pure)] + ([("compiled", _core)] if _core else [])

    rows = []
    enum_results, tuple_results = {}, {}
    for label, kern in kernels:
        prep = kern.prepare(group.mul)
        ms, (raw, _nodes, complete) = best_of(
            repeat,
            lambda: kern.enumerate_minimal_sets(prep, frat_mask, cap, NODE_BUDGET),
        )
        assert complete
        enum_results[label] = {u: tuple(raw[u]) for u in sorted(raw)}
        total = sum(len(v) for v in raw.values())
        rows.append((label, f"enumerate ({total} sets)", ms))

        d = min(u for u, v in raw.items() if v)
        ms, (tuples, _nodes, complete) = best_of(
            repeat,
            lambda: kern.generating_tuples(
                prep, d, frat_mask, NODE_BUDGET, TUPLE_BUDGET
            ),
        )
        assert complete
        tuple_results[label] = tuple(tuples)
        rows.append((label, f"tuples d={d} ({len(tuples)})", ms))

    if _core:
        assert enum_results["pure"] == enum_results["compiled"], name
        assert tuple_results["pure"] == tuple_results["compiled"], name
    return group.order, rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--groups", default=DEFAULT_GROUPS,
                        help="comma-separated catalog names")
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions (best is reported)")
    args = parser.parse_args(argv)

    if _core is None:
        print("compiled kernel unavailable; timing the pure fallback only",
              file=sys.stderr)
    print(f"{'group':8s} {'order':>5s}  {'workload':24s} "
          f"{'pure ms':>9s} {'compiled ms':>12s} {'speedup':>8s}")
    for name in args.groups.split(","):
        name = name.strip()
        order, rows = bench_group(name, args.repeat)
        by_workload = {}
        for label, workload, ms in rows:
            by_workload.setdefault(workload, {})[label] = ms
        for workload, times in by_workload.items():
            pure_ms = times["pure"]
            if "compiled" in times:
                comp = f"{times['compiled']:12.2f}"
                speed = f"{pure_ms / times['compiled']:7.1f}x"
            else:
                comp, speed = f"{'-':>12s}", f"{'-':>8s}"
            print(f"{name:8s} {order:5d}  {workload:24s} "
                  f"{pure_ms:9.2f} {comp} {speed}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
