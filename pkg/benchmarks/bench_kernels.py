"""Compare the compiled DP kernel against the pure-Python fallback.

Runs the table workloads that dominate `partlab verify` with each kernel
and prints wall times plus the speedup.  The compiled kernel is optional;
when the extension is missing only the fallback column appears.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from partlab import counting
from partlab import _dpcore_py
from partlab.setspec import (
    ALL_PARTS,
    DoublyExponential,
    Finite,
    Powers,
    WithZero,
)

try:
    from partlab import _dpcore
except ImportError:
    _dpcore = None

WORKLOADS = [
    ("classical, table to 2000", 2000, ALL_PARTS, None),
    ("binary partitions, table to 2^17", 2**17, Powers(2), None),
    (
        "doubly exponential pair, table to 2^20",
        2**20,
        DoublyExponential(2),
        WithZero(DoublyExponential(2)),
    ),
    ("finite {3,4,5}, table to 200000", 200000, Finite((3, 4, 5)), None),
]


def run(kernel, upto, parts, mults, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        if mults is None:
            table = counting.count_table(upto, parts, kernel=kernel)
        else:
            table = counting.count_table(upto, parts, mults, kernel=kernel)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, table.values[-1]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best of N runs")
    args = ap.parse_args()

    kernels = [("python", _dpcore_py)]
    if _dpcore is not None:
        kernels.insert(0, ("cython", _dpcore))
    print(f"default backend: {counting.KERNEL_BACKEND}")
    print(f"{'workload':42s}" + "".join(f"{name:>12s}" for name, _ in kernels) + f"{'speedup':>10s}")
    for label, upto, parts, mults in WORKLOADS:
        times = []
        check = None
        for _, kernel in kernels:
            elapsed, last = run(kernel, upto, parts, mults, args.repeat)
            times.append(elapsed)
            if check is None:
                check = last
            elif check != last:
                raise AssertionError(f"kernels disagree on {label}")
        row = f"{label:42s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
