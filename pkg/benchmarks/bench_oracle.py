"""Time the exhaustive-oracle kernels: compiled vs pure Python.

    python benchmarks/bench_oracle.py            # default sizes
    python benchmarks/bench_oracle.py --quick    # small sizes only
"""

from __future__ import annotations

import argparse
import time

from ramm import kernel
from ramm.oracle import optimal_makespan
from ramm.scenario import generate_workload

SIZES = [(10, 2), (8, 3), (14, 2), (11, 3), (18, 2), (9, 4), (14, 3)]
QUICK = SIZES[:3]


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()

    if kernel._cbest is None:
        print("compiled kernel not built; only the Python kernel can be timed")

    print(f"{'n':>3} {'m':>2} {'mappings':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n, m in QUICK if args.quick else SIZES:
        etc = generate_workload(args.seed, n, m).etc()
        t_py = _time(lambda: optimal_makespan(etc, backend="python"), 1)
        ref = optimal_makespan(etc, backend="python")
        if kernel._cbest is not None:
            t_c = _time(lambda: optimal_makespan(etc, backend="cython"), args.repeat)
            assert optimal_makespan(etc, backend="cython") == ref
            print(f"{n:>3} {m:>2} {m**n:>10} {t_py:>10.4f} {t_c:>10.4f} {t_py / t_c:>7.1f}x")
        else:
            print(f"{n:>3} {m:>2} {m**n:>10} {t_py:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
