"""Time the oracle walk on the compiled and pure-Python backends.

    python benchmarks/bench_oracle.py [--dmax 6] [--repeat 3]

Each case evolves the walk from sigma_0 of type (d) (sparse states) and of
type (1^d) (dense states) for the number of steps needed by genus g, and
checks that both backends return identical rows.
"""
import argparse
import time

from onepart import _kernel
from onepart._kernel import evolve, walk_tables
from onepart.oracle import _canonical_rep
from onepart.partitions import Partition


def run(d, nu, steps, backend, repeat):
    tables = walk_tables(d)
    rep = _canonical_rep(Partition(nu))
    start = (tables.perm_index[rep], tables.orbit_partition(rep))
    best = float("inf")
    rows = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        rows = evolve(tables, *start, steps, backend)
        best = min(best, time.perf_counter() - t0)
    return best, rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--dmax", type=int, default=6)
    ap.add_argument("--genus", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernel.BACKEND != "cython":
        print("compiled kernel not built; only the Python backend is timed")
    print(f"{'d':>3} {'nu':>6} {'steps':>5} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for d in range(3, args.dmax + 1):
        for nu, label in (((d,), "(d)"), ((1,) * d, "(1^d)")):
            steps = 2 * args.genus - 2 + d + len(nu)
            t_py, rows_py = run(d, nu, steps, "python", args.repeat)
            if _kernel.BACKEND == "cython":
                t_c, rows_c = run(d, nu, steps, "cython", args.repeat)
                assert rows_c == rows_py, f"backends disagree at d={d}, nu={label}"
                print(f"{d:>3} {label:>6} {steps:>5} {t_py:>10.4f} {t_c:>10.4f} {t_py / t_c:>8.1f}")
            else:
                print(f"{d:>3} {label:>6} {steps:>5} {t_py:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
