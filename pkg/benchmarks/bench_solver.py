"""Compare the compiled and pure solve_cover kernels on fixed instances.

Both kernels implement the identical branch-and-bound search, so their
results must match bit for bit; this script cross-checks that while
timing them.  Run as `python benchmarks/bench_solver.py [--repeat N]`.
"""

import argparse
import time

import domkit._core_py as pure
from domkit.model import DifferenceSet
from domkit.solver import reduce_mod

try:
    import domkit._core as compiled
except ImportError:
    compiled = None

# published circulant rows at their largest tabulated sizes, then family
# step sets reduced at periods around 40 where the pure kernel starts to work
CASES = [
    ("circulant Z_26, {1,2}", 26, (1, 2)),
    ("circulant Z_29, {1,15}", 29, (1, 15)),
    ("family d=4, s=14 at p=38", 38, (1, 2, 14)),
    ("family d=4, s=-10 at p=40", 40, (1, 2, -10)),
    ("family d=5, s=18 at p=42", 42, (1, 2, 3, 18)),
    ("family d=5, s=-12 at p=45", 45, (1, 2, 3, -12)),
]


def best_of(repeat, fn, *args):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="runs per timing, best kept")
    args = parser.parse_args()

    if compiled is None:
        print("note: compiled kernel not built, timing the pure kernel only")
    header = f"{'instance':<28}{'n':>4}{'gamma':>7}{'nodes':>9}{'pure':>11}"
    if compiled is not None:
        header += f"{'compiled':>11}{'speedup':>9}"
    print(header)

    total_pure = 0.0
    total_compiled = 0.0
    for label, n, steps in CASES:
        inst = reduce_mod(DifferenceSet(steps), n)
        offsets = sorted(inst.connection | {0})
        t_pure, res_pure = best_of(args.repeat, pure.solve_cover, n, offsets)
        total_pure += t_pure
        row = f"{label:<28}{n:>4}{res_pure[0]:>7}{res_pure[2]:>9}{t_pure * 1e3:>9.2f}ms"
        if compiled is not None:
            t_comp, res_comp = best_of(args.repeat, compiled.solve_cover, n, offsets)
            if res_comp != res_pure:
                raise SystemExit(f"kernel disagreement on {label}: {res_comp} != {res_pure}")
            total_compiled += t_comp
            row += f"{t_comp * 1e3:>9.2f}ms{t_pure / t_comp:>8.1f}x"
        print(row)

    summary = f"{'total':<48}{total_pure * 1e3:>9.2f}ms"
    if compiled is not None:
        summary += f"{total_compiled * 1e3:>9.2f}ms{total_pure / total_compiled:>8.1f}x"
    print(summary)


if __name__ == "__main__":
    main()
