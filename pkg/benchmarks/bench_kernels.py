"""Compare the compiled kernels against the pure-Python reference.

Times each workload once per backend and prints a table with speedups.
Sizes are chosen so the pure backend finishes in a few seconds; pass
--scale N to multiply every workload size by N.

    python benchmarks/bench_kernels.py
"""

import argparse
import time

from collatz_lab import _pure

try:
    from collatz_lab import _fast
except ImportError:
    _fast = None


def bench_scalar_sweep(mod, n):
    for k in range(1, n):
        mod.ruler(k)
        mod.interleave_p(k)
        mod.apt_step(k)


def bench_covering(mod, n):
    for k in range(1, n):
        mod.covering_chain(k, 100_000)


WORKLOADS = [
    ("scalar sweep (ruler+p+apt)", bench_scalar_sweep, 200_000),
    ("covering_chain", bench_covering, 20_000),
    ("scan_index_reps", lambda m, n: m.scan_index_reps(0, n), 1_000_000),
    ("scan_ruler_identities", lambda m, n: m.scan_ruler_identities(0, n), 1_000_000),
    ("scan_p3n", lambda m, n: m.scan_p3n(0, n), 1_000_000),
    ("scan_x_residues", lambda m, n: m.scan_x_residues(0, n), 200_000),
    ("scan_emapt_forms", lambda m, n: m.scan_emapt_forms(2, n), 200_000),
]


def run_one(fn, mod, n):
    t0 = time.perf_counter()
    fn(mod, n)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scale", type=int, default=1)
    args = parser.parse_args()

    if _fast is None:
        print("compiled backend not built; showing pure-python times only")

    name_w = max(len(name) for name, _, _ in WORKLOADS)
    header = f"{'workload':<{name_w}}  {'size':>9}  {'pure (s)':>9}"
    if _fast is not None:
        header += f"  {'fast (s)':>9}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, fn, base_n in WORKLOADS:
        n = base_n * args.scale
        t_pure = run_one(fn, _pure, n)
        row = f"{name:<{name_w}}  {n:>9}  {t_pure:>9.4f}"
        if _fast is not None:
            t_fast = run_one(fn, _fast, n)
            ratio = t_pure / t_fast if t_fast > 0 else float("inf")
            row += f"  {t_fast:>9.4f}  {ratio:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
