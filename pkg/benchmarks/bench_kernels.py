"""Time the search kernels on both backends.

    python benchmarks/bench_kernels.py [--repeat N] [--size N]
"""

import argparse
import time

from esnkit import kernels


def workloads(n):
    with kernels.use_backend("python"):
        tables = [tuple(t) for t in kernels.search_tables(n)]
    return {
        f"search_tables n={n}": lambda: sum(1 for _ in kernels.search_tables(n)),
        "search_tables lms n=4": lambda: sum(1 for _ in kernels.search_tables(4, True)),
        f"assoc_ok x{len(tables)}": lambda: sum(kernels.assoc_ok(t, n) for t in tables),
        f"search_unary x{len(tables)}": lambda: sum(
            len(kernels.search_unary(t, n, right, restr)) for t in tables
            for right in (False, True) for restr in (False, True)),
        f"pseudo-inverses x{len(tables)}": lambda: sum(
            kernels.unique_pseudo_inverses(t, n) is not None for t in tables),
    }


def best_of(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--size", type=int, default=3, help="carrier size for the table workloads")
    args = p.parse_args(argv)
    backends = kernels.available()
    if "native" not in backends:
        print("compiled extension not built; timing the Python backend only")
    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, fn in workloads(args.size).items():
        times, results = {}, {}
        for b in backends:
            with kernels.use_backend(b):
                results[b], times[b] = best_of(fn, args.repeat)
        if len(set(results.values())) != 1:
            raise SystemExit(f"backends disagree on {name}: {results}")
        row = f"{name:<28}" + "".join(f"{times[b] * 1000:>10.1f}ms" for b in backends)
        if len(backends) > 1:
            row += f"{times['python'] / max(times['native'], 1e-9):>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
