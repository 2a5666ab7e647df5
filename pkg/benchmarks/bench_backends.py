"""Compare the compiled and pure-Python arithmetic kernels.

Runs each workload under both backends (when the compiled one is built) and
reports wall-clock times plus the speedup.  Results are identical either way
— the parity tests assert that — so this is purely a performance report.

Usage::

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

from hyperhodge import identities, kernels, values


def _clear_value_caches():
    values.closed_D.cache_clear()
    values.closed_d.cache_clear()


def bench_linear_product():
    consts = [(n, 1) for n in range(1, 120, 2)]
    for _ in range(40):
        kernels.linear_product(consts)


def bench_poly_mul():
    a = [(n * n + 1, n + 1) for n in range(90)]
    a = [kernels.normalize(x, y) for x, y in a]
    for _ in range(30):
        kernels.poly_mul(a, a)


def bench_identity_sweep():
    for g in range(2, 36):
        if not identities.P_poly(g).is_zero():
            raise AssertionError(g)
        if not identities.eqn_check(g).passed:
            raise AssertionError(g)


def bench_value_table():
    _clear_value_caches()
    values.table(40)


WORKLOADS = [
    ("linear_product, 60 odd factors x40", bench_linear_product),
    ("poly_mul, degree-89 rationals x30", bench_poly_mul),
    ("identity sweep: P(t)+eqn, g<=35", bench_identity_sweep),
    ("cross-checked value table, k<=40", bench_value_table),
]


def run_backend(name, repeat):
    kernels.use_backend(name)
    timings = {}
    for label, fn in WORKLOADS:
        best = min(_timed(fn) for _ in range(repeat))
        timings[label] = best
    return timings


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per workload (best is kept)")
    args = parser.parse_args()

    default = kernels.BACKEND
    try:
        kernels.load_backend("c")
        backends = ["py", "c"]
    except ImportError:
        print("compiled kernels not built; timing the pure backend only")
        backends = ["py"]

    results = {}
    try:
        for name in backends:
            results[name] = run_backend(name, args.repeat)
    finally:
        kernels.use_backend(default)
        _clear_value_caches()

    width = max(len(label) for label, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, _ in WORKLOADS:
        row = f"{label:<{width}}  "
        for name in backends:
            row += f"{results[name][label] * 1000:>8.1f}ms"
        if len(backends) == 2:
            ratio = results["py"][label] / results["c"][label]
            row += f"{ratio:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
