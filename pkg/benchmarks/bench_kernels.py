"""Compare the compiled kernels with the numpy fallback.

Usage::

    python3 benchmarks/bench_kernels.py [--n 20000] [--d 8] [--repeat 5]

Times one CBO update sweep and the raw Gaussian noise block for each
backend, prints the median wall time and the speedup, and checks that the
two backends agree on the result.
"""

import argparse
import statistics
import time

import numpy as np

from anicbo import backend
from anicbo.rng import NOISE


def _time(fn, repeat):
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return statistics.median(out)


def bench(n, d, repeat, nthreads):
    rng = np.random.default_rng(0)
    x0 = rng.normal(size=(n, d))
    ids = np.arange(n, dtype=np.uint64)
    va = x0.mean(axis=0)
    results = {}
    finals = {}
    for name in backend.available():
        k = backend.get(name)
        rows = {}
        for aniso in (True, False):
            label = "cbo_update " + ("anisotropic" if aniso else "isotropic")

            def run_update():
                x = x0.copy()
                k.cbo_update(x, ids, va, 1.0, 0.32, 0.01, aniso, 7, 3, NOISE, nthreads)
                return x

            rows[label] = _time(run_update, repeat)
            finals[(name, aniso)] = run_update()
        rows["gaussian_block"] = _time(lambda: k.gaussian_block(7, 3, ids, d, NOISE), repeat)
        results[name] = rows
    return results, finals


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=20000)
    p.add_argument("--d", type=int, default=8)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--nthreads", type=int, default=1)
    args = p.parse_args(argv)

    results, finals = bench(args.n, args.d, args.repeat, args.nthreads)
    print(f"N={args.n} d={args.d} nthreads={args.nthreads}, median of {args.repeat}")
    names = list(results)
    print(f"{'kernel':<28}" + "".join(f"{n + ' [ms]':>16}" for n in names)
          + ("   speedup" if len(names) == 2 else ""))
    for label in results[names[0]]:
        line = f"{label:<28}" + "".join(f"{results[n][label] * 1e3:16.2f}" for n in names)
        if len(names) == 2:
            line += f"{results['python'][label] / results['compiled'][label]:9.1f}x"
        print(line)
    if len(names) == 2:
        for aniso in (True, False):
            diff = np.max(np.abs(finals[("compiled", aniso)] - finals[("python", aniso)]))
            print(f"max |compiled - python| ({'aniso' if aniso else 'iso'}): {diff:.3g}")
    else:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
