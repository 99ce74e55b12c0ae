#!/usr/bin/env python3
"""Time the compiled kernels against their pure Python twins.

Runs the three hot routines (Sturm count, index bisection, shifted
tridiagonal solve) on order-2 squeeze chains of growing size and prints
a table of best-of-k wall times plus the speedup.  Also cross-checks
that both backends return bit-identical results on the smallest chain,
which is the invariant the fallback relies on.

Usage:
    python3 scripts/benchmark_kernels.py
    python3 scripts/benchmark_kernels.py --sizes 1000,64000 --repeats 5
"""

import argparse
import sys
import time

import numpy as np

from fracsqueeze.chains import build_squeeze_chain
from fracsqueeze.eigen import MAX_BISECTION_STEPS, gershgorin_bound
from fracsqueeze._kernels import _py

try:
    from fracsqueeze._kernels import _core
except ImportError:
    _core = None


def best_of(fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return best


def tasks_for(beta, size):
    chain = build_squeeze_chain(size, 2.0)
    g = gershgorin_bound(chain)
    pad = g * 1e-13
    k = size // 2
    rhs = np.full(size, size ** -0.5)
    out = np.empty(size)

    def make(mod):
        lam = mod.bisect_index(beta, k, -g - pad, g + pad,
                               1e-12, MAX_BISECTION_STEPS)[0]
        return {
            "sturm": lambda: mod.sturm_count(beta, 0.5),
            "bisect": lambda: mod.bisect_index(beta, k, -g - pad, g + pad,
                                               1e-12, MAX_BISECTION_STEPS),
            "solve": lambda: mod.solve_shifted(beta, lam * (1.0 + 1e-10),
                                               rhs, out),
        }

    return make


def check_parity(beta, size, k, g):
    pad = g * 1e-13
    args = (beta, k, -g - pad, g + pad, 1e-12, MAX_BISECTION_STEPS)
    if _py.bisect_index(*args) != _core.bisect_index(*args):
        sys.exit("backends disagree on size %d; parity is broken" % size)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="1000,4000,16000",
                    help="comma-separated chain sizes")
    ap.add_argument("--repeats", type=int, default=3,
                    help="repetitions per measurement, best is kept")
    args = ap.parse_args(argv)
    sizes = [int(tok) for tok in args.sizes.split(",")]

    if _core is None:
        print("compiled backend not importable; showing python times only")

    first = sizes[0]
    beta0 = build_squeeze_chain(first, 2.0).couplings
    if _core is not None:
        check_parity(beta0, first, first // 2,
                     gershgorin_bound(build_squeeze_chain(first, 2.0)))
        print("parity check: identical bisection result on size %d" % first)

    print("%8s  %-6s  %12s  %12s  %9s"
          % ("size", "op", "python [ms]", "compiled [ms]", "speedup"))
    for size in sizes:
        beta = build_squeeze_chain(size, 2.0).couplings
        make = tasks_for(beta, size)
        py_tasks = make(_py)
        c_tasks = make(_core) if _core is not None else None
        for op in ("sturm", "bisect", "solve"):
            t_py = best_of(py_tasks[op], args.repeats)
            if c_tasks is None:
                print("%8d  %-6s  %12.3f  %12s  %9s"
                      % (size, op, 1e3 * t_py, "-", "-"))
                continue
            t_c = best_of(c_tasks[op], args.repeats)
            print("%8d  %-6s  %12.3f  %12.3f  %8.1fx"
                  % (size, op, 1e3 * t_py, 1e3 * t_c, t_py / t_c))


if __name__ == "__main__":
    main()
