#!/usr/bin/env python3
"""Benchmark the compiled pivot kernel against the pure-Python twin.

Two measurements:

* raw pivot throughput on captured tableau shapes typical of containment
  LPs (rationals with growing numerators, block-sparse rows);
* end-to-end circumradius solves with the kernel functions rebound, which
  shows how much of the whole pipeline the pivot loop actually is.

Run:  python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import copy
import time

from gaugeradii import _kernel_py, kernel
from gaugeradii.constructions import SplitMix64, random_vpolytope
from gaugeradii.ratcore import RATIONAL_BACKEND, Rational

try:
    from gaugeradii import _kernel
except ImportError:
    _kernel = None


def make_tableau(rng: SplitMix64, rows: int, cols: int, sparsity: int = 3):
    tab = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            if rng.below(sparsity) == 0:
                row.append(Rational(rng.below(199) - 99, 1 + rng.below(40)))
            else:
                row.append(Rational(0))
        tab.append(row)
    return tab


def bench_pivots(impl, tableaus, pivots):
    start = time.perf_counter()
    for tab, (pr, pc) in zip(tableaus, pivots):
        impl.pivot(tab, pr, pc)
    return time.perf_counter() - start


def bench_raw(repeat: int):
    shapes = [(24, 100), (48, 200), (80, 300)]
    print(f"raw pivot loop ({repeat} pivots per shape, {RATIONAL_BACKEND} scalars)")
    for rows, cols in shapes:
        rng = SplitMix64(7)
        base, pivots = [], []
        for _ in range(repeat):
            tab = make_tableau(rng, rows, cols)
            pr, pc = rng.below(rows), rng.below(cols)
            if not tab[pr][pc]:
                tab[pr][pc] = Rational(3, 7)
            base.append(tab)
            pivots.append((pr, pc))
        t_py = bench_pivots(_kernel_py, copy.deepcopy(base), pivots)
        line = f"  {rows:3d} x {cols:3d}:  python {t_py * 1e3 / repeat:8.3f} ms/pivot"
        if _kernel is not None:
            t_cy = bench_pivots(_kernel, copy.deepcopy(base), pivots)
            line += f"   cython {t_cy * 1e3 / repeat:8.3f} ms/pivot   speedup x{t_py / t_cy:.2f}"
        print(line)


def bench_end_to_end(repeat: int):
    from gaugeradii.radii import circumradius_program
    from gaugeradii import lp

    rng = SplitMix64(31)
    programs = []
    for _ in range(repeat):
        body = random_vpolytope(3, 6, 6, 0, rng=rng)
        gauge = random_vpolytope(3, 6, 6, 0, rng=rng)
        programs.append(circumradius_program(body, gauge)[0])

    def run(impl):
        kernel.pivot, kernel.dot = impl.pivot, impl.dot
        start = time.perf_counter()
        for program in programs:
            assert lp.solve(program).status == lp.OPTIMAL
        return time.perf_counter() - start

    original = (kernel.pivot, kernel.dot)
    try:
        t_py = run(_kernel_py)
        print(f"end-to-end circumradius LPs ({repeat} solves, dim 3, 6x6 vertices)")
        print(f"  python backend: {t_py * 1e3 / repeat:8.2f} ms/solve")
        if _kernel is not None:
            t_cy = run(_kernel)
            print(f"  cython backend: {t_cy * 1e3 / repeat:8.2f} ms/solve   speedup x{t_py / t_cy:.2f}")
    finally:
        kernel.pivot, kernel.dot = original


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=30)
    args = parser.parse_args()
    if _kernel is None:
        print("compiled kernel not built; benchmarking the pure backend only")
    bench_raw(args.repeat)
    bench_end_to_end(args.repeat)


if __name__ == "__main__":
    main()
