#!/usr/bin/env python3
"""Benchmark the compiled vs pure-Python elimination kernels on the
workloads that dominate this package: the 61 interpolation determinants
behind the characteristic polynomial and the full 60x60 exact inverse.

Run: python benchmarks/bench_bareiss.py
(Imports both lanes directly, so results do not depend on which lane the
package selected at import.)
"""

import time

from buckysob import _bareiss_py
from buckysob.graph import buckyball, laplacian

try:
    from buckysob import _bareiss_cy
except ImportError:
    _bareiss_cy = None


def workloads():
    A = laplacian(buckyball())
    n = A.rows
    a_int = [[int(x) for x in row] for row in A.data]

    def charpoly_dets(kernel):
        for x in range(n + 1):
            rows = [[(x if i == j else 0) - a_int[i][j] for j in range(n)]
                    for i in range(n)]
            kernel.det_int(rows)

    def full_inverse(kernel):
        # 60*(A + E0) with the identity rhs scaled by 60: integer system
        aug = [[60 * a_int[i][j] + 1 for j in range(n)] +
               [60 if i == j else 0 for j in range(n)] for i in range(n)]
        kernel.jordan_int(aug, n, n)

    return [("charpoly 61 determinants", charpoly_dets),
            ("pseudo-Green full inverse", full_inverse)]


def main():
    lanes = [("python", _bareiss_py)]
    if _bareiss_cy is not None:
        lanes.append(("cython", _bareiss_cy))
    for name, fn in workloads():
        print(f"== {name}")
        base = None
        for lane, kernel in lanes:
            t0 = time.perf_counter()
            fn(kernel)
            dt = time.perf_counter() - t0
            if base is None:
                base = dt
            print(f"  {lane:7s} {dt:8.3f} s  (x{base / dt:.2f})")


if __name__ == "__main__":
    main()
