#!/usr/bin/env python3
"""Benchmark the no-silhouette raster kernel: numba backend vs numpy fallback.

Usage: python3 bench/bench_ns_raster.py [--resolution 256] [--samples 4096]
"""
import argparse
import time

import numpy as np

from frontalforge import _kernels
from frontalforge.catalog import catalog
from frontalforge.silhouette import ns_raster
from frontalforge.verify import grid_for


def time_backend(F, bbox, resolution, grid, backend, repeats):
    # warm once so jit compilation is not billed to the first measurement
    ns_raster(F, bbox, resolution, grid, backend=backend)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        raster = ns_raster(F, bbox, resolution, grid, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, raster


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--resolution", type=int, default=256)
    ap.add_argument("--samples", type=int, default=4096)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    cases = [("circle", (-2.0, 2.0, -2.0, 2.0)),
             ("square", (-3.0, 3.0, -3.0, 3.0))]
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    print(f"resolution {args.resolution}x{args.resolution}, "
          f"{args.samples} curve samples, best of {args.repeats}")
    for name, bbox in cases:
        F = catalog(name)
        grid = grid_for(F, args.samples)
        results = {}
        rasters = {}
        for backend in backends:
            results[backend], rasters[backend] = time_backend(
                F, bbox, args.resolution, grid, backend, args.repeats)
        line = f"{name:8s}"
        for backend in backends:
            line += f"  {backend}: {results[backend] * 1e3:8.2f} ms"
        if len(backends) == 2:
            same = bool(np.array_equal(rasters["numpy"].cells,
                                       rasters["numba"].cells))
            line += (f"  speedup: {results['numpy'] / results['numba']:.1f}x"
                     f"  cells equal: {same}")
        print(line)


if __name__ == "__main__":
    main()
