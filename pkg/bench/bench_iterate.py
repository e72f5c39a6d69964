"""Benchmark the float iteration kernel: numba @njit vs pure numpy.

Usage:
    python bench/bench_iterate.py [--instances 64] [--steps 2000] [--n 8]

The same step kernel runs both ways on identical inputs; per-step wall time
and the speedup ratio are reported.  Set CWPOLY_NUMBA=0 to check that the
numpy fallback is what the package would use without numba.
"""
from __future__ import annotations

import argparse
import random
import time

import numpy as np

from cwpoly import central_equidistant, kernels
from cwpoly.fuzz import random_cw_plane


def gather_instances(count: int, n_max: int):
    rng = random.Random(8321)
    out = []
    for _ in range(count):
        plane = random_cw_plane(rng, n_max=n_max)
        ce = central_equidistant(plane)
        m0 = np.array([[float(p.x), float(p.y)] for p in ce.M])
        u = np.array([[float(p.x), float(p.y)] for p in plane.U.vertices])
        v = np.array([[float(p.x), float(p.y)] for p in plane.V.vertices])
        out.append((m0, u, v))
    return out


def run(instances, steps: int, force_numpy: bool) -> tuple[float, int]:
    total_steps = 0
    t0 = time.perf_counter()
    for m0, u, v in instances:
        k, _, _, _ = kernels.iterate_float(m0, u, v, steps, 0.0, force_numpy=force_numpy)
        total_steps += k
    return time.perf_counter() - t0, total_steps


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--instances", type=int, default=64)
    ap.add_argument("--steps", type=int, default=2000)
    ap.add_argument("--n", type=int, default=8)
    args = ap.parse_args()

    instances = gather_instances(args.instances, args.n)
    print(f"{args.instances} instances, up to {args.steps} steps each, "
          f"numba available: {kernels.using_numba()}")

    if kernels.using_numba():
        run(instances[:1], 4, force_numpy=False)  # trigger jit compilation
        t_jit, s_jit = run(instances, args.steps, force_numpy=False)
        print(f"numba  : {t_jit:8.3f}s  ({1e6 * t_jit / s_jit:7.2f} us/step, {s_jit} steps)")
    else:
        t_jit = None
    t_np, s_np = run(instances, args.steps, force_numpy=True)
    print(f"numpy  : {t_np:8.3f}s  ({1e6 * t_np / s_np:7.2f} us/step, {s_np} steps)")
    if t_jit is not None:
        print(f"speedup: {t_np / t_jit:7.2f}x")


if __name__ == "__main__":
    main()
