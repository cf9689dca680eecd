#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure numpy/scipy fallback.

Times the three hot paths (edge sampling, triangle counting, exact degree-1
conditional) on a single realization and prints a comparison table.

    python3 benchmarks/bench_kernels.py --n 5000 --alpha 0.5
"""

import argparse
import time

import numpy as np

from msmnet import _kernels as kernels
from msmnet.graph import Graph, delta_n
from msmnet.weights import sample_pareto


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5000)
    parser.add_argument("--alpha", type=float, default=0.5)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    w = sample_pareto(args.alpha, args.n, np.random.default_rng(args.seed)).values
    delta = delta_n(args.n, args.alpha)
    wsum = float(w.sum())
    seed64 = np.uint64(args.seed)

    if kernels.HAVE_NUMBA:
        # trigger JIT compilation outside the timed region
        kernels._sample_edges_numba_impl(w[:64], delta, seed64)
        g0 = Graph.from_edge_list(3, np.array([0, 1], dtype=np.int64), np.array([1, 2], dtype=np.int64))
        kernels._triangles_numba_impl(g0.indptr, g0.indices)
        kernels._r1_numba_impl(w[:64], delta, float(w[:64].sum()))

    rows = []

    t_np, (eu, ev) = best_of(lambda: kernels._sample_edges_numpy_impl(w, delta, args.seed), args.repeats)
    if kernels.HAVE_NUMBA:
        t_nb, (eu2, ev2) = best_of(
            lambda: kernels._sample_edges_numba_impl(w, delta, seed64), args.repeats
        )
        assert np.array_equal(eu, eu2) and np.array_equal(ev, ev2)
    else:
        t_nb = float("nan")
    rows.append(("sample_edges", t_nb, t_np, f"{eu.size} edges"))

    graph = Graph.from_edge_list(args.n, eu, ev)
    t_np, tri_np = best_of(
        lambda: kernels._triangles_numpy_impl(graph.indptr, graph.indices), args.repeats
    )
    if kernels.HAVE_NUMBA:
        t_nb, tri_nb = best_of(
            lambda: kernels._triangles_numba_impl(graph.indptr, graph.indices), args.repeats
        )
        assert np.array_equal(tri_np, tri_nb)
    else:
        t_nb = float("nan")
    rows.append(("triangle_counts", t_nb, t_np, f"{int(tri_np.sum()) // 3} triangles"))

    t_np, r1_np = best_of(lambda: kernels._r1_numpy_impl(w, delta, wsum), args.repeats)
    if kernels.HAVE_NUMBA:
        t_nb, r1_nb = best_of(lambda: kernels._r1_numba_impl(w, delta, wsum), args.repeats)
        assert abs(r1_np - r1_nb) < 1e-10
    else:
        t_nb = float("nan")
    rows.append(("conditional_r1", t_nb, t_np, f"r1 = {r1_np:.4f}"))

    print(f"n = {args.n}, alpha = {args.alpha}, seed = {args.seed}, "
          f"numba available: {kernels.HAVE_NUMBA}")
    print(f"{'kernel':<18} {'numba [s]':>10} {'numpy [s]':>10} {'speedup':>8}   result")
    for name, t_nb, t_np, note in rows:
        speedup = f"{t_np / t_nb:6.1f}x" if t_nb == t_nb else "    n/a"
        nb_text = f"{t_nb:10.4f}" if t_nb == t_nb else "       n/a"
        print(f"{name:<18} {nb_text} {t_np:10.4f} {speedup}   {note}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
