"""Benchmark the numba kernels against the pure-Python/NumPy fallback.

Usage:
    python benchmarks/bench_backends.py [--sizes 10000,100000,1000000] [--repeats 3]

Times the two hot kernels (Kruskal's union-find sweep and the
preferential-attachment growth loop) on identical inputs and prints a
table with the speedup. Results are identical across backends by
construction; this only compares wall time.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from sfmst import _kernels
from sfmst.generate import GeneratorParams, expected_edge_count, generate_preferential_attachment
from sfmst.mst import _sorted_edge_order


def best_of(repeats, fn, *args):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kruskal_sweep(n_nodes: int, repeats: int) -> tuple[int, float, float]:
    g = generate_preferential_attachment(GeneratorParams(n_nodes, 2, 1))
    order = _sorted_edge_order(g)
    eu, ev, _ = g.edge_arrays
    su = np.ascontiguousarray(eu[order])
    sv = np.ascontiguousarray(ev[order])
    t_py = best_of(repeats, _kernels.kruskal_accept_py, g.n_nodes, su, sv)
    t_nb = (
        best_of(repeats, _kernels.kruskal_accept_nb, g.n_nodes, su, sv)
        if _kernels.kruskal_accept_nb is not None
        else float("nan")
    )
    return g.n_edges, t_py, t_nb


def bench_pa_growth(n_nodes: int, m: int, repeats: int) -> tuple[int, float, float]:
    m_edges = expected_edge_count(n_nodes, m)
    uniforms = np.random.default_rng(1).random(2 * m * n_nodes + 64)

    def run(fill):
        eu = np.empty(m_edges, np.int64)
        ev = np.empty(m_edges, np.int64)
        assert fill(eu, ev, uniforms, n_nodes, m) >= 0

    t_py = best_of(repeats, run, _kernels.pa_fill_py)
    t_nb = (
        best_of(repeats, run, _kernels.pa_fill_nb)
        if _kernels.pa_fill_nb is not None
        else float("nan")
    )
    return m_edges, t_py, t_nb


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="10000,100000,1000000")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels.kruskal_accept_nb is None:
        print("numba unavailable: timing the fallback only\n")
    else:  # trigger JIT compilation outside the timed region
        bench_kruskal_sweep(100, 1)
        bench_pa_growth(100, 2, 1)

    print(f"{'kernel':<16} {'size':>10} {'python (s)':>12} {'numba (s)':>12} {'speedup':>9}")
    for n in sizes:
        m_edges, t_py, t_nb = bench_kruskal_sweep(n, args.repeats)
        print(f"{'kruskal-sweep':<16} {m_edges:>10} {t_py:>12.4f} {t_nb:>12.4f} {t_py / t_nb:>8.1f}x")
    for n in sizes:
        m_edges, t_py, t_nb = bench_pa_growth(n, 2, args.repeats)
        print(f"{'pa-growth':<16} {m_edges:>10} {t_py:>12.4f} {t_nb:>12.4f} {t_py / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
