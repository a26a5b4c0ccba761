"""Benchmark the compiled kernel against the pure-Python fallback.

Times the operations that dominate the Cayley-graph oracle: generator
application plus canonical keying over a breadth-first enumeration, and
batch word-length evaluation.  Run from a checkout with the package
installed; pass a radius (default 8).

    python benchmarks/bench_kernel.py [radius]
"""

from __future__ import annotations

import sys
import time

from thompson_f import _kernel_py

try:
    from thompson_f import _kernel_c
except ImportError:
    _kernel_c = None


def bfs(impl, radius: int) -> tuple[int, float]:
    t0 = time.perf_counter()
    seen = {impl.key(impl.IDENTITY)}
    frontier = [impl.IDENTITY]
    for _ in range(radius):
        nxt = []
        for enc in frontier:
            for g in range(4):
                nb = impl.apply_generator(enc, g)
                k = impl.key(nb)
                if k not in seen:
                    seen.add(k)
                    nxt.append(nb)
        frontier = sorted(nxt)
    return len(seen), time.perf_counter() - t0


def length_sweep(impl, encs) -> float:
    t0 = time.perf_counter()
    total = 0
    for enc in encs:
        total += impl.fordham(enc)
    elapsed = time.perf_counter() - t0
    return elapsed, total


def main() -> None:
    radius = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    impls = [("python", _kernel_py)]
    if _kernel_c is not None:
        impls.append(("cython", _kernel_c))
    else:
        print("compiled kernel not available; benchmarking the fallback only")

    results = {}
    for name, impl in impls:
        count, elapsed = bfs(impl, radius)
        results[name] = (count, elapsed)
        print(f"{name:>7}: ball({radius}) = {count} elements in {elapsed:.2f}s")

    # batch length evaluation over a ball two radii smaller
    sample_impl = impls[-1][1]
    seen = {sample_impl.key(sample_impl.IDENTITY): sample_impl.IDENTITY}
    frontier = [sample_impl.IDENTITY]
    for _ in range(max(radius - 2, 4)):
        nxt = []
        for enc in frontier:
            for g in range(4):
                nb = sample_impl.apply_generator(enc, g)
                k = sample_impl.key(nb)
                if k not in seen:
                    seen[k] = nb
                    nxt.append(nb)
        frontier = nxt
    encs = list(seen.values())
    for name, impl in impls:
        elapsed, total = length_sweep(impl, encs)
        print(f"{name:>7}: {len(encs)} word lengths in {elapsed:.3f}s (sum {total})")

    if len(results) == 2:
        py_n, py_t = results["python"]
        cy_n, cy_t = results["cython"]
        assert py_n == cy_n, "kernels disagree on ball size"
        print(f"speedup: {py_t / cy_t:.1f}x on the BFS workload")


if __name__ == "__main__":
    main()
