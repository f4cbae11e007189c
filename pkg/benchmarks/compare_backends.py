#!/usr/bin/env python3
"""Time the compiled kernel against the pure-Python fallback.

Both backends transcribe the same algorithms, so exact search results and
branch-and-bound node counts must agree; this script asserts that while
timing.  Run after an editable install:

    python3 benchmarks/compare_backends.py
"""

import random
import time

from redld._kernels import pybits

try:
    from redld._kernels import _ckern
except ImportError:
    _ckern = None

from redld.graph import Graph, build_hypercube
from redld.grids import (LatticeKind, PeriodicPattern, _near_pairs,
                         _tile_counts, _tiled_mask, build_torus)

MODE_REDLD = 1


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    # no isolated vertices, so a detector set exists
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for v in range(n):
        if deg[v] == 0:
            edges.append((v, (v + 1) % n))
    return Graph(n, edges)


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def bench_brute(backend):
    g = random_graph(18, 0.25, seed=7)
    ctx = backend.make_ctx([list(nbrs) for nbrs in g.adj])
    return backend.brute_force_min(ctx, MODE_REDLD)


def bench_bnb(backend):
    g = random_graph(26, 0.18, seed=3)
    ctx = backend.make_ctx([list(nbrs) for nbrs in g.adj])
    return backend.bnb(ctx, MODE_REDLD, 0, 0, g.n, 0, 0, 0.0)


def bench_q5(backend):
    g = build_hypercube(5)
    ctx = backend.make_ctx([list(nbrs) for nbrs in g.adj])
    return backend.bnb(ctx, MODE_REDLD, 0, 0, g.n, 0, 0, 0.0)


def bench_scan(backend):
    pat = PeriodicPattern(LatticeKind.SQ, 4, 4, frozenset([(0, 0)]))
    g, _ = build_torus(pat, *_tile_counts(pat, 8))
    ctx = backend.make_ctx([list(nbrs) for nbrs in g.adj])
    us, vs = _near_pairs(g)
    rng = random.Random(1)
    cells = [(x, y) for y in range(4) for x in range(4)]
    masks = [
        _tiled_mask(LatticeKind.SQ, 4, 4,
                    frozenset(rng.sample(cells, 7)) | {(0, 0)})
        for _ in range(4000)
    ]
    return backend.pairs_scan(ctx, us, vs, masks)


BENCHES = [
    ("brute force, random n=18", bench_brute),
    ("branch and bound, random n=26", bench_bnb),
    ("branch and bound, hypercube n=32", bench_q5),
    ("pair scan, 4000 torus masks", bench_scan),
]


def main():
    if _ckern is None:
        print("compiled kernel not built; only the pure backend will run")
    backends = [("py", pybits)] + ([("c", _ckern)] if _ckern else [])
    print(f"{'benchmark':34} " + " ".join(f"{name:>10}" for name, _ in backends)
          + ("    speedup" if _ckern else ""))
    for label, fn in BENCHES:
        results, times = [], []
        for _name, mod in backends:
            out, dt = timed(lambda m=mod: fn(m))
            results.append(out)
            times.append(dt)
        if len(results) == 2:
            assert results[0] == results[1], (
                f"{label}: backends disagree: {results[0]} vs {results[1]}"
            )
        row = f"{label:34} " + " ".join(f"{t * 1000:9.1f}ms" for t in times)
        if len(times) == 2:
            row += f"    x{times[0] / times[1]:.1f}"
        print(row)
    if _ckern:
        print("all outputs identical across backends (values, witnesses, node counts)")


if __name__ == "__main__":
    main()
