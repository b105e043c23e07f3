"""Compare the numba and numpy kernels on brute-force enumeration.

    python3 benchmarks/bench_kernels.py --n 16..22 --h 1 --repeat 3
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from indsets import _kernels
from indsets.cli import parse_range
from indsets.graphs import GraphSpec, build_graph


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(n: int, h: int, family: str, repeat: int):
    nbr = build_graph(GraphSpec(family, n, h)).neighbor_masks()
    rows = []
    results = {}
    for impl in (_kernels.numpy_impl, _kernels.numba_impl):
        if impl is None:
            continue
        t_enum, masks = _best(lambda: impl.independent_masks(nbr), repeat)
        t_census, _ = _best(lambda: impl.census(masks, n), repeat)
        t_cover, (pairs, _) = _best(lambda: impl.cover_pairs(masks, n), repeat)
        results[impl.name] = (masks, pairs.reshape(-1, 2))
        rows.append((impl.name, len(masks), t_enum, t_census, t_cover))
    if len(results) == 2:
        (ma, pa), (mb, pb) = results.values()
        assert np.array_equal(ma, mb) and np.array_equal(pa, pb), "backends disagree"
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--n", type=parse_range, default=(14, 20))
    ap.add_argument("--h", type=int, default=1)
    ap.add_argument("--family", choices=("pathPower", "cyclePower"), default="pathPower")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _kernels.numba_impl is not None:
        # compile outside the timed region
        bench(4, args.h, args.family, 1)
    print(f"{'n':>3} {'backend':>7} {'subsets':>9} {'enum s':>9} {'census s':>9} {'covers s':>9}")
    for n in range(args.n[0], args.n[1] + 1):
        for name, count, te, tc, tv in bench(n, args.h, args.family, args.repeat):
            print(f"{n:>3} {name:>7} {count:>9} {te:>9.4f} {tc:>9.4f} {tv:>9.4f}")


if __name__ == "__main__":
    main()
