"""Verification suites: every identity between the counting routes, plus the
brute-force oracle where enumeration is affordable."""
from __future__ import annotations

from . import cycles, graphs, paths
from .graphs import GraphFamily, GraphSpec
from .report import VerificationReport
from .sequences import binom, h_fibonacci

SUITES = ("path", "cycle", "cubes", "all")
ORACLE_N = 16


def classical_fibonacci(n: int) -> int:
    """F_1 = F_2 = 1, computed independently of the h-Fibonacci code."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def classical_lucas(n: int) -> int:
    """L_1 = 1, L_2 = 3, L_i = L_{i-1} + L_{i-2}."""
    a, b = 1, 3
    if n == 1:
        return a
    for _ in range(n - 2):
        a, b = b, a + b
    return b


def path_suite(h_max: int, n_max: int, *, oracle_n: int = ORACLE_N,
               limit: int = graphs.DEFAULT_LIMIT) -> VerificationReport:
    rep = VerificationReport("path")
    for h in range(h_max + 1):
        for n in range(n_max + 1):
            cell = {"h": h, "n": n}
            rep.check(cell, {"closed": paths.p_total(h, n), "recurrence": paths.p_total_rec(h, n)})
            routes = {"weighted": paths.h_edges_weighted(h, n), "convolution": paths.h_edges_conv(h, n)}
            if n >= 1:
                routes["viaT"] = paths.h_edges_via_t(h, n)
            rep.check(cell, routes)
            bound = paths.size_bound(h, n)
            rep.check(cell | {"k": bound + 1}, {"beyond_bound": paths.p_count(h, n, bound + 1), "zero": 0})
            for k in range(1, bound + 1):
                rowsum = sum(paths.t_coeff(h, n, k, i) for i in range(1, n + 1))
                rep.check(cell | {"k": k}, {"t_rowsum": rowsum, "k_times_p": k * paths.p_count(h, n, k)})
            if h >= 1:
                for k in range(n + 1):
                    rep.check(cell | {"k": k}, {"p": paths.p_count(h, n, k),
                                                "shifted": paths.p_count(h - 1, n - k + 1, k)})
        for i in range(1, n_max + h + 2):
            rep.check({"h": h, "i": i}, {"fibonacci": h_fibonacci(h, i),
                                         "pbar": paths.pbar_total(h, i - h - 1)})
    if h_max >= 1:
        for n in range(n_max + 1):
            rep.check({"h": 1, "n": n}, {"p_total": paths.p_total(1, n),
                                         "fib_n_plus_2": classical_fibonacci(n + 2)})
    _oracle(rep, GraphFamily.PATH, h_max, min(n_max, oracle_n), limit)
    return rep


def cycle_suite(h_max: int, n_max: int, *, oracle_n: int = ORACLE_N,
                limit: int = graphs.DEFAULT_LIMIT) -> VerificationReport:
    rep = VerificationReport("cycle")
    for h in range(h_max + 1):
        for n in range(n_max + 1):
            cell = {"h": h, "n": n}
            rep.check(cell, {"closed": cycles.q_total(h, n), "recurrence": cycles.q_total_rec(h, n)})
            if 1 <= n <= 2 * h + 1:
                rep.check(cell, {"q_total": cycles.q_total(h, n), "n_plus_1": n + 1})
                rep.check(cell, {"m_weighted": cycles.m_edges_weighted(h, n), "n": n})
            if n > h:
                rep.check(cell, {
                    "weighted": cycles.m_edges_weighted(h, n),
                    "closed": cycles.m_edges_closed(h, n),
                    "conjecture": cycles.m_edges_conjecture(h, n),
                })
            for k in range(2, paths.size_bound(h, n) + 2):
                rep.check(cell | {"k": k}, {"remainder": n * binom(n - h * k - 1, k - 1) % k, "zero": 0})
    if h_max >= 1:
        for n in range(2, n_max + 1):
            rep.check({"h": 1, "n": n}, {"q_total": cycles.q_total(1, n), "lucas": classical_lucas(n)})
            rep.check({"h": 1, "n": n}, {"m_weighted": cycles.m_edges_weighted(1, n),
                                         "n_fib": n * classical_fibonacci(n - 1)})
    _oracle(rep, GraphFamily.CYCLE, h_max, min(n_max, oracle_n), limit)
    return rep


def _oracle(rep: VerificationReport, family: GraphFamily, h_max: int, n_max: int, limit: int) -> None:
    """Compare enumeration against the formulas for every h <= h_max, n <= n_max."""
    if n_max > limit:
        raise graphs.CapacityError(n_max, limit)
    path = family is GraphFamily.PATH
    for h in range(h_max + 1):
        for n in range(n_max + 1):
            g = graphs.build_graph(GraphSpec(family, n, h))
            masks = graphs.enum_independent(g, limit)
            census = graphs.count_independent_by_size(g, limit)
            cell = {"h": h, "n": n}
            if path:
                total, edges = paths.p_total(h, n), paths.h_edges_weighted(h, n)
                count = paths.p_count
            else:
                total, edges = cycles.q_total(h, n), cycles.m_edges_weighted(h, n)
                count = cycles.q_count
            rep.check(cell, {"enumerated": len(masks), "formula": total})
            rep.check(cell, {"covers": graphs.build_hasse(masks, n).num_edges, "formula_edges": edges})
            for k in range(n + 1):
                rep.check(cell | {"k": k}, {"enumerated": census.by_size.get(k, 0), "formula": count(h, n, k)})
                if path and k >= 1:
                    for i in range(1, n + 1):
                        rep.check(cell | {"k": k, "i": i},
                                  {"enumerated": census.per_vertex(k, i), "formula": paths.t_coeff(h, n, k, i)})


def cubes_suite(n_max: int, *, limit: int = graphs.DEFAULT_LIMIT) -> VerificationReport:
    rep = VerificationReport("cubes")
    if n_max > limit:
        raise graphs.CapacityError(n_max, limit)
    for n in range(1, n_max + 1):
        rep.merge(graphs.check_cube_correspondence(n, "fibonacci", limit))
        fib = graphs.enum_fibonacci_strings(n, limit)
        rep.check({"n": n}, {"strings": len(fib), "fibonacci": h_fibonacci(1, n + 2)})
        # strings with k ones and b_i = 1 are counted by the membership coefficients
        for k in range(1, n + 1):
            for i in range(1, n + 1):
                hits = sum(1 for s in fib if s.count("1") == k and s[i - 1] == "1")
                rep.check({"n": n, "k": k, "i": i}, {"strings": hits, "t_coeff": paths.t_coeff(1, n, k, i)})
        if n <= 10:
            for a in fib:
                for b in fib:
                    if graphs.hamming(a, b) != graphs.hamming(b, a):
                        rep.fail({"n": n}, {"hamming_symmetric": 0, "expected": 1})
                if graphs.hamming(a, a):
                    rep.fail({"n": n}, {"hamming_self": graphs.hamming(a, a), "expected": 0})
        if n >= 2:
            rep.merge(graphs.check_cube_correspondence(n, "lucas", limit))
            rep.check({"n": n}, {"strings": len(graphs.enum_lucas_strings(n, limit)),
                                 "q_total": cycles.q_total(1, n)})
    rep.details = {}
    return rep


def run_suite(suite: str, h_max: int, n_max: int, *, oracle_n: int = ORACLE_N,
              limit: int = graphs.DEFAULT_LIMIT) -> VerificationReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if suite == "path":
        return path_suite(h_max, n_max, oracle_n=oracle_n, limit=limit)
    if suite == "cycle":
        return cycle_suite(h_max, n_max, oracle_n=oracle_n, limit=limit)
    if suite == "cubes":
        return cubes_suite(n_max, limit=limit)
    rep = VerificationReport("all")
    rep.merge(path_suite(h_max, n_max, oracle_n=oracle_n, limit=limit))
    rep.merge(cycle_suite(h_max, n_max, oracle_n=oracle_n, limit=limit))
    rep.merge(cubes_suite(min(n_max, oracle_n), limit=limit))
    rep.details = {}
    return rep
