"""Counting independent subsets of powers of paths, and the edges of their
inclusion-order Hasse diagrams.

The edge count is available through three unrelated routes (weighted binomial
sum, the vertex-membership coefficients, and the h-Fibonacci self-convolution)
so that each can be checked against the others.
"""
from __future__ import annotations

from functools import lru_cache

from .sequences import Family, SequenceSpec, binom, convolve

__all__ = [
    "size_bound",
    "p_count",
    "p_total",
    "p_total_rec",
    "pbar_count",
    "pbar_total",
    "t_coeff",
    "h_edges_weighted",
    "h_edges_via_t",
    "h_edges_conv",
]


def _nonneg(**kw: int) -> None:
    for name, value in kw.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def size_bound(h: int, n: int) -> int:
    """Upper summation limit ceil(n / (h+1)) used by every size sum."""
    return -(-n // (h + 1))


@lru_cache(maxsize=None)
def p_count(h: int, n: int, k: int) -> int:
    """Number of independent k-subsets of P_n^(h): C(n - hk + h, k)."""
    _nonneg(h=h, n=n, k=k)
    return binom(n - h * k + h, k)


def p_total(h: int, n: int) -> int:
    _nonneg(h=h, n=n)
    return sum(p_count(h, n, k) for k in range(size_bound(h, n) + 1))


def p_total_rec(h: int, n: int) -> int:
    """p_n^(h) from the recurrence p_n = p_{n-1} + p_{n-h-1}, base n+1 for n <= h+1."""
    _nonneg(h=h, n=n)
    if n <= h + 1:
        return n + 1
    vals = list(range(1, h + 3))  # p_0 .. p_{h+1}
    for m in range(h + 2, n + 1):
        vals.append(vals[m - 1] + vals[m - h - 1])
    return vals[n]


def pbar_count(h: int, n: int, k: int) -> int:
    """p_count with every negative n clamped to 0."""
    return p_count(h, max(n, 0), k)


def pbar_total(h: int, n: int) -> int:
    return 1 if n < 0 else p_total(h, n)


def t_coeff(h: int, n: int, k: int, i: int) -> int:
    """Number of independent k-subsets of P_n^(h) that contain vertex v_i.

    Removing the closed h-neighbourhood of v_i splits the path into a left
    part of i-h-1 vertices and a right part of n-i-h vertices, and the other
    k-1 members are distributed between them.
    """
    _nonneg(h=h, n=n, k=k)
    if not 1 <= i <= n:
        raise ValueError(f"vertex index i must satisfy 1 <= i <= {n}, got {i}")
    left, right = i - h - 1, n - i - h
    return sum(pbar_count(h, left, r) * pbar_count(h, right, k - 1 - r) for r in range(k))


def h_edges_weighted(h: int, n: int) -> int:
    """Edges of the Hasse diagram: each k-subset covers exactly k subsets below it."""
    _nonneg(h=h, n=n)
    return sum(k * p_count(h, n, k) for k in range(1, size_bound(h, n) + 1))


def h_edges_via_t(h: int, n: int) -> int:
    _nonneg(h=h)
    if n < 1:
        raise ValueError(f"the membership route needs n >= 1, got {n}")
    return sum(
        t_coeff(h, n, k, i)
        for k in range(1, size_bound(h, n) + 1)
        for i in range(1, n + 1)
    )


def h_edges_conv(h: int, n: int) -> int:
    _nonneg(h=h, n=n)
    fib = SequenceSpec(Family.H_FIBONACCI, h)
    return convolve(fib, fib, n)
