"""Counting independent subsets of powers of cycles and the edges of their
Hasse diagrams, plus a scan of the conjectured Fibonacci/Lucas convolution.
"""
from __future__ import annotations

from functools import lru_cache

from .paths import size_bound
from .report import VerificationReport
from .sequences import Family, SequenceSpec, binom, convolve, h_fibonacci

__all__ = [
    "q_count",
    "q_total",
    "q_total_rec",
    "m_edges_weighted",
    "m_edges_closed",
    "m_edges_conjecture",
    "conjecture_scan",
]


def _nonneg(**kw: int) -> None:
    for name, value in kw.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


@lru_cache(maxsize=None)
def q_count(h: int, n: int, k: int) -> int:
    """Number of independent k-subsets of Q_n^(h).

    For k > 1 this is n/k * C(n - hk - 1, k - 1), evaluated as an exact
    integer division of the product.
    """
    _nonneg(h=h, n=n, k=k)
    if k == 0:
        return 1
    if k == 1:
        return n
    num = n * binom(n - h * k - 1, k - 1)
    q, rem = divmod(num, k)
    if rem:
        raise ArithmeticError(f"q_count({h}, {n}, {k}): {num} is not divisible by {k}")
    return q


def q_total(h: int, n: int) -> int:
    _nonneg(h=h, n=n)
    return sum(q_count(h, n, k) for k in range(size_bound(h, n) + 1))


def q_total_rec(h: int, n: int) -> int:
    """q_n^(h) from q_n = q_{n-1} + q_{n-h-1}, base n+1 for n <= 2h+1."""
    _nonneg(h=h, n=n)
    if n <= 2 * h + 1:
        return n + 1
    vals = list(range(1, 2 * h + 3))  # q_0 .. q_{2h+1}
    for m in range(2 * h + 2, n + 1):
        vals.append(vals[m - 1] + vals[m - h - 1])
    return vals[n]


def m_edges_weighted(h: int, n: int) -> int:
    _nonneg(h=h, n=n)
    return sum(k * q_count(h, n, k) for k in range(1, size_bound(h, n) + 1))


def m_edges_closed(h: int, n: int, *, extended: bool = False) -> int:
    """n * F_{n-h}^(h), valid for n > h >= 0.

    With ``extended`` the cells n <= h are filled the way the tabulated
    formula does, by treating the out-of-range sequence term as 1; this gives
    n, which is also the true edge count there.
    """
    _nonneg(h=h, n=n)
    if n <= h:
        if extended:
            return n
        raise ValueError(f"closed form needs n > h, got n={n}, h={h}")
    return n * h_fibonacci(h, n - h)


def m_edges_conjecture(h: int, n: int, *, extended: bool = False) -> int:
    """(F^(h) * L^(h))(n - h), conjectured to equal the edge count for n > h.

    With ``extended`` the cells n <= h give the empty convolution, 0.
    """
    _nonneg(h=h, n=n)
    if n <= h:
        if extended:
            return 0
        raise ValueError(f"the convolution identity is stated for n > h, got n={n}, h={h}")
    return convolve(SequenceSpec(Family.H_FIBONACCI, h), SequenceSpec(Family.H_LUCAS, h), n - h)


def conjecture_scan(h_max: int, n_max: int, *, include_boundary: bool = False,
                    h_min: int = 0, n_min: int = 0) -> VerificationReport:
    """Compare the three edge-count routes on every cell h_min <= h <= h_max,
    max(h + 1, n_min) <= n <= n_max.

    Disagreements are collected, not raised. With ``include_boundary`` the
    n = h cells are evaluated too and any mismatch there is kept as a note.
    """
    _nonneg(h_max=h_max, n_max=n_max, h_min=h_min, n_min=n_min)
    report = VerificationReport("conjecture")
    boundary = 0
    for h in range(h_min, h_max + 1):
        if include_boundary and n_min <= h <= n_max:
            boundary += 1
            weighted = m_edges_weighted(h, h)
            conj = m_edges_conjecture(h, h, extended=True)
            if weighted != conj:
                report.note({"h": h, "n": h}, {"weighted": weighted, "conjecture": conj})
        for n in range(max(h + 1, n_min), n_max + 1):
            report.check(
                {"h": h, "n": n},
                {
                    "weighted": m_edges_weighted(h, n),
                    "closed": m_edges_closed(h, n),
                    "conjecture": m_edges_conjecture(h, n),
                },
            )
    report.details["counterexamples"] = len(report.failures)
    if include_boundary:
        report.details["boundary_cells"] = boundary
    return report
