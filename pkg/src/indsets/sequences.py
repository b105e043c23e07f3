"""Exact integer primitives: zero-extended binomials, h-Fibonacci and h-Lucas
sequences, and the discrete convolution of two such sequences.

All values are Python ints, so nothing wraps at machine-word width.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

__all__ = [
    "Family",
    "SequenceSpec",
    "binom",
    "h_fibonacci",
    "h_lucas",
    "term",
    "convolve",
]


class Family(str, Enum):
    H_FIBONACCI = "hFibonacci"
    H_LUCAS = "hLucas"


@dataclass(frozen=True)
class SequenceSpec:
    """A one-parameter, 1-indexed integer sequence: F^(h) or L^(h)."""

    family: Family
    h: int

    def __post_init__(self) -> None:
        if self.h < 0:
            raise ValueError(f"h must be nonnegative, got {self.h}")
        object.__setattr__(self, "family", Family(self.family))

    def __getitem__(self, n: int) -> int:
        return term(self, n)


def binom(a: int, b: int) -> int:
    """C(a, b) for 0 <= b <= a, and 0 otherwise (including every a < 0)."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


# Terms are cached per (family, h) as a growing list; index 0 holds term 1.
_cache: Dict[Tuple[Family, int], List[int]] = {}
_lock = threading.Lock()


def _initial(family: Family, h: int) -> List[int]:
    head = [1] * (h + 1)
    if family is Family.H_LUCAS:
        head[0] = h + 1
    return head


def _extend(family: Family, h: int, n: int) -> int:
    with _lock:
        terms = _cache.get((family, h))
        if terms is None:
            terms = _initial(family, h)
            _cache[(family, h)] = terms
        # F_m = F_{m-1} + F_{m-h-1} for m > h + 1, i.e. list index j = m - 1.
        while len(terms) < n:
            m = len(terms) + 1
            terms.append(terms[m - 2] + terms[m - h - 2])
        return terms[n - 1]


def _check_index(h: int, n: int) -> None:
    if h < 0:
        raise ValueError(f"h must be nonnegative, got {h}")
    if n < 1:
        raise ValueError(f"sequences are 1-indexed, got n={n}")


def h_fibonacci(h: int, n: int) -> int:
    """F_n^(h): 1 for n <= h+1, else F_{n-1} + F_{n-h-1}."""
    _check_index(h, n)
    return _extend(Family.H_FIBONACCI, h, n)


def h_lucas(h: int, n: int) -> int:
    """L_n^(h): h+1 at n = 1, 1 for 2 <= n <= h+1, else L_{n-1} + L_{n-h-1}."""
    _check_index(h, n)
    return _extend(Family.H_LUCAS, h, n)


def term(seq: SequenceSpec, n: int) -> int:
    if seq.family is Family.H_FIBONACCI:
        return h_fibonacci(seq.h, n)
    return h_lucas(seq.h, n)


def convolve(a: SequenceSpec, b: SequenceSpec, n: int) -> int:
    """(a * b)(n) = sum_{i=1..n} a_i b_{n-i+1}; the empty sum at n = 0 is 0."""
    if n < 0:
        raise ValueError(f"convolution index must be nonnegative, got {n}")
    return sum(term(a, i) * term(b, n - i + 1) for i in range(1, n + 1))
