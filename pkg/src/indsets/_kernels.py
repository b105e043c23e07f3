"""Bitmask kernels behind the brute-force oracle.

Every kernel has a numba version and a pure-numpy version with identical
output. The numba one is used unless numba is missing or the environment
variable ``INDSETS_DISABLE_NUMBA`` is set to a non-empty value other than
"0".  Subsets are uint64 masks with vertex v_i at bit i-1.
"""
from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

U64 = np.uint64


# --------------------------------------------------------------------------
# numpy
# --------------------------------------------------------------------------

def _popcount_np(masks: np.ndarray, n: int) -> np.ndarray:
    sizes = np.zeros(masks.shape[0], dtype=np.int64)
    for v in range(n):
        sizes += ((masks >> U64(v)) & U64(1)).astype(np.int64)
    return sizes


def independent_masks_np(nbr: np.ndarray) -> np.ndarray:
    n = nbr.shape[0]
    masks = np.arange(1 << n, dtype=U64)
    ok = np.ones(masks.shape[0], dtype=bool)
    for v in range(n):
        member = ((masks >> U64(v)) & U64(1)).astype(bool)
        ok &= ~(member & ((masks & nbr[v]) != 0))
    return masks[ok]


def census_np(masks: np.ndarray, n: int):
    sizes = _popcount_np(masks, n)
    by_size = np.bincount(sizes, minlength=n + 1).astype(np.int64)
    by_vertex = np.zeros((n + 1, n), dtype=np.int64)
    for v in range(n):
        member = ((masks >> U64(v)) & U64(1)).astype(bool)
        by_vertex[:, v] = np.bincount(sizes[member], minlength=n + 1)[: n + 1]
    return by_size, by_vertex


def _present_np(sorted_masks: np.ndarray, probe: np.ndarray) -> np.ndarray:
    if sorted_masks.shape[0] == 0:
        return np.zeros(probe.shape[0], dtype=bool)
    idx = np.searchsorted(sorted_masks, probe)
    idx = np.minimum(idx, sorted_masks.shape[0] - 1)
    return sorted_masks[idx] == probe


def cover_pairs_np(masks: np.ndarray, n: int):
    """(pairs, closed): pairs sorted by (upper, lower); closed is False when
    some one-element removal leaves the family."""
    lowers, uppers = [], []
    closed = True
    for v in range(n):
        bit = U64(1) << U64(v)
        upper = masks[(masks & bit) != 0]
        lower = upper ^ bit
        present = _present_np(masks, lower)
        if not present.all():
            closed = False
        lowers.append(lower[present])
        uppers.append(upper[present])
    if not lowers:
        return np.zeros((0, 2), dtype=U64), closed
    lo = np.concatenate(lowers)
    up = np.concatenate(uppers)
    order = np.lexsort((lo, up))
    return np.stack([lo[order], up[order]], axis=1), closed


def hamming_pairs_np(codes: np.ndarray, n: int) -> np.ndarray:
    """Pairs (a, b) of present codes with b = a plus one bit, sorted by (a, b)."""
    ls, us = [], []
    for v in range(n):
        bit = U64(1) << U64(v)
        lo = codes[(codes & bit) == 0]
        up = lo | bit
        present = _present_np(codes, up)
        ls.append(lo[present])
        us.append(up[present])
    if not ls:
        return np.zeros((0, 2), dtype=U64)
    lo = np.concatenate(ls)
    up = np.concatenate(us)
    order = np.lexsort((up, lo))
    return np.stack([lo[order], up[order]], axis=1)


# --------------------------------------------------------------------------
# numba
# --------------------------------------------------------------------------

def _build_numba():
    from numba import njit

    @njit(cache=True)
    def _is_independent(mask, nbr, n):
        for v in range(n):
            if (mask >> np.uint64(v)) & np.uint64(1):
                if mask & nbr[v]:
                    return False
        return True

    @njit(cache=True)
    def independent_masks(nbr):
        n = nbr.shape[0]
        total = np.uint64(1) << np.uint64(n)
        count = 0
        m = np.uint64(0)
        while m < total:
            if _is_independent(m, nbr, n):
                count += 1
            m += np.uint64(1)
        out = np.empty(count, dtype=np.uint64)
        j = 0
        m = np.uint64(0)
        while m < total:
            if _is_independent(m, nbr, n):
                out[j] = m
                j += 1
            m += np.uint64(1)
        return out

    @njit(cache=True)
    def census(masks, n):
        by_size = np.zeros(n + 1, dtype=np.int64)
        by_vertex = np.zeros((n + 1, n), dtype=np.int64)
        for j in range(masks.shape[0]):
            m = masks[j]
            k = 0
            for v in range(n):
                if (m >> np.uint64(v)) & np.uint64(1):
                    k += 1
            by_size[k] += 1
            for v in range(n):
                if (m >> np.uint64(v)) & np.uint64(1):
                    by_vertex[k, v] += 1
        return by_size, by_vertex

    @njit(cache=True)
    def _find(sorted_masks, x):
        lo = 0
        hi = sorted_masks.shape[0]
        while lo < hi:
            mid = (lo + hi) // 2
            if sorted_masks[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        return lo < sorted_masks.shape[0] and sorted_masks[lo] == x

    @njit(cache=True)
    def cover_pairs(masks, n):
        total = 0
        for j in range(masks.shape[0]):
            for v in range(n):
                if (masks[j] >> np.uint64(v)) & np.uint64(1):
                    total += 1
        out = np.empty((total, 2), dtype=np.uint64)
        closed = True
        t = 0
        for j in range(masks.shape[0]):
            up = masks[j]
            # descending v gives ascending lower for a fixed upper
            for v in range(n - 1, -1, -1):
                bit = np.uint64(1) << np.uint64(v)
                if up & bit:
                    lo = up ^ bit
                    if _find(masks, lo):
                        out[t, 0] = lo
                        out[t, 1] = up
                        t += 1
                    else:
                        closed = False
        return out[:t], closed

    @njit(cache=True)
    def hamming_pairs(codes, n):
        total = 0
        for j in range(codes.shape[0]):
            for v in range(n):
                bit = np.uint64(1) << np.uint64(v)
                if (codes[j] & bit) == 0 and _find(codes, codes[j] | bit):
                    total += 1
        out = np.empty((total, 2), dtype=np.uint64)
        t = 0
        for j in range(codes.shape[0]):
            for v in range(n):
                bit = np.uint64(1) << np.uint64(v)
                if (codes[j] & bit) == 0 and _find(codes, codes[j] | bit):
                    out[t, 0] = codes[j]
                    out[t, 1] = codes[j] | bit
                    t += 1
        return out

    return SimpleNamespace(
        name="numba",
        independent_masks=independent_masks,
        census=census,
        cover_pairs=cover_pairs,
        hamming_pairs=hamming_pairs,
    )


numpy_impl = SimpleNamespace(
    name="numpy",
    independent_masks=independent_masks_np,
    census=census_np,
    cover_pairs=cover_pairs_np,
    hamming_pairs=hamming_pairs_np,
)


def _numba_disabled() -> bool:
    flag = os.environ.get("INDSETS_DISABLE_NUMBA", "")
    return flag not in ("", "0")


try:
    numba_impl = _build_numba()
except ImportError:  # pragma: no cover
    numba_impl = None

active = numpy_impl if (numba_impl is None or _numba_disabled()) else numba_impl
BACKEND = active.name


def _pair_array(pairs: np.ndarray) -> np.ndarray:
    return pairs.reshape(-1, 2).astype(U64, copy=False)


def independent_masks(nbr: np.ndarray) -> np.ndarray:
    return active.independent_masks(np.ascontiguousarray(nbr, dtype=U64))


def census(masks: np.ndarray, n: int):
    return active.census(np.ascontiguousarray(masks, dtype=U64), n)


def cover_pairs(masks: np.ndarray, n: int):
    pairs, closed = active.cover_pairs(np.ascontiguousarray(masks, dtype=U64), n)
    return _pair_array(pairs), bool(closed)


def hamming_pairs(codes: np.ndarray, n: int) -> np.ndarray:
    return _pair_array(active.hamming_pairs(np.ascontiguousarray(codes, dtype=U64), n))
