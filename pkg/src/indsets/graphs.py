"""Explicit graphs and brute-force enumeration: the ground truth the counting
formulas are checked against.

Vertex subsets are uint64 bitmasks with vertex v_i at bit i-1; arrays of them
are always kept in ascending numeric order.  Binary strings are ``str`` of
'0'/'1' with b_1 first, so canonical string order is lexicographic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .report import VerificationReport

DEFAULT_LIMIT = 24
MAX_LIMIT = 63  # masks are uint64

__all__ = [
    "DEFAULT_LIMIT",
    "CapacityError",
    "ContractError",
    "GraphFamily",
    "GraphSpec",
    "Graph",
    "HasseDiagram",
    "Census",
    "build_graph",
    "enum_independent",
    "build_hasse",
    "enum_fibonacci_strings",
    "enum_lucas_strings",
    "hamming",
    "build_hamming_cube",
    "characteristic_string",
    "check_cube_correspondence",
    "count_independent_by_size",
    "members",
    "format_subset",
]


class CapacityError(Exception):
    """Raised when an enumeration would exceed the configured vertex limit."""

    def __init__(self, n: int, limit: int):
        super().__init__(f"enumeration over {n} positions exceeds the limit of {limit}")
        self.n = n
        self.limit = limit


class ContractError(ValueError):
    """An input violates a structural precondition (not downward-closed, mixed lengths)."""


def _require_capacity(n: int, limit: int) -> None:
    if limit > MAX_LIMIT:
        raise ValueError(f"limit cannot exceed {MAX_LIMIT}, got {limit}")
    if n > limit:
        raise CapacityError(n, limit)


class GraphFamily(str, Enum):
    PATH = "pathPower"
    CYCLE = "cyclePower"


@dataclass(frozen=True)
class GraphSpec:
    family: GraphFamily
    n: int
    h: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", GraphFamily(self.family))
        if self.n < 0 or self.h < 0:
            raise ValueError(f"n and h must be nonnegative, got n={self.n}, h={self.h}")


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple graph on vertices 1..n; ``edges`` is an (m, 2) array of
    1-indexed pairs u < v in lexicographic order."""

    n: int
    edges: np.ndarray
    labels: Optional[Tuple[str, ...]] = None

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def neighbor_masks(self) -> np.ndarray:
        if self.n > MAX_LIMIT:
            raise CapacityError(self.n, MAX_LIMIT)
        nbr = [0] * self.n
        for u, v in self.edges.tolist():
            nbr[u - 1] |= 1 << (v - 1)
            nbr[v - 1] |= 1 << (u - 1)
        return np.array(nbr, dtype=np.uint64)

    def edge_list_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges.tolist())


def _edge_array(pairs: Sequence[Tuple[int, int]]) -> np.ndarray:
    arr = np.array(sorted(pairs), dtype=np.int64)
    return arr.reshape(-1, 2)


def build_graph(spec: GraphSpec) -> Graph:
    n, h = spec.n, spec.h
    pairs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = j - i
            if d <= h or (spec.family is GraphFamily.CYCLE and d >= n - h):
                pairs.append((i, j))
    return Graph(n, _edge_array(pairs))


def members(mask: int) -> Tuple[int, ...]:
    mask = int(mask)
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def format_subset(mask: int) -> str:
    m = members(mask)
    if not m:
        return "∅"
    return "{" + ",".join(map(str, m)) + "}"


def enum_independent(g: Graph, limit: int = DEFAULT_LIMIT) -> np.ndarray:
    """All independent subsets of ``g`` as ascending uint64 bitmasks."""
    _require_capacity(g.n, limit)
    return _kernels.independent_masks(g.neighbor_masks())


@dataclass(frozen=True, eq=False)
class HasseDiagram:
    """Cover graph of a downward-closed family ordered by inclusion.

    ``covers`` rows are (lower, upper) masks sorted by (upper, lower).
    """

    n: int
    elements: np.ndarray
    covers: np.ndarray

    @property
    def num_edges(self) -> int:
        return int(self.covers.shape[0])


def build_hasse(family: np.ndarray | Sequence[int], n: Optional[int] = None) -> HasseDiagram:
    masks = np.unique(np.asarray(family, dtype=np.uint64))
    width = int(masks.max()).bit_length() if masks.size else 0
    if n is None:
        n = width
    elif width > n:
        raise ContractError(f"family uses bit {width} but n={n}")
    pairs, closed = _kernels.cover_pairs(masks, n)
    if not closed:
        raise ContractError("family is not downward-closed under inclusion")
    return HasseDiagram(n, masks, pairs)


def enum_fibonacci_strings(n: int, limit: int = DEFAULT_LIMIT) -> List[str]:
    """Binary strings of length n with no two consecutive 1s, in lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    _require_capacity(n, limit)
    out = [""]
    for _ in range(n):
        out = [s + c for s in out for c in "01" if not (c == "1" and s.endswith("1"))]
    return out


def enum_lucas_strings(n: int, limit: int = DEFAULT_LIMIT) -> List[str]:
    """Fibonacci strings of length n >= 2 that do not both start and end with 1."""
    if n < 2:
        raise ValueError(f"Lucas strings are defined here for n >= 2, got {n}")
    return [s for s in enum_fibonacci_strings(n, limit) if not (s[0] == "1" and s[-1] == "1")]


def hamming(a: str, b: str) -> int:
    if len(a) != len(b):
        raise ContractError("Hamming distance needs strings of equal length")
    return sum(x != y for x, y in zip(a, b))


def _string_codes(strings: Sequence[str]) -> Tuple[int, np.ndarray]:
    lengths = {len(s) for s in strings}
    if len(lengths) > 1:
        raise ContractError(f"strings of mixed lengths {sorted(lengths)}")
    width = lengths.pop() if lengths else 0
    if width > MAX_LIMIT:
        raise CapacityError(width, MAX_LIMIT)
    codes = np.array([int(s, 2) if s else 0 for s in strings], dtype=np.uint64)
    return width, codes


def build_hamming_cube(strings: Sequence[str]) -> Graph:
    """Graph on ``strings`` (vertex i is strings[i-1]) with edges at Hamming distance 1."""
    width, codes = _string_codes(strings)
    if len(set(codes.tolist())) != len(codes):
        raise ContractError("duplicate strings")
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    index = {int(c): i + 1 for i, c in enumerate(codes.tolist())}
    pairs = _kernels.hamming_pairs(sorted_codes, width)
    edges = [tuple(sorted((index[int(a)], index[int(b)]))) for a, b in pairs.tolist()]
    return Graph(len(strings), _edge_array(edges), labels=tuple(strings))


def characteristic_string(mask: int, n: int) -> str:
    """b_1 b_2 ... b_n with b_i = 1 iff v_i is in the subset."""
    mask = int(mask)
    return "".join("1" if (mask >> (i - 1)) & 1 else "0" for i in range(1, n + 1))


@dataclass(frozen=True)
class Census:
    """Independent subsets counted by size, and by (size, member vertex)."""

    n: int
    by_size: Dict[int, int]
    by_vertex: Dict[int, Tuple[int, ...]] = field(repr=False)

    def per_vertex(self, k: int, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex index must be in 1..{self.n}, got {i}")
        return self.by_vertex.get(k, (0,) * self.n)[i - 1]

    @property
    def total(self) -> int:
        return sum(self.by_size.values())


def count_independent_by_size(g: Graph, limit: int = DEFAULT_LIMIT) -> Census:
    masks = enum_independent(g, limit)
    by_size, by_vertex = _kernels.census(masks, g.n)
    sizes = {k: int(c) for k, c in enumerate(by_size.tolist()) if c}
    vertex = {k: tuple(int(x) for x in by_vertex[k]) for k in sizes}
    return Census(g.n, sizes, vertex)


def check_cube_correspondence(n: int, variant: str, limit: int = DEFAULT_LIMIT) -> VerificationReport:
    """Check that characteristic vectors map the independent-subset poset of
    P_n^(1) (fibonacci) or Q_n^(1) (lucas) onto the corresponding cube,
    vertices and edges alike."""
    if variant not in ("fibonacci", "lucas"):
        raise ValueError(f"variant must be 'fibonacci' or 'lucas', got {variant!r}")
    _require_capacity(n, limit)
    family = GraphFamily.PATH if variant == "fibonacci" else GraphFamily.CYCLE
    if variant == "fibonacci":
        strings = enum_fibonacci_strings(n, limit)
    else:
        strings = enum_lucas_strings(n, limit)

    masks = enum_independent(build_graph(GraphSpec(family, n, 1)), limit)
    hasse = build_hasse(masks, n)
    cube = build_hamming_cube(strings)

    report = VerificationReport(f"cube-{variant}")
    params = {"n": n}
    image = [characteristic_string(m, n) for m in masks.tolist()]
    image_set = set(image)
    report.check(params | {"part": 0}, {"subsets": len(masks), "strings": len(strings)})
    report.check(params | {"part": 1}, {"injective": len(image_set) == len(image), "expected": True})
    report.check(params | {"part": 2}, {"onto": image_set == set(strings), "expected": True})

    label = cube.labels or ()
    cube_edges = {frozenset((label[u - 1], label[v - 1])) for u, v in cube.edges.tolist()}
    hasse_edges = {
        frozenset((characteristic_string(a, n), characteristic_string(b, n)))
        for a, b in hasse.covers.tolist()
    }
    report.check(params | {"part": 3}, {"covers": hasse.num_edges, "cube_edges": cube.num_edges})
    missing = len(hasse_edges ^ cube_edges)
    report.check(params | {"part": 4}, {"edge_mismatches": missing, "expected": 0})

    report.details.update(
        vertices=len(strings),
        subsets=int(len(masks)),
        cube_edges=cube.num_edges,
        hasse_edges=hasse.num_edges,
        bijection=len(image_set) == len(image) == len(strings) and image_set == set(strings),
        edge_mismatches=missing,
    )
    return report

