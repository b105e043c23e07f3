"""Tabulation of every counting quantity over integer ranges, with ASCII, CSV
and JSON renderings.

Tables follow the usual orientation: the last axis (n, or i for the
membership coefficients) runs along the columns.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from . import cycles, graphs, paths, sequences
from .paths import size_bound

ROUTES = ("auto", "closed", "weighted", "recurrence", "viaT", "convolution", "oracle")
FORMATS = ("ascii", "csv", "json")


class UsageError(ValueError):
    """A table request that cannot be evaluated as asked."""


Range = Tuple[int, int]


@lru_cache(maxsize=256)
def _census(family: str, n: int, h: int, limit: int) -> graphs.Census:
    g = graphs.build_graph(graphs.GraphSpec(family, n, h))
    return graphs.count_independent_by_size(g, limit)


@lru_cache(maxsize=256)
def _covers(family: str, n: int, h: int, limit: int) -> int:
    g = graphs.build_graph(graphs.GraphSpec(family, n, h))
    return graphs.build_hasse(graphs.enum_independent(g, limit), n).num_edges


PATH, CYCLE = graphs.GraphFamily.PATH.value, graphs.GraphFamily.CYCLE.value

# A cell function receives the coordinates (h, n, k, i as applicable) and the
# enumeration limit.
Cell = Callable[..., int]


@dataclass(frozen=True)
class Quantity:
    name: str
    rows: str
    cols: str
    fixed: Tuple[str, ...]
    routes: Dict[str, Cell]
    default_route: str
    default_cols: Optional[Range] = None
    default_rows: Optional[Range] = None

    def resolve_route(self, route: str) -> str:
        route = self.default_route if route == "auto" else route
        if route not in self.routes:
            valid = ", ".join(sorted(self.routes))
            raise UsageError(f"route {route!r} is not available for {self.name} (choose from: {valid})")
        return route


def _viat(h, n, **_):
    # the double sum is empty at n = 0
    return paths.h_edges_via_t(h, n) if n else 0


QUANTITIES: Dict[str, Quantity] = {q.name: q for q in [
    Quantity("p_nk", "k", "n", ("h",), {
        "closed": lambda h, n, k, **_: paths.p_count(h, n, k),
        "oracle": lambda h, n, k, limit: _census(PATH, n, h, limit).by_size.get(k, 0),
    }, "closed", (0, 14)),
    Quantity("p_total", "h", "n", (), {
        "closed": lambda h, n, **_: paths.p_total(h, n),
        "recurrence": lambda h, n, **_: paths.p_total_rec(h, n),
        "oracle": lambda h, n, limit, **_: _census(PATH, n, h, limit).total,
    }, "closed", (0, 14), (0, 10)),
    Quantity("T", "k", "i", ("h", "n"), {
        "closed": lambda h, n, k, i, **_: paths.t_coeff(h, n, k, i),
        "oracle": lambda h, n, k, i, limit: _census(PATH, n, h, limit).per_vertex(k, i),
    }, "closed"),
    Quantity("H", "h", "n", (), {
        "closed": lambda h, n, **_: paths.h_edges_weighted(h, n),
        "weighted": lambda h, n, **_: paths.h_edges_weighted(h, n),
        "viaT": _viat,
        "convolution": lambda h, n, **_: paths.h_edges_conv(h, n),
        "oracle": lambda h, n, limit, **_: _covers(PATH, n, h, limit),
    }, "weighted", (0, 11), (0, 10)),
    Quantity("q_nk", "k", "n", ("h",), {
        "closed": lambda h, n, k, **_: cycles.q_count(h, n, k),
        "oracle": lambda h, n, k, limit: _census(CYCLE, n, h, limit).by_size.get(k, 0),
    }, "closed", (0, 16)),
    Quantity("q_total", "h", "n", (), {
        "closed": lambda h, n, **_: cycles.q_total(h, n),
        "recurrence": lambda h, n, **_: cycles.q_total_rec(h, n),
        "oracle": lambda h, n, limit, **_: _census(CYCLE, n, h, limit).total,
    }, "closed", (0, 17), (0, 10)),
    Quantity("M", "h", "n", (), {
        "weighted": lambda h, n, **_: cycles.m_edges_weighted(h, n),
        "closed": lambda h, n, **_: cycles.m_edges_closed(h, n, extended=True),
        "convolution": lambda h, n, **_: cycles.m_edges_conjecture(h, n, extended=True),
        "oracle": lambda h, n, limit, **_: _covers(CYCLE, n, h, limit),
    }, "weighted", (0, 15), (0, 10)),
    Quantity("hFib", "h", "n", (), {
        "recurrence": lambda h, n, **_: sequences.h_fibonacci(h, n),
    }, "recurrence", (1, 13), (0, 10)),
    Quantity("hLucas", "h", "n", (), {
        "recurrence": lambda h, n, **_: sequences.h_lucas(h, n),
    }, "recurrence", (1, 15), (0, 10)),
    Quantity("conjectureM", "h", "n", (), {
        "convolution": lambda h, n, **_: cycles.m_edges_conjecture(h, n, extended=True),
    }, "convolution", (0, 15), (0, 10)),
]}


@dataclass
class TableRequest:
    quantity: str
    route: str = "auto"
    h: Optional[Range] = None
    n: Optional[Range] = None
    k: Optional[Range] = None
    i: Optional[Range] = None
    format: str = "ascii"
    limit: int = graphs.DEFAULT_LIMIT


@dataclass
class Table:
    quantity: str
    route: str
    row_axis: str
    col_axis: str
    fixed: Dict[str, int]
    rows: List[int]
    cols: List[int]
    values: List[List[int]] = field(repr=False)


def _span(r: Range) -> List[int]:
    lo, hi = r
    if hi < lo:
        raise UsageError(f"empty range {lo}..{hi}")
    return list(range(lo, hi + 1))


def _single(req: TableRequest, axis: str) -> int:
    r = getattr(req, axis)
    if r is None:
        raise UsageError(f"{req.quantity} needs --{axis}")
    if r[0] != r[1]:
        raise UsageError(f"{req.quantity} needs a single --{axis} value, got {r[0]}..{r[1]}")
    return r[0]


def build_table(req: TableRequest) -> Table:
    try:
        q = QUANTITIES[req.quantity]
    except KeyError:
        raise UsageError(f"unknown quantity {req.quantity!r}; choose from {', '.join(QUANTITIES)}") from None
    if req.format not in FORMATS:
        raise UsageError(f"unknown format {req.format!r}")
    route = q.resolve_route(req.route)
    fixed = {axis: _single(req, axis) for axis in q.fixed}

    if q.name == "T":
        h, n = fixed["h"], fixed["n"]
        cols = _span(req.i or (1, n))
        if n < 1 or cols[0] < 1 or cols[-1] > n:
            raise UsageError(f"vertex index range must lie in 1..{n}")
        rows = _span(req.k or (0, size_bound(h, n)))
    elif q.rows == "k":
        h = fixed["h"]
        cols = _span(req.n or q.default_cols)
        rows = _span(req.k or (0, size_bound(h, cols[-1])))
    else:
        cols = _span(req.n or q.default_cols)
        rows = _span(req.h or q.default_rows)

    for axis, values in ((q.rows, rows), (q.cols, cols)):
        if values[0] < 0:
            raise UsageError(f"--{axis} must be nonnegative")
    if q.name in ("hFib", "hLucas") and cols[0] < 1:
        raise UsageError("sequences are 1-indexed; use --n starting at 1")

    cell = q.routes[route]
    values = []
    for r in rows:
        line = []
        for c in cols:
            coords = dict(fixed)
            coords[q.rows] = r
            coords[q.cols] = c
            line.append(cell(limit=req.limit, **coords))
        values.append(line)
    return Table(q.name, route, q.rows, q.cols, fixed, rows, cols, values)


def _title(t: Table) -> str:
    extra = " ".join(f"{k}={v}" for k, v in t.fixed.items())
    return f"{t.quantity} [{t.route}]" + (f" {extra}" if extra else "")


def to_ascii(t: Table) -> str:
    header = [""] + [f"{t.col_axis}={c}" if j == 0 else str(c) for j, c in enumerate(t.cols)]
    body = [[f"{t.row_axis}={r}" if j == 0 else str(r)] + [str(v) for v in vals]
            for j, (r, vals) in enumerate(zip(t.rows, t.values))]
    grid = [header] + body
    widths = [max(len(row[c]) for row in grid) for c in range(len(header))]
    lines = [_title(t)]
    for row in grid:
        first = row[0].ljust(widths[0])
        rest = [cell.rjust(w) for cell, w in zip(row[1:], widths[1:])]
        lines.append("  ".join([first] + rest).rstrip())
    return "\n".join(lines) + "\n"


def to_csv(t: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"{t.row_axis}\\{t.col_axis}"] + t.cols)
    for r, vals in zip(t.rows, t.values):
        w.writerow([f"{t.row_axis}={r}"] + [str(v) for v in vals])
    return buf.getvalue()


def to_json(t: Table) -> str:
    payload = {
        "quantity": t.quantity,
        "route": t.route,
        "fixed": t.fixed,
        "columns": [f"{t.col_axis}={c}" for c in t.cols],
        "rows": [
            {"label": f"{t.row_axis}={r}", "values": [str(v) for v in vals]}
            for r, vals in zip(t.rows, t.values)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def render(t: Table, fmt: str) -> str:
    return {"ascii": to_ascii, "csv": to_csv, "json": to_json}[fmt](t)
