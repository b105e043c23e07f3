import json
from collections import OrderedDict
from itertools import combinations

import pytest

from indsets import cli

# criterion id -> (title, list of (ok, detail))
ACCEPTANCE = OrderedDict()


def record(criterion: int, title: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE.setdefault(criterion, (title, []))[1].append((ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        title, results = ACCEPTANCE[crit]
        bad = [d for ok, d in results if not ok]
        status = "PASS" if not bad else "FAIL"
        terminalreporter.write_line(f"[{status}] {crit}. {title} ({len(results) - len(bad)}/{len(results)} checks)")
        for d in bad:
            terminalreporter.write_line(f"         - {d}")


def brute_independent(n, adjacent):
    """Independent subsets as sorted tuples, by exhaustive pair checks."""
    out = []
    for k in range(n + 1):
        for combo in combinations(range(1, n + 1), k):
            if all(not adjacent(a, b) for a, b in combinations(combo, 2)):
                out.append(combo)
    return out


def path_adjacent(h):
    return lambda i, j: abs(j - i) <= h


def cycle_adjacent(n, h):
    return lambda i, j: abs(j - i) <= h or abs(j - i) >= n - h


@pytest.fixture
def run_cli(capsys):
    def run(*argv):
        code = cli.main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


@pytest.fixture
def cli_table(run_cli):
    """Run ``table`` in JSON format and return ({row: {col: int}}, payload)."""

    def run(*argv):
        code, out, err = run_cli("table", *argv, "--format", "json")
        assert code == 0, err
        payload = json.loads(out)
        cols = [int(c.split("=")[1]) for c in payload["columns"]]
        grid = {}
        for row in payload["rows"]:
            grid[int(row["label"].split("=")[1])] = dict(zip(cols, (int(v) for v in row["values"])))
        return grid, payload

    return run
