"""Bundled regression data: avoidance-class sizes for the two reference tables.

Table 1 covers the three doubleton classes of totally vincular length-3
patterns with nonzero growth (n = 1..13). Table 2 covers the eight classes of
length-4 patterns with a single bond (n = 1..12). The `check_table` entry
point recomputes counts with the enumerator and diffs them cell by cell.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

from .enumeration import count_avoiders
from .patterns import PatternSet

TABLE_DEFAULT_N_MAX = 10
TABLE_EXTENDED_N_MAX = {1: 13, 2: 12}


def expected_counts(table: int) -> dict[str, dict[int, int]]:
    """label -> {n: count} for the requested table (1 or 2)."""
    if table not in (1, 2):
        raise ValueError("table must be 1 or 2")
    out: dict[str, dict[int, int]] = {}
    data = resources.files("cycvin.data").joinpath("tables.csv").read_text()
    for row in csv.DictReader(data.splitlines()):
        if int(row["table"]) != table:
            continue
        out.setdefault(row["patterns"], {})[int(row["n"])] = int(row["count"])
    return out


@dataclass
class TableCell:
    patterns: str
    n: int
    expected: int
    computed: int

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


@dataclass
class TableCheck:
    table: int
    n_max: int
    cells: list[TableCell]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cells)

    @property
    def mismatches(self) -> list[TableCell]:
        return [c for c in self.cells if not c.ok]


def check_table(table: int, n_max: int = TABLE_DEFAULT_N_MAX, *, jobs: int = 1,
                budget: int | None = None) -> TableCheck:
    """Recompute a table with the enumerator and diff against the bundled data."""
    expected = expected_counts(table)
    cap = TABLE_EXTENDED_N_MAX[table]
    if not 1 <= n_max <= cap:
        raise ValueError(f"table {table} data covers 1 <= n <= {cap}")
    cells = []
    for label in sorted(expected):
        pset = PatternSet.from_texts(*label.split())
        for n in range(1, n_max + 1):
            got = count_avoiders(pset, n, jobs=jobs, budget=budget)
            cells.append(TableCell(label, n, expected[label][n], got))
    return TableCheck(table=table, n_max=n_max, cells=cells)
