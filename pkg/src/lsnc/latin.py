"""Partial Latin grids: verification, transforms, and completion machinery.

A grid is an M x M array over symbols 1..t with 0 marking empty cells.
Rows of a Latin (partial) grid never repeat a symbol, nor do columns; a
grid "removes" a fade state when every multi-cell constraint block of that
state's partition is filled with a single common symbol.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import TYPE_CHECKING, Hashable, Sequence

from lsnc.errors import CompletionError, SearchBudgetExceeded

if TYPE_CHECKING:
    from lsnc.constraint import ConstraintPartition
    from lsnc.coloring import Coloring

__all__ = [
    "Grid",
    "SdrResult",
    "from_coloring",
    "verify_latin",
    "verify_removes",
    "interchange_symbol_row",
    "complete_rows_hall",
    "find_sdr",
    "generic_complete",
    "transpose",
    "column_rotate",
    "xor_square",
    "candidate_cells",
    "default_budget",
]


def default_budget(fallback: int = 10_000_000) -> int:
    """Search node budget; the LSNC_BUDGET environment variable overrides."""
    raw = os.environ.get("LSNC_BUDGET")
    return int(raw) if raw else fallback


@dataclass(frozen=True)
class Grid:
    """Immutable M x M grid; 0 is an empty cell, symbols are 1-indexed."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.rows)
        for row in self.rows:
            if len(row) != m:
                raise ValueError("grid must be square")
            for v in row:
                if not isinstance(v, int) or v < 0:
                    raise ValueError(f"bad cell value {v!r}")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> Grid:
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def empty(cls, m: int) -> Grid:
        return cls(tuple((0,) * m for _ in range(m)))

    @property
    def m(self) -> int:
        return len(self.rows)

    def at(self, r: int, c: int) -> int:
        """Cell value at 1-indexed (row, column)."""
        return self.rows[r - 1][c - 1]

    def set(self, r: int, c: int, sym: int) -> Grid:
        """A copy with 1-indexed cell (r, c) set to sym."""
        rows = [list(row) for row in self.rows]
        rows[r - 1][c - 1] = sym
        return Grid.from_lists(rows)

    def symbols(self) -> set[int]:
        return {v for row in self.rows for v in row if v}

    @property
    def symbol_count(self) -> int:
        return len(self.symbols())

    def is_complete(self) -> bool:
        return all(all(row) for row in self.rows)

    def filled_cells(self) -> list[tuple[int, int]]:
        return [
            (r + 1, c + 1)
            for r, row in enumerate(self.rows)
            for c, v in enumerate(row)
            if v
        ]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def verify_latin(grid: Grid) -> bool:
    """Row/column exclusion among filled cells; empty grids pass."""
    for line in list(grid.rows) + [col for col in zip(*grid.rows)]:
        seen = [v for v in line if v]
        if len(seen) != len(set(seen)):
            return False
    return True


def verify_removes(grid: Grid, partition: ConstraintPartition) -> bool:
    """True when every multi-cell block is filled with one common symbol."""
    if grid.m != partition.m:
        return False
    for bi in partition.multi_indices:
        syms = {grid.at(r, c) for r, c in partition.blocks[bi]}
        if len(syms) != 1 or 0 in syms:
            return False
    return True


def from_coloring(partition: ConstraintPartition, coloring: Coloring) -> Grid:
    """Latin Square with block i filled by coloring color of vertex i.

    The coloring must cover every block of the partition; an improper
    coloring surfaces as a row/column violation.
    """
    if len(coloring.colors) != len(partition.blocks):
        raise ValueError(
            f"coloring covers {len(coloring.colors)} vertices, "
            f"partition has {len(partition.blocks)} blocks"
        )
    rows = [[0] * partition.m for _ in range(partition.m)]
    for i, block in enumerate(partition.blocks):
        for r, c in block:
            rows[r - 1][c - 1] = coloring.colors[i]
    grid = Grid.from_lists(rows)
    if not grid.is_complete() or not verify_latin(grid):
        raise ValueError("coloring is not a proper coloring of the removal graph")
    return grid


def transpose(grid: Grid) -> Grid:
    """Swap rows and columns; a removal map for s becomes one for 1/s."""
    return Grid(tuple(zip(*grid.rows)))


def column_rotate(grid: Grid, steps: int) -> Grid:
    """Cyclic column relabel: output column c shows input column c+steps.

    For M-PSK this turns a removal map for s into one for s*e^{j*2pi*steps/M}.
    """
    m = grid.m
    return Grid(tuple(tuple(row[(c + steps) % m] for c in range(m)) for row in grid.rows))


def xor_square(m: int) -> Grid:
    """The bitwise-XOR Latin Square: cell (a, b) = (a-1) xor (b-1), plus 1."""
    return Grid(tuple(tuple(((r ^ c) + 1) for c in range(m)) for r in range(m)))


def interchange_symbol_row(grid: Grid) -> Grid:
    """Exchange the roles of symbol and row: output (s, c) = r iff input (r, c) = s.

    Requires each symbol to appear at most once per column (true for any
    Latin grid with symbols <= M), and is an involution on complete Latin
    Squares.
    """
    m = grid.m
    rows = [[0] * m for _ in range(m)]
    for r in range(1, m + 1):
        for c in range(1, m + 1):
            s = grid.at(r, c)
            if not s:
                continue
            if s > m:
                raise ValueError(f"symbol {s} exceeds grid order {m}")
            if rows[s - 1][c - 1]:
                raise ValueError(f"symbol {s} repeats in column {c}")
            rows[s - 1][c - 1] = r
    return Grid.from_lists(rows)


def candidate_cells(grid: Grid, symbol: int) -> list[tuple[int, int]]:
    """Empty cells whose row and column are both free of `symbol`."""
    m = grid.m
    rows_with = {r + 1 for r, row in enumerate(grid.rows) if symbol in row}
    cols_with = {c + 1 for c in range(m) if any(grid.rows[r][c] == symbol for r in range(m))}
    return [
        (r, c)
        for r in range(1, m + 1)
        if r not in rows_with
        for c in range(1, m + 1)
        if c not in cols_with and not grid.at(r, c)
    ]


def _augment(u: int, nbrs: list[list[int]], match_r: dict[int, int], seen: set[int]) -> bool:
    # Kuhn's augmenting path step, deterministic by neighbor order.
    for v in nbrs[u]:
        if v in seen:
            continue
        seen.add(v)
        if v not in match_r or _augment(match_r[v], nbrs, match_r, seen):
            match_r[v] = u
            return True
    return False


def _max_matching(n_left: int, nbrs: list[list[int]]) -> dict[int, int]:
    """Right-element -> left-index matching via augmenting paths."""
    match_r: dict[int, int] = {}
    for u in range(n_left):
        _augment(u, nbrs, match_r, set())
    return match_r


@dataclass(frozen=True)
class SdrResult:
    """Either a full system of distinct representatives or a Hall violator."""

    representatives: tuple[Hashable, ...] | None
    violating: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        return self.representatives is not None


def find_sdr(family: Sequence[Sequence[Hashable]]) -> SdrResult:
    """Distinct representatives, one per set, or a subfamily violating
    Hall's condition (indices S with |union of S's sets| < |S|)."""
    elements: list[Hashable] = []
    index: dict[Hashable, int] = {}
    nbrs: list[list[int]] = []
    for s in family:
        row = []
        for x in s:
            if x not in index:
                index[x] = len(elements)
                elements.append(x)
            row.append(index[x])
        nbrs.append(sorted(set(row)))
    match_r = _max_matching(len(family), nbrs)
    match_l: dict[int, int] = {u: v for v, u in match_r.items()}
    if len(match_l) == len(family):
        reps = tuple(elements[match_l[u]] for u in range(len(family)))
        return SdrResult(representatives=reps, violating=None)
    # Alternating BFS from an unmatched set: the reachable sets overflow
    # their combined neighborhood.
    start = min(u for u in range(len(family)) if u not in match_l)
    reach_l = {start}
    reach_r: set[int] = set()
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in nbrs[u]:
                if v in reach_r:
                    continue
                reach_r.add(v)
                w = match_r.get(v)
                if w is not None and w not in reach_l:
                    reach_l.add(w)
                    nxt.append(w)
        frontier = nxt
    return SdrResult(representatives=None, violating=tuple(sorted(reach_l)))


def complete_rows_hall(grid: Grid) -> Grid:
    """Extend a Latin rectangle (r complete rows, other rows empty) to a
    full Latin Square on symbols 1..M, row by row via perfect matchings."""
    m = grid.m
    r = 0
    full = set(range(1, m + 1))
    while r < m and set(grid.rows[r]) == full:
        r += 1
    for i in range(r, m):
        if any(grid.rows[i]):
            raise ValueError(f"row {i + 1} is neither complete nor empty")
    if grid.symbols() - full:
        raise ValueError("rectangle must use symbols 1..M")
    rows = [list(row) for row in grid.rows]
    col_used: list[set[int]] = [{rows[i][c] for i in range(r)} for c in range(m)]
    for i in range(r, m):
        # columns on the left, candidate symbols on the right
        nbrs = [sorted(full - col_used[c]) for c in range(m)]
        sym_ids = [[s - 1 for s in row] for row in nbrs]
        match_r = _max_matching(m, sym_ids)
        if len(match_r) != m:
            raise CompletionError("row extension matching failed on a Latin rectangle")
        assign = {u: v + 1 for v, u in match_r.items()}
        for c in range(m):
            rows[i][c] = assign[c]
            col_used[c].add(assign[c])
    out = Grid.from_lists(rows)
    if not verify_latin(out):
        raise CompletionError("row extension produced a non-Latin grid")
    return out


def generic_complete(
    grid: Grid, max_symbols: int, node_budget: int | None = None
) -> Grid | None:
    """Backtracking completion of a partial Latin grid with symbols
    1..max_symbols.

    Returns the completed grid, or None when completion is impossible.
    Cell order is most-constrained-first; symbol order prefers the least
    used symbol (encouraging balanced squares), then the smallest index.
    Raises SearchBudgetExceeded when the node budget runs out undecided.
    """
    m = grid.m
    budget = default_budget() if node_budget is None else node_budget
    if max_symbols < m:
        return None  # a complete M x M Latin grid needs at least M symbols
    if not verify_latin(grid):
        raise ValueError("input grid violates row/column exclusion")
    rows = [list(row) for row in grid.rows]
    all_syms = range(1, max_symbols + 1)
    row_used = [set(row) - {0} for row in rows]
    col_used = [{rows[r][c] for r in range(m)} - {0} for c in range(m)]
    counts = {s: 0 for s in all_syms}
    for row in rows:
        for v in row:
            if v:
                counts[v] += 1
    empties = [(r, c) for r in range(m) for c in range(m) if not rows[r][c]]
    nodes = 0

    def solve() -> bool:
        nonlocal nodes
        if not empties:
            return True
        # most-constrained empty cell
        best_i, best_cands = -1, None
        for i, (r, c) in enumerate(empties):
            cands = [s for s in all_syms if s not in row_used[r] and s not in col_used[c]]
            if best_cands is None or len(cands) < len(best_cands):
                best_i, best_cands = i, cands
                if not cands:
                    return False
        r, c = empties.pop(best_i)
        for s in sorted(best_cands, key=lambda s: (counts[s], s)):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"completion budget {budget} exhausted")
            rows[r][c] = s
            row_used[r].add(s)
            col_used[c].add(s)
            counts[s] += 1
            if solve():
                return True
            rows[r][c] = 0
            row_used[r].remove(s)
            col_used[c].remove(s)
            counts[s] -= 1
        empties.insert(best_i, (r, c))
        return False

    if solve():
        return Grid.from_lists(rows)
    return None
