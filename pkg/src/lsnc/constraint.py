"""Singularity removal constraints: the partition of S x S by superposed value.

At a singular fade state s several (x_A, x_B) pairs produce the same
x_A + s*x_B.  Each group of colliding cells is a constraint block: a valid
relay map must give all of its cells one symbol.  Cells are (row, column)
pairs of 1-indexed labels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from lsnc._numeric import GaussianRational, cluster_complex
from lsnc.fade_state import FadeState, as_exact_ratio, psk_representative
from lsnc.latin import Grid
from lsnc.signal_set import SignalSet

__all__ = ["ConstraintPartition", "build_constraints", "constrained_pls", "psk_constraints_closed_form"]

Cell = tuple[int, int]


@dataclass(frozen=True)
class ConstraintPartition:
    """Blocks of cells sharing a superposed value, in deterministic order.

    build_constraints orders blocks by their (sorted) first cell; the PSK
    closed form keeps its own c_1, c_2, ... indexing, which downstream
    constructions rely on.  values[i] is the superposition for blocks[i]
    (NaN-free floats; closed-form partitions derive values lazily).
    """

    m: int
    fade_state: complex
    blocks: tuple[tuple[Cell, ...], ...]
    values: tuple[complex, ...] = field(repr=False, default=())

    @property
    def multi_indices(self) -> tuple[int, ...]:
        """Indices of blocks with at least two cells."""
        return tuple(i for i, b in enumerate(self.blocks) if len(b) >= 2)

    def multi_blocks(self) -> tuple[tuple[Cell, ...], ...]:
        return tuple(self.blocks[i] for i in self.multi_indices)

    def block_of(self, cell: Cell) -> int:
        for i, b in enumerate(self.blocks):
            if cell in b:
                return i
        raise KeyError(f"cell {cell} not in any block")


def build_constraints(s_set: SignalSet, s: complex | FadeState) -> ConstraintPartition:
    """Partition of S x S by the value of x_A + s*x_B.

    Uses exact Gaussian-rational arithmetic whenever the signal set lives on
    the integer grid and s denotes a small rational; floating-point
    clustering otherwise.
    """
    m = s_set.size
    cells = [(r, c) for r in range(1, m + 1) for c in range(1, m + 1)]
    g = as_exact_ratio(s) if s_set.exact_points is not None else None
    if g is not None:
        by_val: dict[tuple[Fraction, Fraction], list[Cell]] = {}
        vals: dict[tuple[Fraction, Fraction], complex] = {}
        for r, c in cells:
            v = s_set.exact_points[r - 1] + g * s_set.exact_points[c - 1]
            key = (v.re, v.im)
            by_val.setdefault(key, []).append((r, c))
            vals.setdefault(key, complex(v))
        raw = [(tuple(sorted(b)), vals[k]) for k, b in by_val.items()]
    else:
        sv = complex(s)
        supers = [s_set.points[r - 1] + sv * s_set.points[c - 1] for r, c in cells]
        groups = cluster_complex(supers)
        raw = [
            (tuple(sorted(cells[i] for i in grp)), supers[grp[0]])
            for grp in groups
        ]
    raw.sort(key=lambda bv: bv[0][0])
    return ConstraintPartition(
        m=m,
        fade_state=complex(s),
        blocks=tuple(b for b, _ in raw),
        values=tuple(v for _, v in raw),
    )


def constrained_pls(partition: ConstraintPartition) -> Grid:
    """The constrained partial Latin Square: multi-cell block i (in block
    order) is pre-filled with symbol i+1; singleton cells stay empty."""
    m = partition.m
    rows = [[0] * m for _ in range(m)]
    for sym, bi in enumerate(partition.multi_indices, 1):
        for r, c in partition.blocks[bi]:
            rows[r - 1][c - 1] = sym
    return Grid.from_lists(rows)


def psk_constraints_closed_form(m: int, k: int, l: int) -> ConstraintPartition:
    """Closed-form multi-cell constraints for the (k, l) representative of
    M-PSK, in their natural c_1, c_2, ... order.

    Same parity of k and l gives (for 0 <= i <= M-1, all mod M):
      c_{i+1}   = {(i+1, i-M/2-(k-l)/2 +1), (i-k+1, i+M/2-(k+l)/2 +1)}
      c_{M+i+1} = {(i+1, i-(k+l)/2 +1),     (i-k+1, i-(k-l)/2 +1)}
    and opposite parity substitutes k+1-l and k+1+l for k-l and k+l in the
    column offsets.  When k or l equals M/2 the two families coincide and
    only c_1..c_M are distinct.
    """
    if m < 8 or m & (m - 1):
        raise ValueError(f"closed form needs M a power of two >= 8, got {m}")
    if not (1 <= k <= m // 2 and 1 <= l <= m // 2) or k == l:
        raise ValueError(f"need 1 <= k,l <= M/2 and k != l, got ({k},{l})")
    half = m // 2
    if (k - l) % 2 == 0:
        d1, d2 = (k - l) // 2, (k + l) // 2
    else:
        d1, d2 = (k + 1 - l) // 2, (k + 1 + l) // 2

    def fam1(i: int) -> tuple[Cell, Cell]:
        return (
            (i + 1, (i - half - d1) % m + 1),
            ((i - k) % m + 1, (i + half - d2) % m + 1),
        )

    def fam2(i: int) -> tuple[Cell, Cell]:
        return (
            (i + 1, (i - d2) % m + 1),
            ((i - k) % m + 1, (i - d1) % m + 1),
        )

    blocks = [fam1(i) for i in range(m)]
    if k != half and l != half:
        blocks += [fam2(i) for i in range(m)]
    return ConstraintPartition(
        m=m,
        fade_state=psk_representative(m, k, l).value,
        blocks=tuple(blocks),
    )
