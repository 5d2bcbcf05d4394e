"""Vertex coloring: DSATUR greedy, exact branch-and-bound, and extension.

Proper colorings of a removal graph are exactly the valid symbol
assignments, so the chromatic number is the minimum symbol count of a
Latin Square removing the fade state.  All searches are deterministic:
ties break by saturation, then degree, then lowest vertex index.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from lsnc.errors import SearchBudgetExceeded
from lsnc.latin import default_budget
from lsnc.srg import RemovalGraph, greedy_clique_lower_bound

__all__ = [
    "Coloring",
    "ChromaticResult",
    "verify_proper",
    "greedy_color",
    "exact_chromatic",
    "extend_coloring",
]


@dataclass(frozen=True)
class Coloring:
    """Total assignment vertex -> color; colors are 1-indexed."""

    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    coloring: Coloring
    optimal: bool
    nodes: int


def verify_proper(graph: RemovalGraph, coloring: Coloring) -> bool:
    """Total assignment with no monochromatic edge."""
    cols = coloring.colors
    if len(cols) != graph.n or any(c < 1 for c in cols):
        return False
    return all(cols[u] != cols[v] for u, v in graph.edges())


def _greedy_in_order(graph: RemovalGraph, order: Sequence[int]) -> list[int]:
    colors = [0] * graph.n
    for v in order:
        used = {colors[u] for u in graph.neighbors(v) if colors[u]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _dsatur_order_color(graph: RemovalGraph) -> list[int]:
    n = graph.n
    colors = [0] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if not colors[u]),
            key=lambda u: (len(neighbor_colors[u]), graph.degree(u), -u),
        )
        c = 1
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for u in graph.neighbors(v):
            neighbor_colors[u].add(c)
    return colors


def greedy_color(graph: RemovalGraph, order: str | Sequence[int] = "dsatur") -> Coloring:
    """Greedy proper coloring.

    `order` is "dsatur" (default), "degeneracy" (smallest-last), or an
    explicit vertex permutation.  Uses at most max-degree + 1 colors.
    """
    if graph.n == 0:
        return Coloring(())
    if order == "dsatur":
        return Coloring(tuple(_dsatur_order_color(graph)))
    if order == "degeneracy":
        remaining = set(range(graph.n))
        seq: list[int] = []
        while remaining:
            v = min(
                remaining,
                key=lambda u: (sum(1 for w in graph.neighbors(u) if w in remaining), u),
            )
            remaining.remove(v)
            seq.append(v)
        seq.reverse()
        return Coloring(tuple(_greedy_in_order(graph, seq)))
    order_list = list(order)
    if sorted(order_list) != list(range(graph.n)):
        raise ValueError("explicit order must be a permutation of all vertices")
    return Coloring(tuple(_greedy_in_order(graph, order_list)))


def exact_chromatic(
    graph: RemovalGraph,
    lower: int | None = None,
    upper: int | None = None,
    node_budget: int | None = None,
) -> ChromaticResult:
    """Chromatic number by DSATUR branch and bound.

    `lower`/`upper` seed the bounds (a greedy clique and a DSATUR coloring
    tighten them).  If the node budget runs out, the best coloring found so
    far is returned with optimal=False.
    """
    budget = default_budget() if node_budget is None else node_budget
    if graph.n == 0:
        return ChromaticResult(0, Coloring(()), True, 0)
    lb = max(lower or 1, greedy_clique_lower_bound(graph))
    best = _dsatur_order_color(graph)
    best_k = max(best)
    if best_k <= lb:
        return ChromaticResult(best_k, Coloring(tuple(best)), True, 0)

    n = graph.n
    colors = [0] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    nodes = 0
    exhausted = False
    cap = upper if upper is not None else n  # never explore beyond this many colors

    def search(n_colored: int, used: int) -> bool:
        """Look for a coloring better than best_k; True stops the search."""
        nonlocal best, best_k, nodes, exhausted
        if n_colored == n:
            if used < best_k:
                best = colors[:]
                best_k = used
            return best_k <= lb
        if nodes > budget:
            exhausted = True
            return True
        v = max(
            (u for u in range(n) if not colors[u]),
            key=lambda u: (len(neighbor_colors[u]), graph.degree(u), -u),
        )
        for c in range(1, min(used + 1, best_k - 1, cap) + 1):
            if c in neighbor_colors[v]:
                continue
            nodes += 1
            colors[v] = c
            added = [u for u in graph.neighbors(v) if c not in neighbor_colors[u]]
            for u in added:
                neighbor_colors[u].add(c)
            done = search(n_colored + 1, max(used, c))
            colors[v] = 0
            for u in added:
                neighbor_colors[u].remove(c)
            if done:
                return True
        return False

    search(0, 0)
    # An upper cap below best_k - 1 leaves part of the space unexplored.
    optimal = not exhausted and cap >= best_k - 1
    return ChromaticResult(best_k, Coloring(tuple(best)), optimal, nodes)


def extend_coloring(
    graph: RemovalGraph,
    partial: dict[int, int],
    k: int,
    node_budget: int | None = None,
) -> Coloring | None:
    """Extend a partial coloring to all vertices with colors 1..k.

    Returns the extension, or None when the search space is exhausted
    (proof of infeasibility).  Raises on an improper or out-of-range
    partial, and SearchBudgetExceeded if the budget ends the search early.
    """
    budget = default_budget() if node_budget is None else node_budget
    colors = [0] * graph.n
    for v, c in partial.items():
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range")
        if not 1 <= c <= k:
            raise ValueError(f"color {c} outside 1..{k}")
        colors[v] = c
    for u, v in graph.edges():
        if colors[u] and colors[u] == colors[v]:
            raise ValueError(f"partial coloring is improper on edge ({u}, {v})")

    neighbor_colors: list[set[int]] = [set() for _ in range(graph.n)]
    for v in range(graph.n):
        if colors[v]:
            for u in graph.neighbors(v):
                neighbor_colors[u].add(colors[v])
    uncolored = [v for v in range(graph.n) if not colors[v]]
    nodes = 0

    def search() -> bool:
        nonlocal nodes
        if not uncolored:
            return True
        # most-constrained vertex first
        v = min(
            uncolored,
            key=lambda u: (k - len(neighbor_colors[u]), -graph.degree(u), u),
        )
        uncolored.remove(v)
        for c in range(1, k + 1):
            if c in neighbor_colors[v]:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"extension budget {budget} exhausted")
            colors[v] = c
            added = [u for u in graph.neighbors(v) if c not in neighbor_colors[u]]
            for u in added:
                neighbor_colors[u].add(c)
            if search():
                return True
            colors[v] = 0
            for u in added:
                neighbor_colors[u].remove(c)
        uncolored.append(v)
        return False

    if search():
        return Coloring(tuple(colors))
    return None
