"""Singularity removal graphs.

Vertices are the constraint blocks of a partition; two blocks are adjacent
when they share a row or a column label, so proper colorings are exactly
the symbol assignments a Latin Square may use.  Adjacency is kept as one
bitmask per vertex: the graphs are small (n <= M^2) and coloring searches
hammer edge queries.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from lsnc.constraint import ConstraintPartition, build_constraints
from lsnc.errors import CertificateMismatchError
from lsnc.signal_set import SignalSet, make_square_qam

__all__ = [
    "RemovalGraph",
    "build_srg",
    "vital_subgraph",
    "psk_vital_adjacency",
    "qam_clique_certificate",
    "QAM_CLIQUE_STATES",
    "greedy_clique_lower_bound",
    "to_dot",
]


@dataclass(frozen=True)
class RemovalGraph:
    """Undirected graph over block indices with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]
    vertex_block: tuple[int, ...]  # vertex -> block index in the source partition

    @classmethod
    def from_edges(
        cls, n: int, edges: list[tuple[int, int]], vertex_block: tuple[int, ...] | None = None
    ) -> RemovalGraph:
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks), vertex_block or tuple(range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_srg(partition: ConstraintPartition) -> RemovalGraph:
    """Graph on all blocks; edges join blocks sharing a row or column."""
    n = len(partition.blocks)
    masks = [0] * n
    by_row: dict[int, int] = {}
    by_col: dict[int, int] = {}
    for i, block in enumerate(partition.blocks):
        for r, c in block:
            by_row[r] = by_row.get(r, 0) | (1 << i)
            by_col[c] = by_col.get(c, 0) | (1 << i)
    for group in list(by_row.values()) + list(by_col.values()):
        for v in _bits(group):
            masks[v] |= group & ~(1 << v)
    return RemovalGraph(n, tuple(masks), tuple(range(n)))


def vital_subgraph(graph: RemovalGraph, partition: ConstraintPartition) -> RemovalGraph:
    """Induced subgraph on blocks with two or more cells."""
    keep = [v for v in range(graph.n) if len(partition.blocks[graph.vertex_block[v]]) >= 2]
    pos = {v: i for i, v in enumerate(keep)}
    masks = [0] * len(keep)
    for v in keep:
        for u in _bits(graph.adj[v]):
            if u in pos:
                masks[pos[v]] |= 1 << pos[u]
    return RemovalGraph(
        len(keep), tuple(masks), tuple(graph.vertex_block[v] for v in keep)
    )


def psk_vital_adjacency(m: int, k: int, l: int) -> RemovalGraph:
    """Vital subgraph of the (k, l) representative of M-PSK, by closed form.

    With k, l != M/2 there are 2M vertices (constraints c_1..c_2M): vertex i
    (0-indexed, i < M) is adjacent to i+-k, i+-l, M+i, M+(i+-k),
    M+(M/2+i+-l), M+(i+M/2), all mod M in the offset part; the second family
    mirrors it.  With k or l = M/2 only M constraints exist and vertex i is
    adjacent to i+-p and i+M/2 for the non-M/2 parameter p.
    """
    if m < 8 or m & (m - 1):
        raise ValueError(f"need M a power of two >= 8, got {m}")
    if not (1 <= k <= m // 2 and 1 <= l <= m // 2) or k == l:
        raise ValueError(f"need 1 <= k,l <= M/2 and k != l, got ({k},{l})")
    half = m // 2
    edges: list[tuple[int, int]] = []
    if k == half or l == half:
        p = l if k == half else k
        for i in range(m):
            for j in ((i + p) % m, (i - p) % m, (i + half) % m):
                edges.append((i, j))
        return RemovalGraph.from_edges(m, [(u, v) for u, v in edges if u != v])
    for i in range(m):
        u = i
        for j in ((i + k) % m, (i - k) % m, (i + l) % m, (i - l) % m):
            edges.append((u, j))
        for j in (
            i,
            (i + k) % m,
            (i - k) % m,
            (half + i + l) % m,
            (half + i - l) % m,
            (i + half) % m,
        ):
            edges.append((u, m + j))
        u = m + i
        for j in (i, (i + k) % m, (i - k) % m, (half + i + l) % m, (half + i - l) % m, (i + half) % m):
            edges.append((u, j))
        for j in ((i + k) % m, (i - k) % m, (i + l) % m, (i - l) % m):
            edges.append((u, m + j))
    return RemovalGraph.from_edges(2 * m, [(u, v) for u, v in edges if u != v])


# The eight singular fade states Theorem-1-style cliques cover, reachable
# from -1-j by conjugation, column negation, and transposition.
QAM_CLIQUE_STATES = (
    -1 - 1j, -1 + 1j, 1 - 1j, 1 + 1j,
    -0.5 - 0.5j, -0.5 + 0.5j, 0.5 - 0.5j, 0.5 + 0.5j,
)


def _label_perm(s_set: SignalSet, f) -> dict[int, int]:
    return {
        lab: s_set.label_of(f(s_set.point(lab))) for lab in range(1, s_set.size + 1)
    }


def qam_clique_certificate(m: int, s: complex = -1 - 1j) -> tuple[int, ...]:
    """An (M+1)-clique in the removal graph of square M-QAM at s.

    For s = -1-j the clique is the M blocks meeting row sqrt(M)+2 plus the
    block of cell (2, (M-sqrt(M)+2)/2); the other seven states of
    QAM_CLIQUE_STATES reuse it through cell transforms.  Pairwise adjacency
    is checked; a failure raises CertificateMismatchError.  Certifies
    chi >= M+1, i.e. these states cost at least one extra symbol.
    """
    side = math.isqrt(m)
    if side * side != m or side % 2:
        raise ValueError("square QAM needs M a square of an even side")
    s_set = make_square_qam(m)
    cells = [(side + 2, c) for c in range(1, m + 1)] + [(2, (m - side + 2) // 2)]

    base = -1 - 1j
    if min(abs(s - t) for t in QAM_CLIQUE_STATES) > 1e-9:
        raise ValueError(f"no clique certificate at fade state {s}")
    # Decompose s as transforms of -1-j: transposition inverts, negation flips
    # both sign components, conjugation flips the imaginary one.
    transposed = abs(abs(s) - abs(base)) > 1e-9
    pre = 1 / s if transposed else s  # one of the +-1+-j corners
    chain = []
    if round(pre.real) * round(pre.imag) < 0:
        chain.append("conj")  # -1-j has positive sign product; conj flips it
    if round(pre.real) > 0:
        chain.append("neg")
    if transposed:
        chain.append("transpose")
    cur = base
    for op in chain:
        cur = cur.conjugate() if op == "conj" else (-cur if op == "neg" else 1 / cur)
    if abs(cur - s) > 1e-9:
        raise CertificateMismatchError(f"no transform chain from {base} to {s}")

    conj_perm = _label_perm(s_set, lambda p: p.conjugate())
    neg_perm = _label_perm(s_set, lambda p: -p)
    for op in chain:
        if op == "conj":
            cells = [(conj_perm[r], conj_perm[c]) for r, c in cells]
        elif op == "neg":
            cells = [(r, neg_perm[c]) for r, c in cells]
        else:
            cells = [(c, r) for r, c in cells]

    partition = build_constraints(s_set, s)
    vertices = sorted({partition.block_of(cell) for cell in cells})
    if len(vertices) != m + 1:
        raise CertificateMismatchError(
            f"certificate cells span {len(vertices)} blocks, expected {m + 1}"
        )
    graph = build_srg(partition)
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            if not graph.has_edge(u, v):
                raise CertificateMismatchError(f"blocks {u} and {v} are not adjacent")
    return tuple(vertices)


def row_clique(graph: RemovalGraph, partition: ConstraintPartition, row: int = 1) -> tuple[int, ...]:
    """Vertices of the blocks meeting one grid row — a clique of size m.

    No constraint holds two cells of the same row (the superposition map is
    injective along rows), so a row meets m distinct blocks, and any two of
    them are adjacent through that shared row label.  The pairwise adjacency
    is re-checked here so the returned clique is a certificate that the
    chromatic number is at least m.
    """
    vertices = sorted({partition.block_of((row, c)) for c in range(1, partition.m + 1)})
    if len(vertices) != partition.m:
        raise CertificateMismatchError(f"row {row} meets {len(vertices)} blocks, expected {partition.m}")
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            if not graph.has_edge(u, v):
                raise CertificateMismatchError(f"blocks {u} and {v} are not adjacent")
    return tuple(vertices)


def greedy_clique_lower_bound(graph: RemovalGraph) -> int:
    """Size of a maximal clique grown greedily from a highest-degree seed."""
    if graph.n == 0:
        return 0
    seed = max(range(graph.n), key=lambda v: (graph.degree(v), -v))
    clique = [seed]
    cand = graph.adj[seed]
    while cand:
        v = max(_bits(cand), key=lambda v: (graph.degree(v), -v))
        clique.append(v)
        cand &= graph.adj[v]
    return len(clique)


def to_dot(graph: RemovalGraph, name: str = "removal_graph") -> str:
    """DOT text; vertex labels are 1-indexed block indices."""
    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        lines.append(f'  v{v} [label="{graph.vertex_block[v] + 1}"];')
    for u, v in graph.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
