"""Row graph G_R, row-column graph G_RC, and induced paths/cycles.

Vertex sets and neighborhoods are bit masks over row indices, the same
representation the matrix uses for columns.  ``Graph.induced`` returns a view
sharing the adjacency table; only ``with_edges`` copies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .matrix import BinaryMatrix, columns_of

members = columns_of  # ascending members of any bit mask


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph restricted to the vertices in ``vertices``."""

    adj: tuple[int, ...]
    vertices: int

    @property
    def order(self) -> int:
        return bin(self.vertices).count("1")

    def __contains__(self, v: int) -> bool:
        return bool(self.vertices >> v & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v] & self.vertices

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1) and u in self and v in self

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in members(self.vertices) for v in members(self.neighbors(u)) if u < v]

    def induced(self, keep: int) -> "Graph":
        return Graph(self.adj, self.vertices & keep)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in extra:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return Graph(tuple(adj), self.vertices)

    def component_of(self, v: int) -> int:
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in members(frontier):
                nxt |= self.adj[u]
            frontier = nxt & self.vertices & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[int]:
        """Connected components as masks, ordered by smallest vertex."""
        out = []
        left = self.vertices
        while left:
            low = (left & -left).bit_length() - 1
            comp = self.component_of(low)
            out.append(comp)
            left &= ~comp
        return out


class RowGraph(Graph):
    """G_R: one vertex per row, an edge when two rows share a column."""

    @classmethod
    def from_matrix(cls, matrix: BinaryMatrix) -> "RowGraph":
        rows = matrix.rows
        adj = []
        for i, ri in enumerate(rows):
            a = 0
            for j, rj in enumerate(rows):
                if i != j and ri & rj:
                    a |= 1 << j
            adj.append(a)
        return cls(tuple(adj), (1 << matrix.m) - 1)


@dataclass(frozen=True)
class RowColGraph:
    """G_RC: black row vertices, white column vertices.

    Row-row edges are those of G_R; a column is joined to the rows
    containing it and never to another column.
    """

    matrix: BinaryMatrix
    rows: RowGraph = field(repr=False)

    def span(self, c: int) -> int:
        return span(self.matrix, c)

    def column_neighbors(self, r: int) -> list[int]:
        return self.matrix.columns(r)

    def to_dot(self) -> str:
        lines = ["graph G_RC {"]
        for i in range(self.matrix.m):
            lines.append(f'  r{i} [style=filled, fillcolor=black, fontcolor=white];')
        for c in range(self.matrix.n_cols):
            lines.append(f'  c{c} [style=filled, fillcolor=white];')
        for u, v in self.rows.edges():
            lines.append(f"  r{u} -- r{v};")
        for i in range(self.matrix.m):
            for c in self.matrix.columns(i):
                lines.append(f"  r{i} -- c{c};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graphs(matrix: BinaryMatrix) -> tuple[RowGraph, RowColGraph]:
    g = RowGraph.from_matrix(matrix)
    return g, RowColGraph(matrix, g)


def neighborhood(g: Graph, r: int) -> int:
    """N(r): rows sharing a column with ``r``, excluding ``r``."""
    return g.neighbors(r)


def common_neighborhood(g: Graph, ri: int, rj: int) -> int:
    return g.neighbors(ri) & g.neighbors(rj)


def span(matrix: BinaryMatrix, c: int) -> int:
    """L(c): rows containing column ``c``."""
    bit = 1 << c
    return mask_of(i for i, row in enumerate(matrix.rows) if row & bit)


# ---------------------------------------------------------------------------
# paths and cycles


def shortest_induced_path(g: Graph, u: int, v: int) -> Optional[list[int]]:
    """BFS shortest u-v path, which is chordless; None if disconnected.

    Ties are broken towards smaller vertex ids so the result is deterministic.
    """
    if u not in g or v not in g:
        return None
    if u == v:
        return [u]
    parent = {u: u}
    seen = 1 << u
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            fresh = g.neighbors(x) & ~seen
            seen |= fresh
            for y in members(fresh):
                parent[y] = x
                nxt.append(y)
        if seen >> v & 1:
            path = [v]
            while path[-1] != u:
                path.append(parent[path[-1]])
            return path[::-1]
        nxt.sort()
        frontier = nxt
    return None


def enumerate_p4_through(g: Graph, r: int, *, r_internal: bool = False) -> Iterator[tuple[int, int, int, int]]:
    """Four-vertex paths a-b-c-d through ``r`` with a-c and b-d non-adjacent.

    The end pair a-d may be adjacent, so besides the induced P4s this also
    yields every C4 through ``r`` with one edge left out; the cycle search
    of form I needs those to close 4-cycles.  Each path is reported once, in
    the orientation that is lexicographically smaller, and the stream is in
    ascending order.  With ``r_internal`` only paths having ``r`` at
    position b or c are produced.
    """
    if r not in g:
        return
    nbr = g.neighbors
    found = set()
    n_r = nbr(r)
    # r second: a - r - c - d
    for a in members(n_r):
        for c in members(n_r & ~nbr(a) & ~(1 << a)):
            for d in members(nbr(c) & ~n_r & ~(1 << r) & ~(1 << a)):
                found.add(_canonical((a, r, c, d)))
    if not r_internal:
        # r first: r - b - c - d
        for b in members(n_r):
            for c in members(nbr(b) & ~n_r & ~(1 << r)):
                for d in members(nbr(c) & ~nbr(b) & ~(1 << b) & ~(1 << r)):
                    found.add(_canonical((r, b, c, d)))
    yield from sorted(found)


def _canonical(path: tuple[int, ...]) -> tuple[int, ...]:
    rev = path[::-1]
    return min(path, rev)


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    if len(set(seq)) != len(seq) or any(v not in g for v in seq):
        return False
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if g.has_edge(seq[i], seq[j]) != (j == i + 1):
                return False
    return True


def is_induced_cycle(g: Graph, seq: Sequence[int]) -> bool:
    k = len(seq)
    if k < 4 or len(set(seq)) != k or any(v not in g for v in seq):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(seq[i], seq[j]) != consecutive:
                return False
    return True


def find_induced_cycle_through(g: Graph, r: int) -> Iterator[list[int]]:
    """Chordless cycles (length >= 4) through ``r``, one per four-vertex path.

    For each path a-b-c-d from ``enumerate_p4_through`` the closed
    neighborhoods of b and c are removed (a and d are kept) and a shortest
    a-d path closes the cycle.  Duplicates are possible across paths.
    """
    for a, b, c, d in enumerate_p4_through(g, r):
        if g.has_edge(a, d):
            yield [a, b, c, d]
            continue
        blocked = g.neighbors(b) | g.neighbors(c) | (1 << b) | (1 << c)
        rest = g.induced(~blocked | (1 << a) | (1 << d))
        path = shortest_induced_path(rest, d, a)
        if path is not None:
            yield [a, b, c] + path[:-1]
