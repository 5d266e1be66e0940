"""Zero-divisor graphs on the nonzero zero divisors of a finite ring.

Three variants share the vertex set Z(R) \\ {0}:

  gamma   edge iff x*y == 0
  zstar   edge iff x + y is again a zero divisor
  tilde   edge iff either holds (the union of the other two)

Adjacency is stored as one bitmask int per vertex, which keeps
completeness, diameter (BFS) and triangle tests cheap for the few hundred
vertices these rings produce.  Both cause layers (product-zero and
sum-zero-divisor) are kept on every graph so edges can be tagged.
"""

from __future__ import annotations

import math

GRAPH_KINDS = ("gamma", "zstar", "tilde")

CAUSE_PRODUCT = "product-zero"
CAUSE_SUM = "sum-zero-divisor"
CAUSE_BOTH = "both"

_CAUSE_COLORS = {
    CAUSE_PRODUCT: "#1f77b4",
    CAUSE_SUM: "#2ca02c",
    CAUSE_BOTH: "#9467bd",
}


class TrivialGraphError(ValueError):
    """The ring has no nonzero zero divisors, so there is no graph to build."""


class ZGraph:
    """Simple undirected graph on ring elements with bitmask adjacency rows."""

    def __init__(self, ring, kind, vertices, prod_rows, sum_rows):
        if kind not in GRAPH_KINDS:
            raise ValueError(f"unknown graph kind {kind!r}")
        self.ring = ring
        self.kind = kind
        self.vertices = tuple(vertices)
        self.prod_rows = list(prod_rows)
        self.sum_rows = list(sum_rows)
        if kind == "gamma":
            self.rows = list(self.prod_rows)
        elif kind == "zstar":
            self.rows = list(self.sum_rows)
        else:
            self.rows = [p | s for p, s in zip(self.prod_rows, self.sum_rows)]
        self._pos = {v: i for i, v in enumerate(self.vertices)}

    @classmethod
    def from_edges(cls, vertices, edges, kind="tilde") -> ZGraph:
        """Synthetic graph (no ring) for tests; edges count as product-zero."""
        vertices = tuple(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        rows = [0] * len(vertices)
        for u, v in edges:
            rows[pos[u]] |= 1 << pos[v]
            rows[pos[v]] |= 1 << pos[u]
        return cls(None, kind, vertices, rows, [0] * len(vertices))

    # -- basic structure ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def position(self, v) -> int:
        return self._pos[v]

    def adjacent(self, u, v) -> bool:
        return bool(self.rows[self._pos[u]] >> self._pos[v] & 1)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as element pairs (u, v) with u < v, sorted."""
        out = []
        for i, u in enumerate(self.vertices):
            m = self.rows[i] >> (i + 1) << (i + 1)
            while m:
                low = m & -m
                out.append((u, self.vertices[low.bit_length() - 1]))
                m ^= low
        return out

    def cause(self, u, v) -> str | None:
        """Why u and v are adjacent; None when they are not."""
        i, j = self._pos[u], self._pos[v]
        p = self.prod_rows[i] >> j & 1
        s = self.sum_rows[i] >> j & 1
        if p and s:
            return CAUSE_BOTH
        if p:
            return CAUSE_PRODUCT
        if s:
            return CAUSE_SUM
        return None

    # -- properties -----------------------------------------------------------

    def is_complete(self) -> bool:
        """Every pair adjacent; single-vertex graphs count as complete."""
        full = (1 << len(self.vertices)) - 1
        return all(r == full ^ (1 << i) for i, r in enumerate(self.rows))

    def universal_vertices(self) -> frozenset[int]:
        """Elements adjacent to every other vertex."""
        full = (1 << len(self.vertices)) - 1
        return frozenset(
            self.vertices[i]
            for i, r in enumerate(self.rows)
            if r == full ^ (1 << i)
        )

    def _bfs(self, start: int) -> tuple[int, int]:
        # returns (eccentricity within the component, reached bitmask)
        rows = self.rows
        seen = frontier = 1 << start
        dist = 0
        while True:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            nxt &= ~seen
            if not nxt:
                return dist, seen
            seen |= nxt
            frontier = nxt
            dist += 1

    def is_connected(self) -> bool:
        full = (1 << len(self.vertices)) - 1
        return self._bfs(0)[1] == full

    def diameter(self) -> int | float:
        """Largest BFS eccentricity; math.inf when disconnected."""
        full = (1 << len(self.vertices)) - 1
        worst = 0
        for i in range(len(self.vertices)):
            dist, seen = self._bfs(i)
            if seen != full:
                return math.inf
            worst = max(worst, dist)
        return worst

    def is_hypertriangulated(self) -> bool:
        """Every edge lies in a triangle; vacuously true without edges."""
        rows = self.rows
        for i, r in enumerate(rows):
            m = r >> (i + 1) << (i + 1)
            while m:
                low = m & -m
                j = low.bit_length() - 1
                if not (rows[i] & rows[j]):
                    return False
                m ^= low
        return True

    # -- export ---------------------------------------------------------------

    def to_dot(self, color_by_cause: bool = False) -> str:
        """Deterministic DOT text; vertices are labeled by element index."""
        lines = []
        if self.ring is not None:
            lines.append(f"// {self.ring.expr()} [{self.kind}]")
        lines.append("graph {")
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for u, v in self.edges():
            attr = ""
            if color_by_cause:
                attr = f' [color="{_CAUSE_COLORS[self.cause(u, v)]}"]'
            lines.append(f'  "{u}" -- "{v}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(ring, kind: str) -> ZGraph:
    """Build the requested graph variant on the nonzero zero divisors.

    Raises TrivialGraphError when the vertex set is empty (fields, domains,
    the zero ring); other sizes always build.
    """
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    vertices = sorted(ring.nonzero_zero_divisors)
    if not vertices:
        raise TrivialGraphError(f"{ring.expr()} has no nonzero zero divisors")
    zset = ring.zero_divisors
    k = len(vertices)
    prod_rows = [0] * k
    sum_rows = [0] * k
    for i in range(k):
        x = vertices[i]
        bit_i = 1 << i
        for j in range(i + 1, k):
            y = vertices[j]
            if ring.mul(x, y) == 0:
                prod_rows[i] |= 1 << j
                prod_rows[j] |= bit_i
            if ring.add(x, y) in zset:
                sum_rows[i] |= 1 << j
                sum_rows[j] |= bit_i
    return ZGraph(ring, kind, vertices, prod_rows, sum_rows)


def graphs_equal(g1: ZGraph, g2: ZGraph) -> bool:
    """Adjacency equality for graphs over the same ring and vertex order."""
    same_ring = g1.ring is g2.ring or (
        g1.ring is not None
        and g2.ring is not None
        and g1.ring.expr() == g2.ring.expr()
    )
    if not same_ring:
        raise ValueError("graphs over different rings are not comparable")
    if g1.vertices != g2.vertices:
        raise ValueError("graphs with different vertex orders are not comparable")
    return g1.rows == g2.rows
