"""Hamiltonian cycles in extended zero-divisor graphs.

Two independent routes:

  find_hamiltonian_cycle      generic backtracking over any ZGraph, with
                              sound pruning and a node budget, so "no cycle"
                              is only reported when the search completed;

  constructive_hamiltonian_cycle
                              block construction specific to extended
                              zero-divisor graphs of finite rings: split the
                              ring into local factors, walk the vertex
                              blocks whose i-th coordinate falls in the i-th
                              maximal ideal, and close up with a
                              product-zero edge.  Works whenever the ring
                              has at least three nonzero zero divisors.

Every cycle either route returns is validated against the graph before it
is handed back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import ZGraph, build_graph

DEFAULT_NODE_BUDGET = 10_000_000


class ConstructionError(RuntimeError):
    """The block construction produced an invalid cycle: an internal bug."""


@dataclass
class CycleSearch:
    """Backtracking outcome.

    status is "found" (cycle holds a witness), "none" (search completed,
    provably no cycle) or "unknown" (node budget exhausted, no conclusion).
    """

    status: str
    cycle: list[int] | None
    expanded: int


def validate_cycle(graph: ZGraph, cycle) -> None:
    """Check a closed spanning cycle: distinct, covers V, consecutive edges.

    Raises ValueError on the first violation; used as the independent check
    on every produced cycle.
    """
    cycle = list(cycle)
    if len(cycle) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if sorted(cycle) != sorted(graph.vertices):
        raise ValueError("cycle must visit every vertex exactly once")
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not graph.adjacent(u, v):
            raise ValueError(f"consecutive cycle vertices {u} and {v} are not adjacent")


def _feasible(rows, rem: int, cur: int, start: int) -> bool:
    # sound prunes: every unvisited vertex still needs two links into the
    # remaining region (plus the path ends), and must be reachable from the
    # path head without leaving the unvisited region
    allowed = rem | (1 << cur) | (1 << start)
    m = rem
    while m:
        low = m & -m
        if (rows[low.bit_length() - 1] & allowed).bit_count() < 2:
            return False
        m ^= low
    seen = frontier = 1 << cur
    scope = rem | seen
    while frontier:
        nxt = 0
        mm = frontier
        while mm:
            low = mm & -mm
            nxt |= rows[low.bit_length() - 1]
            mm ^= low
        frontier = nxt & scope & ~seen
        seen |= frontier
    return seen & rem == rem


def find_hamiltonian_cycle(graph: ZGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> CycleSearch:
    """Backtracking Hamiltonian cycle search with degree-based ordering.

    Deterministic: candidates are tried by ascending static degree.  Exceeding
    the budget yields status "unknown", never a false "none".
    """
    k = len(graph.vertices)
    if k < 3:
        raise ValueError("graph too small for a cycle (need at least 3 vertices)")
    rows = graph.rows
    if any(r.bit_count() < 2 for r in rows):
        return CycleSearch("none", None, 0)
    full = (1 << k) - 1
    degree_rank = {i: r for r, i in enumerate(
        sorted(range(k), key=lambda i: (rows[i].bit_count(), i))
    )}

    def candidates(cur: int, visited: int) -> list[int]:
        m = rows[cur] & ~visited
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        out.sort(key=degree_rank.__getitem__)
        return out

    expanded = 0
    path = [0]
    visited = 1
    stack = [iter(candidates(0, visited))]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            visited ^= 1 << path.pop()
            continue
        expanded += 1
        if expanded > node_budget:
            return CycleSearch("unknown", None, expanded)
        nv = visited | (1 << step)
        if nv == full:
            if rows[step] & 1:
                cycle = [graph.vertices[i] for i in path + [step]]
                return CycleSearch("found", cycle, expanded)
            continue
        if not _feasible(rows, full & ~nv, step, 0):
            continue
        path.append(step)
        visited = nv
        stack.append(iter(candidates(step, visited)))
    return CycleSearch("none", None, expanded)


# -- constructive route ---------------------------------------------------------


def _ordered_block(block: set[int], first: int | None = None, last: int | None = None) -> list[int]:
    pinned = {x for x in (first, last) if x is not None}
    if not pinned <= block:
        raise ConstructionError(f"pinned endpoints {pinned - block} missing from block")
    seq = sorted(block - pinned)
    if first is not None:
        seq.insert(0, first)
    if last is not None:
        seq.append(last)
    return seq


def constructive_hamiltonian_cycle(ring) -> list[int]:
    """Hamiltonian cycle of the extended graph by the local-factor blocks.

    Requires at least three nonzero zero divisors.  Complete graphs (local
    rings, boolean rings, rings inside a product of two domains) take any
    cyclic order; otherwise the ring splits into at least two local factors
    and the vertex blocks are walked in the order that keeps consecutive
    vertices inside a common coordinate slab, closing with a product-zero
    edge.  The result is validated before being returned.
    """
    graph = build_graph(ring, "tilde")
    if len(graph.vertices) < 3:
        raise ValueError("need at least 3 nonzero zero divisors for a cycle")
    if graph.is_complete():
        cycle = list(graph.vertices)
    else:
        cycle = _block_cycle(ring, set(graph.vertices))
    try:
        validate_cycle(graph, cycle)
    except ValueError as exc:
        raise ConstructionError(f"block construction failed on {ring.expr()}: {exc}") from exc
    return cycle


def _block_cycle(ring, vertex_set: set[int]) -> list[int]:
    factors = list(ring.local_decomposition())
    if len(factors) < 2:
        raise ConstructionError("incomplete graph on a local ring")
    idems = [f.idempotent for f in factors]
    subrings = [sorted(ring.multiples_of(e)) for e in idems]
    maximal = []
    for e, sub in zip(idems, subrings):
        units = {z for z in sub if any(ring.mul(z, w) == e for w in sub)}
        maximal.append(set(sub) - units)

    pool = vertex_set | {0}
    if len(factors) == 2:
        if maximal[0] == {0}:
            if maximal[1] == {0}:
                raise ConstructionError("two field factors give a complete graph")
            idems.reverse()
            maximal.reverse()
        e1, e2 = idems
        slab1 = {x for x in pool if ring.mul(x, e1) in maximal[0]}
        slab2 = {x for x in pool if ring.mul(x, e2) in maximal[1]}
        a = min(maximal[0] - {0})
        block1 = _ordered_block(slab1 - {0}, first=e2, last=a)
        block2 = _ordered_block(slab2 - slab1, last=e1)
        return block1 + block2

    # three or more factors: put one of order >= 3 last (if all factors had
    # order 2 the ring would be boolean, hence complete, handled above)
    if factors[-1].order < 3:
        j = next(i for i, f in enumerate(factors) if f.order >= 3)
        factors.append(factors.pop(j))
        idems.append(idems.pop(j))
        subrings.append(subrings.pop(j))
        maximal.append(maximal.pop(j))

    slabs = [
        {x for x in pool if ring.mul(x, e) in mx} for e, mx in zip(idems, maximal)
    ]
    e_last = idems[-1]
    a = min(z for z in subrings[-1] if z not in (0, e_last))

    cycle: list[int] = []
    covered: set[int] = set()
    prefix = 0
    for i, slab in enumerate(slabs):
        if i == 0:
            block = _ordered_block(slab - {0}, first=e_last, last=a)
        else:
            prefix = ring.add(prefix, idems[i - 1])
            block = _ordered_block(slab - covered, last=prefix)
        covered |= slab
        cycle.extend(block)
    return cycle
