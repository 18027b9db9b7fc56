"""Reference implementations and seeded graph generators.

Everything here uses plain vertex-indexed Python lists and explicit stacks;
none of it is space-efficient and none of it shares code with the
algorithms it checks.

Random numbers come from SplitMix64 so the same seed yields the same graph
in any language::

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    return z ^ (z >> 31)

and ``below(b) = (next() * b) >> 64`` draws from ``[0, b)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .dfs import BACK, FORWARD_OR_CROSS, PARALLEL_OR_SELF, DfsEvent
from .graphrep import AdjGraph

_M64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _M64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return (self.next() * bound) >> 64


KINDS = ("gnm-undirected", "gnm-directed", "random-dag", "random-tree-plus-k-edges",
         "barbell", "path", "cycle")


@dataclass(frozen=True)
class GenSpec:
    """Generator request.  ``m`` is the edge count for the gnm/dag kinds and
    the number of extra edges for ``random-tree-plus-k-edges``."""

    kind: str
    n: int
    m: int = 0
    seed: int = 0
    self_loops: Optional[bool] = None  # default: allowed only for gnm-directed


def _edges(spec: GenSpec) -> tuple[list[tuple[int, int]], bool]:
    n, m, kind = spec.n, spec.m, spec.kind
    rng = SplitMix64(spec.seed)
    if kind == "path":
        return [(i, i + 1) for i in range(n - 1)], False
    if kind == "cycle":
        return ([(i, (i + 1) % n) for i in range(n)] if n else []), False
    if kind == "barbell":
        if n < 2 or n % 2:
            raise ValueError("barbell needs an even n >= 2")
        k = n // 2
        edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
        edges.append((k - 1, k))
        edges += [(i, j) for i in range(k, n) for j in range(i + 1, n)]
        return edges, False
    if kind in ("gnm-undirected", "gnm-directed"):
        directed = kind == "gnm-directed"
        loops = directed if spec.self_loops is None else spec.self_loops
        if m and (n == 0 or (n == 1 and not loops)):
            raise ValueError(f"cannot place {m} edges on {n} vertices")
        edges = []
        for _ in range(m):
            u = rng.below(n)
            v = rng.below(n)
            while v == u and not loops:
                v = rng.below(n)
            edges.append((u, v))
        return edges, directed
    if kind == "random-dag":
        if m and n < 2:
            raise ValueError(f"cannot place {m} DAG edges on {n} vertices")
        perm = list(range(n))
        for i in range(n - 1, 0, -1):
            j = rng.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        edges = []
        for _ in range(m):
            a = rng.below(n)
            b = rng.below(n)
            while b == a:
                b = rng.below(n)
            if a > b:
                a, b = b, a
            edges.append((perm[a], perm[b]))
        return edges, True
    if kind == "random-tree-plus-k-edges":
        edges = [(rng.below(v), v) for v in range(1, n)]
        if m and n < 2:
            raise ValueError("extra edges need at least two vertices")
        for _ in range(m):
            u = rng.below(n)
            v = rng.below(n)
            while v == u:
                v = rng.below(n)
            edges.append((u, v))
        return edges, False
    raise ValueError(f"unknown generator kind {kind!r}; expected one of {', '.join(KINDS)}")


def generate(spec: GenSpec) -> AdjGraph:
    edges, directed = _edges(spec)
    return AdjGraph.from_edges(spec.n, edges, directed)


# -- classical DFS ------------------------------------------------------------

@dataclass
class RefDfs:
    events: list[DfsEvent]
    parent: list[int]
    depth: list[int]
    finish_order: list[int]
    cyclic: bool


def ref_dfs(g: AdjGraph) -> RefDfs:
    """Explicit-stack DFS with the same neighbor order and event rules."""
    n = g.n
    off, nbr = g.fwd_offsets, g.fwd_neighbors
    ev: list[DfsEvent] = []
    visited = [False] * n
    finished = [False] * n
    parent = [-1] * n
    depth = [-1] * n
    twin = [-1] * n  # undirected: slot in v's list that points back at its parent
    nxt = list(off[:n]) if n else []
    finish_order: list[int] = []
    cyclic = False
    for r in range(n):
        if visited[r]:
            continue
        visited[r] = True
        depth[r] = 0
        ev.append(DfsEvent("new_root", r))
        ev.append(DfsEvent("discover", r))
        stack = [r]
        while stack:
            u = stack[-1]
            i = nxt[u]
            if i < off[u + 1]:
                nxt[u] = i + 1
                w = nbr[i]
                if not visited[w]:
                    visited[w] = True
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    if not g.directed:
                        twin[w] = next(s for s in range(off[w], off[w + 1]) if nbr[s] == u)
                    ev.append(DfsEvent("tree_edge", u, w, i))
                    ev.append(DfsEvent("discover", w))
                    stack.append(w)
                elif g.directed:
                    if w == u:
                        kind, cyclic = PARALLEL_OR_SELF, True
                    elif not finished[w]:
                        kind, cyclic = BACK, True
                    else:
                        kind = FORWARD_OR_CROSS
                    ev.append(DfsEvent("non_tree_edge", u, w, i, kind))
                elif i != twin[u] and not finished[w]:
                    kind = PARALLEL_OR_SELF if w in (u, parent[u]) else BACK
                    ev.append(DfsEvent("non_tree_edge", u, w, i, kind))
            else:
                stack.pop()
                finished[u] = True
                finish_order.append(u)
                ev.append(DfsEvent("finish", u))
                if stack:
                    ev.append(DfsEvent("retreat", u, stack[-1]))
    return RefDfs(ev, parent, depth, finish_order, cyclic)


# -- bridges ------------------------------------------------------------------

def _undirected_edges(g: AdjGraph) -> list[tuple[int, int]]:
    # each non-loop edge once, as (min, max); self-loops dropped
    out = []
    for u in range(g.n):
        for s in range(g.fwd_offsets[u], g.fwd_offsets[u + 1]):
            v = g.fwd_neighbors[s]
            if u < v:
                out.append((u, v))
    return out


def ref_bridges(g: AdjGraph) -> set[tuple[int, int]]:
    """Lowpoint bridges as (min, max) pairs."""
    n = g.n
    off, nbr = g.fwd_offsets, g.fwd_neighbors
    disc = [-1] * n
    low = [0] * n
    t = 0
    out: set[tuple[int, int]] = set()
    for r in range(n):
        if disc[r] != -1:
            continue
        disc[r] = low[r] = t
        t += 1
        # frame: [vertex, parent, next slot, parent edge skipped]
        stack = [[r, -1, off[r], False]]
        while stack:
            fr = stack[-1]
            u, p, i = fr[0], fr[1], fr[2]
            if i < off[u + 1]:
                fr[2] = i + 1
                w = nbr[i]
                if w == p and not fr[3]:
                    fr[3] = True
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append([w, u, off[w], False])
                elif disc[w] < low[u]:
                    low[u] = disc[w]
            else:
                stack.pop()
                if stack:
                    pu = stack[-1][0]
                    if low[u] < low[pu]:
                        low[pu] = low[u]
                    if low[u] > disc[pu]:
                        out.add((min(pu, u), max(pu, u)))
    return out


def _components(n: int, edges: Iterable[tuple[int, int]]) -> int:
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    count = n
    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            root[a] = b
            count -= 1
    return count


def brute_bridges(g: AdjGraph) -> set[tuple[int, int]]:
    """Edges whose deletion raises the component count."""
    edges = _undirected_edges(g)
    base = _components(g.n, edges)
    out = set()
    for k, e in enumerate(edges):
        if _components(g.n, edges[:k] + edges[k + 1:]) > base:
            out.add(e)
    return out


# -- strong components and orders --------------------------------------------

Partition = list[tuple[int, ...]]


def canonical(parts: Iterable[Iterable[int]]) -> Partition:
    return sorted(tuple(sorted(p)) for p in parts)


def ref_scc(g: AdjGraph) -> Partition:
    """Kosaraju with an explicit finish-order array."""
    n = g.n
    off, nbr = g.fwd_offsets, g.fwd_neighbors
    seen = [False] * n
    order: list[int] = []
    for r in range(n):
        if seen[r]:
            continue
        seen[r] = True
        stack = [(r, off[r])]
        while stack:
            u, i = stack[-1]
            if i < off[u + 1]:
                stack[-1] = (u, i + 1)
                w = nbr[i]
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, off[w]))
            else:
                stack.pop()
                order.append(u)
    roff, rnbr = g.rev_offsets, g.rev_neighbors
    comp = [-1] * n
    parts = []
    for r in reversed(order):
        if comp[r] != -1:
            continue
        c = len(parts)
        comp[r] = c
        members = [r]
        todo = [r]
        while todo:
            u = todo.pop()
            for s in range(roff[u], roff[u + 1]):
                w = rnbr[s]
                if comp[w] == -1:
                    comp[w] = c
                    members.append(w)
                    todo.append(w)
        parts.append(members)
    return canonical(parts)


def brute_scc(g: AdjGraph) -> Partition:
    """Mutual reachability from a bitset transitive closure."""
    n = g.n
    reach = [1 << v for v in range(n)]
    for u in range(n):
        for s in range(g.fwd_offsets[u], g.fwd_offsets[u + 1]):
            reach[u] |= 1 << g.fwd_neighbors[s]
    for k in range(n):
        bit, rk = 1 << k, reach[k]
        for i in range(n):
            if reach[i] & bit:
                reach[i] |= rk
    # equal closures <=> mutually reachable (closures are reflexive)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(reach[v], []).append(v)
    return canonical(groups.values())


def ref_toposort(g: AdjGraph) -> Optional[list[int]]:
    """Kahn's algorithm; None if the graph has a cycle."""
    n = g.n
    indeg = [0] * n
    for w in g.fwd_neighbors:
        indeg[w] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    order = []
    while ready:
        u = ready.pop()
        order.append(u)
        for s in range(g.fwd_offsets[u], g.fwd_offsets[u + 1]):
            w = g.fwd_neighbors[s]
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order if len(order) == n else None


def is_topological(g: AdjGraph, order: Sequence[int]) -> bool:
    """Every vertex exactly once and every edge pointing forward."""
    if len(order) != g.n:
        return False
    pos = [-1] * g.n
    for k, v in enumerate(order):
        if pos[v] != -1:
            return False
        pos[v] = k
    for u in range(g.n):
        for s in range(g.fwd_offsets[u], g.fwd_offsets[u + 1]):
            if pos[u] >= pos[g.fwd_neighbors[s]]:
                return False
    return True


def has_edge(g: AdjGraph, u: int, v: int) -> bool:
    return v in g.neighbors(u)


def ref_articulation_points(g: AdjGraph) -> set[int]:
    """Classical cut vertices, for optional cross-checks."""
    n = g.n
    off, nbr = g.fwd_offsets, g.fwd_neighbors
    disc = [-1] * n
    low = [0] * n
    cut: set[int] = set()
    t = 0
    for r in range(n):
        if disc[r] != -1:
            continue
        disc[r] = low[r] = t
        t += 1
        children = 0
        stack = [[r, -1, off[r], False]]
        while stack:
            fr = stack[-1]
            u, p, i = fr[0], fr[1], fr[2]
            if i < off[u + 1]:
                fr[2] = i + 1
                w = nbr[i]
                if w == p and not fr[3]:
                    fr[3] = True
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    if u == r:
                        children += 1
                    stack.append([w, u, off[w], False])
                elif disc[w] < low[u]:
                    low[u] = disc[w]
            else:
                stack.pop()
                if stack:
                    pu = stack[-1][0]
                    low[pu] = min(low[pu], low[u])
                    if pu != r and low[u] >= disc[pu]:
                        cut.add(pu)
        if children > 1:
            cut.add(r)
    return cut
