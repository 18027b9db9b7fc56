"""Bridges and 2-edge connectivity from a stored DFS forest.

A tree edge (u, v), u the parent, is a bridge exactly when no back edge
leaves the subtree of v for u or an ancestor of u.  We find the covered tree
edges with a chain decomposition replayed over the forest: vertices are
visited in preorder (walking the tree marks, no stack), and each back edge
from a descendant ``w`` to the current vertex ``u`` walks from ``w`` up the
parent marks until it meets an already chained vertex, flagging every tree
edge it climbs.  Tree edges left unflagged are the bridges.

Only proper ancestors of ``v`` can start a walk that climbs (parent(v), v),
and all of them precede ``v`` in preorder; so the verdict on that edge is
final as soon as ``v`` is reached, which lets the 2-edge-connectivity test
stop at the first bridge.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .audit import NULL_LEDGER, SpaceLedger
from .bitvec import Bits, CursorArray
from .dfs import DfsForest, UsageError, dfs_run
from .graphrep import AdjGraph


@dataclass
class BridgeResult:
    bridges: list[tuple[int, int]] = field(default_factory=list)
    chain_count: int = 0
    connected: bool = False
    two_edge_connected: bool = False
    walk_steps: int = 0
    complete: bool = True  # False when the sweep stopped at the first bridge


def find_bridges(g: AdjGraph, forest: Optional[DfsForest] = None,
                 ledger: SpaceLedger = NULL_LEDGER, stop_at_first: bool = False) -> BridgeResult:
    """Bridges as (parent, child) tree edges, in preorder of the child."""
    if g.directed:
        raise UsageError("bridges need an undirected graph")
    if forest is None:
        forest = dfs_run(g, ledger=ledger)
    forest.freeze()
    n = g.n
    off, nbr = g.fwd_offsets, g.fwd_neighbors
    A, P, R = forest.A, forest.P, forest.R
    seen = ledger.alloc("bridges.preorder_seen", Bits(n), "vertex", 1)
    chained = ledger.alloc("bridges.chain_visited", Bits(n), "vertex", 1)
    used = ledger.alloc("bridges.tree_edge_used", Bits(n), "vertex", 1)
    cur = ledger.alloc("bridges.cursors", CursorArray(off), "vertex")
    sw, cw, uw = seen.words, chained.words, used.words
    res = BridgeResult(connected=n >= 1 and R.popcount() == 1)
    try:
        for root in R.iter_set():
            u = root
            parent = -1
            descending = True
            while True:
                lo, hi = off[u], off[u + 1]
                if descending:
                    # first touch of u in preorder
                    sw[u >> 6] |= 1 << (u & 63)
                    pslot = -1
                    if parent >= 0:
                        pslot = P.rightmost_set_in_range(lo, hi)
                        if not (uw[u >> 6] >> (u & 63)) & 1:
                            res.bridges.append((parent, u))
                            if stop_at_first:
                                res.complete = False
                                return res
                    for s in range(lo, hi):
                        w = nbr[s]
                        if w == u or s == pslot or (sw[w >> 6] >> (w & 63)) & 1 or A[s]:
                            continue
                        # unseen non-tree neighbor: a descendant with a back edge to u
                        res.chain_count += 1
                        cw[u >> 6] |= 1 << (u & 63)
                        x = w
                        while not (cw[x >> 6] >> (x & 63)) & 1:
                            cw[x >> 6] |= 1 << (x & 63)
                            uw[x >> 6] |= 1 << (x & 63)
                            res.walk_steps += 1
                            x = nbr[P.rightmost_set_in_range(off[x], off[x + 1])]
                        res.walk_steps += 1
                    start = lo
                else:
                    start = lo + cur.get(u) + 1
                s = A.leftmost_set_in_range(start, hi)
                if s is not None:
                    cur.set(u, s - lo)
                    parent, u = u, nbr[s]
                    descending = True
                    continue
                if u == root:
                    break
                u = parent
                parent = -1 if R[u] else nbr[P.rightmost_set_in_range(off[u], off[u + 1])]
                descending = False
    finally:
        for name in ("preorder_seen", "chain_visited", "tree_edge_used", "cursors"):
            ledger.free(f"bridges.{name}")
    res.two_edge_connected = res.connected and n >= 2 and not res.bridges
    return res


def two_ec_test(g: AdjGraph, ledger: SpaceLedger = NULL_LEDGER) -> bool:
    """True iff ``g`` is connected, has at least two vertices and no bridge."""
    if g.directed:
        raise UsageError("2-edge connectivity needs an undirected graph")
    forest = dfs_run(g, ledger=ledger)
    if g.n < 2 or forest.R.popcount() != 1:
        return False
    res = find_bridges(g, forest, ledger, stop_at_first=True)
    return not res.bridges
