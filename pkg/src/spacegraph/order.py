"""Reverse postorder from a stored DFS forest, and what it buys.

Reverse postorder of a forest equals its preorder taken with both the root
order and every child order reversed: if postorder of a tree with children
``c1..ck`` is ``post(c1) .. post(ck) root``, its reversal is
``root rev(post(ck)) .. rev(post(c1))``.  So the stream starts at the last
root, repeatedly descends into the rightmost tree-marked slot not yet taken,
and climbs back through the parent marks when a vertex runs out of children.
Only a packed per-vertex cursor (the slot index of the child currently being
explored) is needed beyond the forest itself.
"""
from __future__ import annotations

from typing import Iterator, Optional

from .audit import NULL_LEDGER, SpaceLedger
from .bitvec import CursorArray
from .dfs import DISCOVER, DfsEngine, DfsForest, UsageError, dfs_run
from .graphrep import AdjGraph


class CyclicError(Exception):
    """The digraph has a cycle; ``witness`` is a back edge (u, w) on it."""

    def __init__(self, witness: tuple[int, int]) -> None:
        self.witness = witness
        super().__init__(f"graph has a cycle through edge {witness[0]} -> {witness[1]}")


def rpo_stream(forest: DfsForest, ledger: Optional[SpaceLedger] = None) -> Iterator[int]:
    """Yield the forest's vertices in reverse postorder."""
    if ledger is None:
        ledger = forest.ledger
    forest.freeze()
    g = forest.graph
    off, nbr = g.fwd_offsets, g.fwd_neighbors
    coff, cnbr = g.child_offsets, g.child_neighbors
    A, P = forest.A, forest.P
    cur = ledger.alloc("rpo.cursors", CursorArray(off), "vertex")
    try:
        for root in forest.R.iter_set(reverse=True):
            yield root
            u = root
            limit = off[u + 1]
            while True:
                lo = off[u]
                s = A.rightmost_set_in_range(lo, limit)
                if s is not None:
                    cur.set(u, s - lo)
                    u = nbr[s]
                    yield u
                    limit = off[u + 1]
                    continue
                if u == root:
                    break
                p = cnbr[P.rightmost_set_in_range(coff[u], coff[u + 1])]
                u = p
                limit = off[u] + cur.get(u)
    finally:
        ledger.free("rpo.cursors")


def _require_directed(g: AdjGraph, what: str) -> None:
    if not g.directed:
        raise UsageError(f"{what} needs a directed graph")


def toposort(g: AdjGraph, ledger: SpaceLedger = NULL_LEDGER) -> Iterator[int]:
    """Topological order as a stream; raises :class:`CyclicError` up front."""
    _require_directed(g, "toposort")
    forest = dfs_run(g, ledger=ledger)
    if forest.cyclic:
        raise CyclicError(forest.witness)
    return rpo_stream(forest, ledger)


def scc(g: AdjGraph, ledger: SpaceLedger = NULL_LEDGER) -> Iterator[tuple[int, list[int]]]:
    """Strongly connected components as ``(component id, members)`` pairs.

    Vertices are pulled one at a time from the reverse postorder of the
    graph; each one not yet assigned seeds a traversal of the transpose.
    """
    _require_directed(g, "scc")
    forest = dfs_run(g, ledger=ledger)
    second = DfsEngine(g.transpose(), ledger, prefix="scc")
    seen = second.visited.words
    cid = 0
    for v in rpo_stream(forest, ledger):
        if (seen[v >> 6] >> (v & 63)) & 1:
            continue
        members = [ev.u for ev in second.explore(v, DISCOVER)]
        yield cid, members
        cid += 1


def sc_test(g: AdjGraph, ledger: SpaceLedger = NULL_LEDGER) -> bool:
    """True iff the digraph has exactly one strongly connected component."""
    _require_directed(g, "sc_test")
    count = 0
    for _ in scc(g, ledger):
        count += 1
        if count > 1:
            return False
    return count == 1
