"""Depth-first search in O(n + m) bits without cross pointers.

The traversal keeps no stack of vertex ids.  Tree edges are marked in a
slot-indexed vector ``A``; each non-root vertex marks, in its own child-side
segment (its adjacency list if undirected, its in-list if directed), the slot
that points back to its parent in a second vector ``P``.  Backtracking from
``v`` reads the parent off ``P`` and resumes the parent's scan at a packed
per-vertex cursor.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple, Optional

from .audit import NULL_LEDGER, SpaceLedger
from .bitvec import BitVec, Bits, CursorArray, MarkVec
from .graphrep import AdjGraph

BACK = "back"
FORWARD_OR_CROSS = "forward-or-cross"
PARALLEL_OR_SELF = "parallel-or-self"

NONE, DISCOVER, ALL = 0, 1, 2


class DfsEvent(NamedTuple):
    """One traversal event; unused fields are -1 / empty.

    ``type`` is one of new_root, discover, tree_edge, non_tree_edge, retreat,
    finish.  For tree and non-tree edges ``u`` is the scanning vertex, ``v``
    the neighbor and ``slot`` the forward slot.  For retreat ``u`` is the
    finished child and ``v`` its parent.
    """

    type: str
    u: int
    v: int = -1
    slot: int = -1
    kind: str = ""

    def __str__(self) -> str:
        if self.type in ("new_root", "discover", "finish"):
            return f"{self.type} {self.u}"
        if self.type == "retreat":
            return f"retreat {self.u} {self.v}"
        if self.type == "tree_edge":
            return f"tree_edge {self.u} {self.v} {self.slot}"
        return f"non_tree_edge {self.u} {self.v} {self.slot} {self.kind}"


class StateError(RuntimeError):
    """Query on a vertex the traversal has not reached."""


class UsageError(ValueError):
    """Algorithm applied to the wrong kind of graph."""


@dataclass(eq=False)
class DfsForest:
    """Result of a full traversal: tree marks ``A``, parent marks ``P``, roots ``R``.

    ``A`` and ``P`` are mutable :class:`MarkVec` until :meth:`freeze`
    replaces them by static :class:`BitVec` copies.
    """

    graph: AdjGraph
    A: MarkVec | BitVec
    P: MarkVec | BitVec
    R: Bits
    visited: Optional[Bits]
    finished: Optional[Bits]
    cursors: Optional[CursorArray]
    cyclic: bool = False
    witness: Optional[tuple[int, int]] = None
    ledger: SpaceLedger = field(default=NULL_LEDGER, repr=False)

    def parent(self, v: int) -> Optional[int]:
        """Parent of ``v`` read off its parent mark; None for roots."""
        g = self.graph
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range [0, {g.n})")
        if self.R[v]:
            return None
        coff = g.child_offsets
        s = self.P.rightmost_set_in_range(coff[v], coff[v + 1])
        if s is None:
            raise StateError(f"vertex {v} was not visited")
        return g.child_neighbors[s]

    def parent_slot(self, v: int) -> Optional[int]:
        if self.R[v]:
            return None
        coff = self.graph.child_offsets
        return self.P.rightmost_set_in_range(coff[v], coff[v + 1])

    def roots(self) -> list[int]:
        return list(self.R.iter_set())

    def tree_edges(self) -> list[tuple[int, int]]:
        g = self.graph
        out = []
        for v in range(g.n):
            p = self.parent(v)
            if p is not None:
                out.append((p, v))
        return out

    def freeze(self) -> "DfsForest":
        """Drop traversal-only state and make ``A``/``P`` static (in place)."""
        led = self.ledger
        for name in ("visited", "finished", "cursors"):
            if getattr(self, name) is not None:
                led.free(f"dfs.{name}")
                setattr(self, name, None)
        if isinstance(self.A, MarkVec):
            led.free("dfs.A")
            self.A = self.A.freeze()
            led.alloc("dfs.A", self.A, "slot")
        if isinstance(self.P, MarkVec):
            led.free("dfs.P")
            self.P = self.P.freeze()
            led.alloc("dfs.P", self.P, "slot")
        return self


class DfsEngine:
    """Reusable traversal state over one graph.

    ``explore(root)`` runs one tree; visited vertices stay visited across
    calls, which is what the second pass of the SCC algorithm relies on.
    """

    def __init__(self, g: AdjGraph, ledger: SpaceLedger = NULL_LEDGER, prefix: str = "dfs",
                 check: bool = __debug__) -> None:
        self.g = g
        self.ledger = ledger
        self.prefix = prefix
        self.check = check
        self.A = ledger.alloc(f"{prefix}.A", MarkVec(g.num_slots), "slot")
        self.P = ledger.alloc(f"{prefix}.P", MarkVec(len(g.child_neighbors)), "slot")
        self.R = ledger.alloc(f"{prefix}.R", Bits(g.n), "vertex", 1)
        self.visited = ledger.alloc(f"{prefix}.visited", Bits(g.n), "vertex", 1)
        self.finished = ledger.alloc(f"{prefix}.finished", Bits(g.n), "vertex", 1)
        self.cursors = ledger.alloc(f"{prefix}.cursors", CursorArray(g.fwd_offsets), "vertex")
        self.cyclic = False
        self.witness: Optional[tuple[int, int]] = None

    def forest(self) -> DfsForest:
        return DfsForest(self.g, self.A, self.P, self.R, self.visited, self.finished,
                         self.cursors, self.cyclic, self.witness, self.ledger)

    def explore(self, root: int, emit: int = ALL) -> Iterator[DfsEvent]:
        """Traverse the tree rooted at unvisited ``root``.

        ``emit`` selects what is yielded: ``NONE``, ``DISCOVER`` (only
        discover events) or ``ALL``.
        """
        g = self.g
        directed = g.directed
        off, nbr = g.fwd_offsets, g.fwd_neighbors
        coff, cnbr = g.child_offsets, g.child_neighbors
        A, P, R, cursors = self.A, self.P, self.R, self.cursors
        vw = self.visited.words
        fw = self.finished.words

        R.set(root)
        vw[root >> 6] |= 1 << (root & 63)
        if emit == ALL:
            yield DfsEvent("new_root", root)
        if emit:
            yield DfsEvent("discover", root)
        u = root
        i, hi = off[u], off[u + 1]
        parent = -1
        pslot = -1
        while True:
            if i < hi:
                w = nbr[i]
                if not (vw[w >> 6] >> (w & 63)) & 1:
                    A.set1(i)
                    cursors.set(u, i - off[u] + 1)
                    j = coff[w]
                    while cnbr[j] != u:
                        j += 1
                    P.set1(j)
                    vw[w >> 6] |= 1 << (w & 63)
                    if emit == ALL:
                        yield DfsEvent("tree_edge", u, w, i)
                    if emit:
                        yield DfsEvent("discover", w)
                    parent, pslot = u, j
                    u = w
                    i, hi = off[w], off[w + 1]
                    continue
                if directed:
                    if w == u:
                        kind = PARALLEL_OR_SELF
                        if not self.cyclic:
                            self.cyclic, self.witness = True, (u, w)
                    elif not (fw[w >> 6] >> (w & 63)) & 1:
                        kind = BACK
                        if not self.cyclic:
                            self.cyclic, self.witness = True, (u, w)
                    else:
                        kind = FORWARD_OR_CROSS
                    if emit == ALL:
                        yield DfsEvent("non_tree_edge", u, w, i, kind)
                elif i != pslot and not (fw[w >> 6] >> (w & 63)) & 1:
                    # finished neighbors are descendants whose edge was reported from below
                    if emit == ALL:
                        kind = PARALLEL_OR_SELF if (w == u or w == parent) else BACK
                        yield DfsEvent("non_tree_edge", u, w, i, kind)
                i += 1
                continue
            fw[u >> 6] |= 1 << (u & 63)
            if emit == ALL:
                yield DfsEvent("finish", u)
            if parent < 0:
                return
            v, u = u, parent
            if emit == ALL:
                yield DfsEvent("retreat", v, u)
            lo, hi = off[u], off[u + 1]
            i = lo + cursors.get(u)
            if self.check:
                last = A.rightmost_set_in_range(lo, hi)
                assert last is not None and i == last + 1, "cursor disagrees with tree marks"
            if (R.words[u >> 6] >> (u & 63)) & 1:
                parent = pslot = -1
            else:
                pslot = P.rightmost_set_in_range(coff[u], coff[u + 1])
                parent = cnbr[pslot]


def iter_dfs(g: AdjGraph, ledger: SpaceLedger = NULL_LEDGER,
             out: Optional[list] = None) -> Iterator[DfsEvent]:
    """Pull-based event stream of a full traversal (restarts in increasing id).

    When the stream is exhausted the forest is appended to ``out`` if given.
    """
    eng = DfsEngine(g, ledger)
    vw = eng.visited.words
    for r in range(g.n):
        if not (vw[r >> 6] >> (r & 63)) & 1:
            yield from eng.explore(r)
    if out is not None:
        out.append(eng.forest())


def dfs_run(g: AdjGraph, sink: Optional[Callable[[DfsEvent], None]] = None,
            ledger: SpaceLedger = NULL_LEDGER) -> DfsForest:
    """Run the full traversal; events go to ``sink`` if one is given."""
    eng = DfsEngine(g, ledger)
    vw = eng.visited.words
    emit = ALL if sink is not None else NONE
    for r in range(g.n):
        if not (vw[r >> 6] >> (r & 63)) & 1:
            for ev in eng.explore(r, emit):
                sink(ev)
    return eng.forest()
