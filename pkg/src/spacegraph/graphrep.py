"""Read-only adjacency-array graphs.

A graph is a pair of arrays per direction: ``offsets`` (n + 1 segment
starts) and ``neighbors`` (the concatenated neighbor lists).  Position ``s``
of ``neighbors`` is an *edge slot*.  Directed graphs also carry the
in-neighbor arrays, built at load time and charged to the input.

Edge-list text format::

    # comment
    n m directed|undirected
    u v
    ...

Binary format (little endian): a 32-byte header of four 64-bit fields
(magic ``b"SGR1\\0\\0\\0\\0"``, n, m, flags with bit 0 = directed), then
``fwd_offsets`` (n + 1 uint32), ``fwd_neighbors`` (uint32), and for directed
graphs ``rev_offsets`` and ``rev_neighbors`` in the same layout.
"""
from __future__ import annotations

import heapq
import struct
from array import array
from dataclasses import dataclass
from functools import cached_property
from typing import BinaryIO, Iterable, Optional, TextIO

from .bitvec import BitVec

MAGIC = b"SGR1\0\0\0\0"
_HEADER = struct.Struct("<8sQQQ")
_U32 = "I"


class GraphParseError(ValueError):
    """Malformed graph input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _csr(n: int, tails: Iterable[int], heads: Iterable[int]) -> tuple[array, array]:
    # stable counting sort of (tail, head) pairs by tail
    tails = list(tails)
    heads = list(heads)
    counts = [0] * (n + 1)
    for t in tails:
        counts[t + 1] += 1
    for v in range(n):
        counts[v + 1] += counts[v]
    offsets = array(_U32, counts)
    fill = counts[:-1]
    nbrs = array(_U32, bytes(4 * len(tails)))
    for t, h in zip(tails, heads):
        nbrs[fill[t]] = h
        fill[t] += 1
    return offsets, nbrs


@dataclass(frozen=True, eq=False)
class AdjGraph:
    n: int
    m: int
    directed: bool
    fwd_offsets: array
    fwd_neighbors: array
    rev_offsets: Optional[array] = None
    rev_neighbors: Optional[array] = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], directed: bool) -> "AdjGraph":
        edges = list(edges)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has a vertex id outside [0, {n})")
        if directed:
            fo, fn = _csr(n, (u for u, _ in edges), (v for _, v in edges))
            ro, rn = _csr(n, (v for _, v in edges), (u for u, _ in edges))
            return cls(n, len(edges), True, fo, fn, ro, rn)
        tails: list[int] = []
        heads: list[int] = []
        for u, v in edges:
            tails += (u, v)
            heads += (v, u)
        fo, fn = _csr(n, tails, heads)
        return cls(n, len(edges), False, fo, fn)

    @property
    def num_slots(self) -> int:
        return len(self.fwd_neighbors)

    def degree(self, v: int) -> int:
        return self.fwd_offsets[v + 1] - self.fwd_offsets[v]

    def neighbors(self, v: int) -> array:
        return self.fwd_neighbors[self.fwd_offsets[v]:self.fwd_offsets[v + 1]]

    def in_neighbors(self, v: int) -> array:
        if not self.directed:
            return self.neighbors(v)
        return self.rev_neighbors[self.rev_offsets[v]:self.rev_offsets[v + 1]]

    @property
    def child_offsets(self) -> array:
        """Segments holding parent marks: in-edges if directed, else own list."""
        return self.rev_offsets if self.directed else self.fwd_offsets

    @property
    def child_neighbors(self) -> array:
        return self.rev_neighbors if self.directed else self.fwd_neighbors

    def transpose(self) -> "AdjGraph":
        if not self.directed:
            raise ValueError("transpose of an undirected graph")
        return AdjGraph(self.n, self.m, True, self.rev_offsets, self.rev_neighbors,
                        self.fwd_offsets, self.fwd_neighbors)

    def input_bits(self) -> int:
        """Size of the read-only representation (32-bit entries)."""
        words = len(self.fwd_offsets) + len(self.fwd_neighbors)
        if self.directed:
            words += len(self.rev_offsets) + len(self.rev_neighbors)
        return 32 * words

    @cached_property
    def slots(self) -> "SlotMap":
        return SlotMap(self.fwd_offsets)

    @cached_property
    def child_slots(self) -> "SlotMap":
        return SlotMap(self.rev_offsets) if self.directed else self.slots

    def edges(self) -> list[tuple[int, int]]:
        """An edge list whose reload reproduces these arrays exactly."""
        return _recover_edges(self)

    def same_arrays(self, other: "AdjGraph") -> bool:
        return (self.n, self.m, self.directed) == (other.n, other.m, other.directed) and \
            self.fwd_offsets == other.fwd_offsets and self.fwd_neighbors == other.fwd_neighbors and \
            self.rev_offsets == other.rev_offsets and self.rev_neighbors == other.rev_neighbors


class SlotMap:
    """Unary degree-sequence boundary vector: ``d_v`` zeros then a one per vertex.

    Gives the bijection between slots and (vertex, local index) pairs.
    """

    def __init__(self, offsets: array) -> None:
        self.n = len(offsets) - 1
        self.num_slots = offsets[-1] if self.n >= 0 and len(offsets) else 0

        def unary():
            for v in range(self.n):
                yield from (0,) * (offsets[v + 1] - offsets[v])
                yield 1

        self.boundary = BitVec.from_bits(unary())

    def bits_of(self) -> int:
        return self.boundary.bits_of()

    def segment(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")
        b = self.boundary
        lo = 0 if v == 0 else b.select1(v) + 1 - v
        hi = b.select1(v + 1) - v
        return lo, hi

    def slot_of(self, v: int, i: int) -> int:
        lo, hi = self.segment(v)
        if not 0 <= i < hi - lo:
            raise IndexError(f"local index {i} out of range for vertex {v}")
        return lo + i

    def slot_to_vertex(self, s: int) -> tuple[int, int]:
        if not 0 <= s < self.num_slots:
            raise IndexError(f"slot {s} out of range [0, {self.num_slots})")
        pos = self.boundary.select0(s + 1)
        v = self.boundary.rank1(pos)
        lo = 0 if v == 0 else self.boundary.select1(v) + 1 - v
        return v, s - lo


def _recover_edges(g: AdjGraph) -> list[tuple[int, int]]:
    # Pair each slot with its twin: the k-th occurrence of v in u's list
    # belongs to the same edge as the k-th occurrence of u in v's list (the
    # in-list for directed graphs).  Undirected self-loops occupy two
    # consecutive occurrences.  Edges are then ordered so that every list's
    # order is preserved.
    off, nbr = g.fwd_offsets, g.fwd_neighbors
    o_off, o_nbr = (g.rev_offsets, g.rev_neighbors) if g.directed else (off, nbr)
    twins: dict[tuple[int, int], list[int]] = {}
    for v in range(g.n):
        for s in range(o_off[v], o_off[v + 1]):
            twins.setdefault((v, o_nbr[s]), []).append(s)
    fwd_edge = [-1] * len(nbr)
    other_edge = [-1] * len(o_nbr) if g.directed else fwd_edge
    ends: list[tuple[int, int]] = []
    bad = ValueError("adjacency arrays do not come from any edge list")
    for u in range(g.n):
        seen: dict[int, int] = {}
        for s in range(off[u], off[u + 1]):
            v = nbr[s]
            k = seen.get(v, 0)
            seen[v] = k + 1
            if fwd_edge[s] != -1:
                continue
            if not g.directed and (v < u or (v == u and k % 2)):
                raise bad
            k_twin = k + 1 if (not g.directed and u == v) else k
            try:
                t = twins[(v, u)][k_twin]
            except (KeyError, IndexError):
                raise bad from None
            if other_edge[t] != -1:
                raise bad
            fwd_edge[s] = other_edge[t] = len(ends)
            ends.append((u, v))

    succ: list[list[int]] = [[] for _ in ends]
    indeg = [0] * len(ends)
    for offsets, owner in ((off, fwd_edge), (o_off, other_edge)) if g.directed else ((off, fwd_edge),):
        for v in range(g.n):
            prev = -1
            for s in range(offsets[v], offsets[v + 1]):
                e = owner[s]
                if prev != -1 and prev != e:
                    succ[prev].append(e)
                    indeg[e] += 1
                prev = e
    heap = [e for e in range(len(ends)) if indeg[e] == 0]
    heapq.heapify(heap)
    order: list[tuple[int, int]] = []
    while heap:
        e = heapq.heappop(heap)
        order.append(ends[e])
        for f in succ[e]:
            indeg[f] -= 1
            if indeg[f] == 0:
                heapq.heappush(heap, f)
    if len(order) != len(ends):
        raise bad
    return order


def load_edgelist(stream: TextIO | Iterable[str]) -> AdjGraph:
    header = None
    edges: list[tuple[int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[2] not in ("directed", "undirected"):
                raise GraphParseError("expected header 'n m directed|undirected'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError("non-integer vertex or edge count in header", lineno) from None
            if n < 0 or m < 0:
                raise GraphParseError("negative count in header", lineno)
            header = (n, m, parts[2] == "directed")
            continue
        if len(parts) != 2:
            raise GraphParseError("expected edge line 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("non-integer vertex id", lineno) from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex id out of range [0, {n})", lineno)
        if len(edges) == header[1]:
            raise GraphParseError(f"more than the {header[1]} edges declared", lineno)
        edges.append((u, v))
    if header is None:
        raise GraphParseError("missing header line", lineno or None)
    n, m, directed = header
    if len(edges) != m:
        raise GraphParseError(f"header declares {m} edges, found {len(edges)}", lineno)
    return AdjGraph.from_edges(n, edges, directed)


def dump_edgelist(g: AdjGraph) -> str:
    kind = "directed" if g.directed else "undirected"
    lines = [f"{g.n} {g.m} {kind}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def dump_binary(g: AdjGraph) -> bytes:
    parts = [_HEADER.pack(MAGIC, g.n, g.m, 1 if g.directed else 0)]
    arrays = [g.fwd_offsets, g.fwd_neighbors]
    if g.directed:
        arrays += [g.rev_offsets, g.rev_neighbors]
    for a in arrays:
        a = array(_U32, a)
        if a.itemsize != 4:
            raise RuntimeError("platform lacks a 32-bit unsigned array type")
        if struct.pack("=I", 1) != struct.pack("<I", 1):
            a.byteswap()
        parts.append(a.tobytes())
    return b"".join(parts)


def load_binary(data: bytes | BinaryIO) -> AdjGraph:
    if not isinstance(data, (bytes, bytearray, memoryview)):
        data = data.read()
    data = bytes(data)
    if len(data) < _HEADER.size:
        raise GraphParseError("binary input shorter than header")
    magic, n, m, flags = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise GraphParseError("bad magic in binary header")
    directed = bool(flags & 1)
    pos = _HEADER.size

    def take(count: int) -> array:
        nonlocal pos
        end = pos + 4 * count
        if end > len(data):
            raise GraphParseError("binary input truncated")
        a = array(_U32)
        a.frombytes(data[pos:end])
        if struct.pack("=I", 1) != struct.pack("<I", 1):
            a.byteswap()
        pos = end
        return a

    slots = m if directed else 2 * m
    fo, fn = take(n + 1), take(slots)
    ro = rn = None
    if directed:
        ro, rn = take(n + 1), take(slots)
    if pos != len(data):
        raise GraphParseError("trailing bytes after binary graph")
    for off, nb in ((fo, fn), (ro, rn)) if directed else ((fo, fn),):
        if off[0] != 0 or off[n] != slots or any(off[i] > off[i + 1] for i in range(n)):
            raise GraphParseError("offsets are not monotone or do not cover all slots")
        if any(x >= n for x in nb):
            raise GraphParseError("neighbor id out of range")
    return AdjGraph(n, m, directed, fo, fn, ro, rn)
