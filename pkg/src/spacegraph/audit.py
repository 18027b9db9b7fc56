"""Working-space accounting.

Algorithms register every structure they allocate with a :class:`SpaceLedger`
and release it when done.  Sizes come from each structure's ``bits_of()``;
scalar registers are charged as one fixed bucket.  The input graph is
reported separately and never counts towards the peak.
"""
from __future__ import annotations

import hashlib
import math
import time
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Iterable, Optional

REGISTER_BITS = 1024


@dataclass(frozen=True)
class LedgerEntry:
    name: str
    bits: int
    indexed_by: str  # "vertex", "slot" or "scalar"
    field_bits: Optional[float]  # field width; mean payload width for packed arrays


@dataclass
class SpaceLedger:
    n: int = 0
    input_bits: int = 0
    input_note: str = "adjacency arrays"
    entries: list[LedgerEntry] = field(default_factory=list)
    live: dict[str, int] = field(default_factory=dict)
    current_bits: int = 0
    peak_working_bits: int = 0

    def __post_init__(self) -> None:
        self._charge("registers", REGISTER_BITS, "scalar", None)

    def _charge(self, name: str, bits: int, indexed_by: str, field_bits: Optional[float]) -> None:
        if name in self.live:
            raise ValueError(f"structure {name!r} is already live")
        self.entries.append(LedgerEntry(name, bits, indexed_by, field_bits))
        self.live[name] = bits
        self.current_bits += bits
        self.peak_working_bits = max(self.peak_working_bits, self.current_bits)

    def alloc(self, name: str, struct: Any, indexed_by: str, field_bits: Optional[float] = None):
        """Register ``struct`` (anything with ``bits_of()``) and return it.

        Packed variable-width arrays expose ``payload_bits``; their field
        width is the mean payload per vertex, not counting the index that
        locates the fields.
        """
        if field_bits is None and indexed_by == "vertex" and self.n and hasattr(struct, "payload_bits"):
            field_bits = struct.payload_bits / self.n
        self._charge(name, struct.bits_of(), indexed_by, field_bits)
        return struct

    def free(self, name: str) -> None:
        self.current_bits -= self.live.pop(name)

    def summary(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for e in self.entries:
            out[e.name] = e.bits
        return out

    def nlogn_violations(self) -> list[LedgerEntry]:
        """Vertex-indexed structures whose per-vertex width reaches ceil(lg n).

        Fixed-width arrays are judged by their declared width, packed arrays
        by mean payload width, anything else by total bits over n.
        """
        if self.n < 4:
            return []
        limit = math.ceil(math.log2(self.n))
        bad = []
        for e in self.entries:
            if e.indexed_by != "vertex":
                continue
            width = e.field_bits if e.field_bits is not None else e.bits / self.n
            if width >= limit:
                bad.append(e)
        return bad

    def report(self) -> str:
        lines = [f"# input_bits {self.input_bits} ({self.input_note}; not working space)"]
        lines += [f"{e.name}\t{e.bits}\t{e.indexed_by}" for e in self.entries]
        lines.append(f"peak_working_bits\t{self.peak_working_bits}")
        return "\n".join(lines) + "\n"


class _NullLedger:
    """Stand-in when nobody is measuring."""

    def alloc(self, name, struct, indexed_by, field_bits=None):
        return struct

    def free(self, name) -> None:
        pass


NULL_LEDGER: Any = _NullLedger()

ALGORITHMS = ("dfs", "rpo", "toposort", "scc", "sc_test", "bridges", "two_ec_test")


def _run_lines(algo: str, g, ledger) -> list[str]:
    # imported here: the algorithm modules import this one
    from . import bridges, dfs, order

    if algo == "dfs":
        f = dfs.dfs_run(g, ledger=ledger)
        return [f"{u} {v}" for u, v in f.tree_edges()]
    if algo == "rpo":
        return [str(v) for v in order.rpo_stream(dfs.dfs_run(g, ledger=ledger))]
    if algo == "toposort":
        try:
            return [str(v) for v in order.toposort(g, ledger=ledger)]
        except order.CyclicError as exc:
            return [f"cyclic {exc.witness[0]} {exc.witness[1]}"]
    if algo == "scc":
        return [f"{c}: " + " ".join(map(str, members)) for c, members in order.scc(g, ledger=ledger)]
    if algo == "sc_test":
        return [str(order.sc_test(g, ledger=ledger)).lower()]
    if algo == "bridges":
        res = bridges.find_bridges(g, ledger=ledger)
        return [f"{min(e)} {max(e)}" for e in res.bridges]
    if algo == "two_ec_test":
        return [str(bridges.two_ec_test(g, ledger=ledger)).lower()]
    raise ValueError(f"unknown algorithm {algo!r}; expected one of {', '.join(ALGORITHMS)}")


def _input_note(g) -> str:
    if g.directed:
        return "forward and reverse adjacency arrays, both charged to input"
    return "adjacency arrays"


def run_audited(algo: str, g) -> tuple[str, SpaceLedger]:
    """Run ``algo`` on ``g`` under a fresh ledger; returns (sha256 of output, ledger)."""
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; expected one of {', '.join(ALGORITHMS)}")
    ledger = SpaceLedger(n=g.n, input_bits=g.input_bits(), input_note=_input_note(g))
    lines = _run_lines(algo, g, ledger)
    digest = hashlib.sha256("".join(line + "\n" for line in lines).encode()).hexdigest()
    return digest, ledger


@dataclass(frozen=True)
class ScalingRow:
    algo: str
    n: int
    m: int
    slots: int
    peak_bits: int
    nanos: int
    ok: bool = True
    violations: tuple[str, ...] = ()  # structures tripping the n lg n guard

    @property
    def bits_per_nm(self) -> float:
        return self.peak_bits / (self.n + self.m)

    @property
    def bits_per_slot(self) -> float:
        # the per-(n + total slots) constant
        return self.peak_bits / (self.n + self.slots)

    @property
    def nanos_per_nm(self) -> float:
        return self.nanos / (self.n + self.m)

    def tsv(self) -> str:
        return (f"{self.algo}\t{self.n}\t{self.m}\t{self.peak_bits}\t{self.bits_per_nm:.4f}\t"
                f"{self.nanos}\t{self.nanos_per_nm:.2f}\t{'pass' if self.ok else 'fail'}")


TSV_HEADER = "algo\tn\tm\tpeak_bits\tbits_per_nm\tnanos\tnanos_per_nm\tpass|fail"

# which generator feeds each algorithm on the ladder
LADDER_KIND = {
    "dfs": "gnm-undirected",
    "bridges": "gnm-undirected",
    "two_ec_test": "gnm-undirected",
    "rpo": "gnm-directed",
    "scc": "gnm-directed",
    "sc_test": "gnm-directed",
    "toposort": "random-dag",
}


def default_ladder(lo: int = 10, hi: int = 16, factor: int = 4) -> list[tuple[int, int]]:
    return [(1 << k, factor << k) for k in range(lo, hi + 1)]


def scaling_report(algo: str, sizes: Iterable[tuple[int, int]], seed: int = 42,
                   repeats: int = 1, clock: Callable[[], int] = time.perf_counter_ns) -> list[ScalingRow]:
    """Measure peak bits and wall time of ``algo`` over ascending ``sizes``.

    Each row is marked failing when its peak/(n+m) exceeds twice the value
    at the smallest size.  Wall time is the minimum over ``repeats`` runs.
    """
    from .oracle import GenSpec, generate

    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; expected one of {', '.join(ALGORITHMS)}")
    rows: list[ScalingRow] = []
    for n, m in sizes:
        g = generate(GenSpec(LADDER_KIND[algo], n, m, seed))
        best = None
        ledger = None
        for _ in range(max(1, repeats)):
            led = SpaceLedger(n=g.n, input_bits=g.input_bits())
            t0 = clock()
            _run_lines(algo, g, led)
            dt = clock() - t0
            if best is None or dt < best:
                best = dt
            ledger = led
        bad = tuple(e.name for e in ledger.nlogn_violations())
        rows.append(ScalingRow(algo, n, m, g.num_slots, ledger.peak_working_bits, best,
                               violations=bad))
    return flag_rows(rows)


def flag_rows(rows: list[ScalingRow]) -> list[ScalingRow]:
    """Mark rows whose peak/(n+m) exceeds twice the first row's value."""
    if not rows:
        return rows
    base = rows[0].bits_per_nm
    return [replace(r, ok=r.bits_per_nm <= 2 * base) for r in rows]
