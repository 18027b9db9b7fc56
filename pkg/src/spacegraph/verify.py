"""Subject-versus-oracle equivalence over a generated corpus."""
from __future__ import annotations

from collections import Counter
from typing import Callable

from . import bridges, dfs, order
from .graphrep import AdjGraph
from .oracle import (GenSpec, SplitMix64, brute_bridges, brute_scc, canonical, generate,
                     has_edge, is_topological, ref_bridges, ref_dfs, ref_scc, ref_toposort)

VERIFY_ALGOS = ("dfs", "rpo", "toposort", "scc", "sc_test", "bridges", "two_ec_test")


def check_dfs(g: AdjGraph) -> bool:
    events: list = []
    dfs.dfs_run(g, events.append)
    return events == ref_dfs(g).events


def check_rpo(g: AdjGraph) -> bool:
    forest = dfs.dfs_run(g)
    return list(order.rpo_stream(forest)) == ref_dfs(g).finish_order[::-1]


def check_toposort(g: AdjGraph) -> bool:
    try:
        got = list(order.toposort(g))
    except order.CyclicError as exc:
        u, w = exc.witness
        return ref_toposort(g) is None and has_edge(g, u, w)
    return is_topological(g, got) and got == ref_dfs(g).finish_order[::-1]


def check_scc(g: AdjGraph) -> bool:
    got = canonical(members for _, members in order.scc(g))
    return got == ref_scc(g) == brute_scc(g)


def check_sc_test(g: AdjGraph) -> bool:
    return order.sc_test(g) == (len(ref_scc(g)) == 1)


def _bridge_truth(g: AdjGraph) -> set[tuple[int, int]]:
    truth = ref_bridges(g)
    if g.n <= 9 and truth != brute_bridges(g):
        raise AssertionError("lowpoint oracle disagrees with edge deletion")
    return truth


def check_bridges(g: AdjGraph) -> bool:
    got = [(min(e), max(e)) for e in bridges.find_bridges(g).bridges]
    return len(got) == len(set(got)) and set(got) == _bridge_truth(g)


def check_two_ec_test(g: AdjGraph) -> bool:
    roots = sum(1 for e in ref_dfs(g).events if e.type == "new_root")
    expect = g.n >= 2 and roots == 1 and not _bridge_truth(g)
    return bridges.two_ec_test(g) == expect


CHECKS: dict[str, Callable[[AdjGraph], bool]] = {
    "dfs": check_dfs,
    "rpo": check_rpo,
    "toposort": check_toposort,
    "scc": check_scc,
    "sc_test": check_sc_test,
    "bridges": check_bridges,
    "two_ec_test": check_two_ec_test,
}


def corpus_graph(algo: str, rng: SplitMix64) -> AdjGraph:
    """One random graph suited to ``algo``; small enough for brute force."""
    n = 1 + rng.below(40)
    m = rng.below(3 * n + 1)
    seed = rng.next()
    if algo in ("bridges", "two_ec_test"):
        kind = "gnm-undirected" if n > 1 else "path"
    elif algo in ("dfs", "rpo"):
        kind = ("gnm-undirected", "gnm-directed")[rng.below(2)] if n > 1 else "gnm-directed"
    elif algo == "toposort":
        kind = "random-dag" if (rng.below(2) and n > 1) else "gnm-directed"
    else:
        kind = "gnm-directed"
    return generate(GenSpec(kind, n, m, seed))


def run_verify(seed: int = 42, trials: int = 200) -> dict[str, tuple[int, int]]:
    """Per algorithm, (passed, trials)."""
    out: dict[str, tuple[int, int]] = {}
    for k, algo in enumerate(VERIFY_ALGOS):
        rng = SplitMix64(seed * 1000003 + k)
        ok = Counter()
        for _ in range(trials):
            ok[CHECKS[algo](corpus_graph(algo, rng))] += 1
        out[algo] = (ok[True], trials)
    return out
