"""Linear-time graph algorithms in O(n + m) bits of working space."""
from .bridges import BridgeResult, find_bridges, two_ec_test
from .dfs import DfsEngine, DfsEvent, DfsForest, StateError, UsageError, dfs_run, iter_dfs
from .graphrep import AdjGraph, GraphParseError, SlotMap, load_binary, load_edgelist
from .order import CyclicError, rpo_stream, scc, sc_test, toposort

__all__ = [
    "AdjGraph", "BridgeResult", "CyclicError", "DfsEngine", "DfsEvent", "DfsForest",
    "GraphParseError", "SlotMap", "StateError", "UsageError", "dfs_run", "find_bridges",
    "iter_dfs", "load_binary", "load_edgelist", "rpo_stream", "sc_test", "scc", "toposort",
    "two_ec_test",
]
