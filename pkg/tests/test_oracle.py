import pytest
from hypothesis import given
from hypothesis import strategies as st

from spacegraph.graphrep import AdjGraph, dump_binary
from spacegraph.oracle import (GenSpec, SplitMix64, brute_bridges, brute_scc, generate,
                               has_edge, is_topological, ref_articulation_points, ref_bridges,
                               ref_dfs, ref_scc, ref_toposort)

from .conftest import graphs


def test_splitmix_seed_zero_vectors():
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_below_stays_in_range():
    rng = SplitMix64(99)
    assert all(0 <= rng.below(7) < 7 for _ in range(1000))
    assert len({rng.below(7) for _ in range(1000)}) == 7


def test_path_generator():
    g = generate(GenSpec("path", 3))
    assert sorted(g.edges()) == [(0, 1), (1, 2)] and not g.directed


def test_generators_are_byte_deterministic():
    for kind in ("gnm-undirected", "gnm-directed", "random-dag", "random-tree-plus-k-edges"):
        spec = GenSpec(kind, 100, 300, 17)
        assert dump_binary(generate(spec)) == dump_binary(generate(spec))
    a = dump_binary(generate(GenSpec("gnm-directed", 100, 300, 1)))
    assert a != dump_binary(generate(GenSpec("gnm-directed", 100, 300, 2)))


@given(st.integers(2, 60), st.integers(0, 200), st.integers(0, 2**64 - 1))
def test_gnm_shape(n, m, seed):
    g = generate(GenSpec("gnm-undirected", n, m, seed))
    edges = g.edges()
    assert g.m == len(edges) == m
    assert all(0 <= u < n and 0 <= v < n and u != v for u, v in edges)
    d = generate(GenSpec("random-dag", n, m, seed))
    assert d.m == m and ref_toposort(d) is not None


def test_tree_plus_zero_is_all_bridges():
    g = generate(GenSpec("random-tree-plus-k-edges", 50, 0, 3))
    assert len(ref_bridges(g)) == 49 == len(brute_bridges(g))


def test_generator_rejections():
    with pytest.raises(ValueError):
        generate(GenSpec("barbell", 5))
    with pytest.raises(ValueError):
        generate(GenSpec("gnm-undirected", 1, 3))
    with pytest.raises(ValueError):
        generate(GenSpec("lattice", 4))


def test_reference_dfs_finish_orders():
    assert ref_dfs(generate(GenSpec("path", 3))).finish_order == [2, 1, 0]
    diamond = AdjGraph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)], True)
    assert ref_dfs(diamond).finish_order == [3, 1, 2, 0]


def test_reference_sanity():
    tri = AdjGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)], True)
    assert ref_scc(tri) == brute_scc(tri) == [(0, 1, 2)]
    assert ref_toposort(tri) is None
    dag = AdjGraph.from_edges(3, [(0, 1), (1, 2)], True)
    assert is_topological(dag, [0, 1, 2]) and not is_topological(dag, [1, 0, 2])
    assert not is_topological(dag, [0, 1])
    assert has_edge(dag, 0, 1) and not has_edge(dag, 1, 0)
    assert ref_articulation_points(generate(GenSpec("path", 3))) == {1}
    assert ref_bridges(generate(GenSpec("cycle", 5))) == set()


@given(graphs(directed=False, max_n=10, max_m=16))
def test_bridge_references_agree(g):
    assert ref_bridges(g) == brute_bridges(g)


@given(graphs(directed=True, max_n=20, max_m=50))
def test_scc_references_agree(g):
    assert ref_scc(g) == brute_scc(g)
