import pytest

from spacegraph.audit import (ALGORITHMS, REGISTER_BITS, TSV_HEADER, ScalingRow, SpaceLedger,
                              default_ladder, flag_rows, run_audited, scaling_report)
from spacegraph.bitvec import Bits
from spacegraph.graphrep import AdjGraph
from spacegraph.oracle import GenSpec, generate


def test_path_ledger_by_hand():
    g = generate(GenSpec("path", 3))
    _, led = run_audited("dfs", g)
    got = led.summary()
    # 4 slots: 4 payload + one 32-bit superblock + one 16-bit block count
    assert got["registers"] == REGISTER_BITS
    assert got["dfs.A"] == got["dfs.P"] == 4 + 32 + 16
    assert got["dfs.R"] == got["dfs.visited"] == got["dfs.finished"] == 3
    # widths 1+2+1, unary boundary of 3+4 bits plus its directory
    assert got["dfs.cursors"] == 4 + 7 + 48
    assert led.peak_working_bits == 1196
    assert led.input_bits == 32 * 8
    cursors = next(e for e in led.entries if e.name == "dfs.cursors")
    assert cursors.field_bits == 4 / 3


def test_empty_graph_costs_only_registers():
    _, led = run_audited("dfs", AdjGraph.from_edges(0, [], False))
    assert led.peak_working_bits == REGISTER_BITS


def test_output_digest_is_deterministic():
    g = generate(GenSpec("gnm-directed", 200, 600, 1))
    for algo in ("dfs", "rpo", "scc", "sc_test"):
        assert run_audited(algo, g)[0] == run_audited(algo, g)[0]


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        run_audited("mst", generate(GenSpec("path", 3)))
    with pytest.raises(ValueError):
        scaling_report("mst", [(16, 64)])


def test_input_is_not_working_space():
    g = generate(GenSpec("gnm-undirected", 500, 2000, 2))
    _, led = run_audited("bridges", g)
    assert led.input_bits == g.input_bits()
    assert led.peak_working_bits < led.input_bits


def test_guard_flags_wide_vertex_arrays():
    led = SpaceLedger(n=1024)
    led.alloc("ok", Bits(1024), "vertex", field_bits=1)
    led.alloc("wide", Bits(10 * 1024), "vertex")
    led.alloc("slots", Bits(50_000), "slot")
    assert [e.name for e in led.nlogn_violations()] == ["wide"]
    tiny = SpaceLedger(n=3)
    tiny.alloc("x", Bits(300), "vertex")
    assert tiny.nlogn_violations() == []


def test_free_and_peak():
    led = SpaceLedger(n=10)
    led.alloc("a", Bits(100), "vertex")
    led.free("a")
    led.alloc("b", Bits(50), "vertex")
    assert led.peak_working_bits == REGISTER_BITS + 100
    assert led.current_bits == REGISTER_BITS + 50
    with pytest.raises(ValueError):
        led.alloc("b", Bits(1), "vertex")


def test_all_algorithms_clear_the_guard():
    for algo in ALGORITHMS:
        kind = {"toposort": "random-dag"}.get(algo, "gnm-directed")
        if algo in ("dfs", "bridges", "two_ec_test"):
            kind = "gnm-undirected"
        _, led = run_audited(algo, generate(GenSpec(kind, 2048, 8192, 4)))
        assert led.nlogn_violations() == [], algo


def test_scaling_report_shape():
    rows = scaling_report("dfs", default_ladder(6, 8), seed=1)
    assert [(r.n, r.m) for r in rows] == [(64, 256), (128, 512), (256, 1024)]
    assert len(TSV_HEADER.split("\t")) == 8
    for r in rows:
        cols = r.tsv().split("\t")
        assert len(cols) == 8 and cols[-1] == "pass" and r.ok
        assert r.violations == ()


def test_flag_rows_marks_growth():
    rows = [ScalingRow("x", 100, 100, 200, 1000, 1), ScalingRow("x", 200, 200, 400, 5000, 1)]
    flagged = flag_rows(rows)
    assert [r.ok for r in flagged] == [True, False]
    assert flagged[1].tsv().endswith("fail")
    assert flag_rows([]) == []


def test_fake_clock_controls_nanos():
    ticks = iter(range(0, 10**6, 7))
    rows = scaling_report("sc_test", [(32, 128)], clock=lambda: next(ticks))
    assert rows[0].nanos == 7
