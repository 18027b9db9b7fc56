import random
from array import array
from bisect import bisect_left, insort

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spacegraph.bitvec import BitVec, Bits, CursorArray, MarkVec, directory_bits


def naive_select(bits, k, value=1):
    seen = 0
    for p, b in enumerate(bits):
        if b == value:
            seen += 1
            if seen == k:
                return p
    raise IndexError


def naive_rightmost(bits, lo, hi):
    for p in range(hi - 1, lo - 1, -1):
        if bits[p]:
            return p
    return None


def offsets_from_degrees(degrees):
    out = [0]
    for d in degrees:
        out.append(out[-1] + d)
    return array("I", out)


def test_static_examples():
    bv = BitVec.from_bits([1, 0, 1, 1, 0])
    assert bv.rank1(5) == 3
    assert bv.select1(2) == 2
    assert bv.rightmost_set_in_range(0, 5) == 3
    assert bv.rightmost_set_in_range(4, 5) is None
    assert bv.leftmost_set_in_range(1, 5) == 2


def test_static_matches_scan_on_random_10k():
    rng = random.Random(1)
    bits = [rng.random() < 0.3 for _ in range(10_000)]
    bv = BitVec.from_bits(bits)
    ones = sum(bits)
    prefix = [0]
    for b in bits:
        prefix.append(prefix[-1] + b)
    positions = [p for p, b in enumerate(bits) if b]
    for _ in range(1000):
        i = rng.randrange(len(bits) + 1)
        assert bv.rank1(i) == prefix[i]
        k = rng.randint(1, ones)
        assert bv.select1(k) == positions[k - 1]


@given(st.lists(st.booleans(), max_size=3000), st.data())
def test_static_rank_select_properties(bits, data):
    bv = BitVec.from_bits(bits)
    assert bv.rank1(len(bits)) == sum(bits)
    i = data.draw(st.integers(0, max(0, len(bits) - 1)))
    if bits:
        assert bv.rank1(i + 1) - bv.rank1(i) == bits[i]
    for k in range(1, sum(bits) + 1, max(1, sum(bits) // 20)):
        p = bv.select1(k)
        assert bits[p] and bv.rank1(p) == k - 1 and bv.rank1(p + 1) == k
    zeros = len(bits) - sum(bits)
    for k in range(1, zeros + 1, max(1, zeros // 20)):
        assert bv.select0(k) == naive_select(bits, k, value=0)


def test_rank_step_on_100k_bits():
    rng = random.Random(7)
    bits = [rng.random() < 0.05 for _ in range(100_000)]
    bv = BitVec.from_bits(bits)
    r = 0
    for i, b in enumerate(bits):
        assert bv.rank1(i) == r
        r += b
    assert bv.rank1(len(bits)) == r


@pytest.mark.parametrize("length", [0, 1, 63, 64, 511, 512, 513, 4096, 4097, 10_000])
def test_bits_of_is_exact_formula(length):
    nsb = -(-length // 4096)
    nblk = -(-length // 512)
    expect = length + 32 * nsb + 16 * nblk
    assert BitVec.from_bits([0] * length).bits_of() == expect
    assert MarkVec(length).bits_of() == expect
    assert directory_bits(length) == expect - length
    if length >= 512:
        assert expect <= 1.5 * length


def test_zero_length():
    bv = BitVec.from_bits([])
    assert bv.rank1(0) == 0 and bv.rightmost_set_in_range(0, 0) is None
    with pytest.raises(IndexError):
        bv.select1(1)
    mv = MarkVec(0)
    assert mv.rank1(0) == 0 and mv.rightmost_set_in_range(0, 0) is None
    assert Bits(0).popcount() == 0


def test_markvec_examples():
    mv = MarkVec(5)
    mv.set1(3)
    assert mv.rank1(5) == 1 and mv.select1(1) == 3
    mv.set1(3)
    assert mv.rank1(5) == 1
    with pytest.raises(IndexError):
        mv.set1(5)
    with pytest.raises(IndexError):
        mv.set1(-1)


def test_markvec_interleaved_ops_vs_naive():
    # oracle: plain list of bits plus a sorted list of set positions
    rng = random.Random(3)
    n = 20_000
    mv = MarkVec(n)
    bits = [0] * n
    positions: list[int] = []
    for _ in range(10_000):
        op = rng.random()
        if op < 0.5:
            p = rng.randrange(n)
            mv.set1(p)
            if not bits[p]:
                bits[p] = 1
                insort(positions, p)
        elif op < 0.7:
            i = rng.randrange(n + 1)
            assert mv.rank1(i) == bisect_left(positions, i)
        elif op < 0.8 and positions:
            k = rng.randint(1, len(positions))
            assert mv.select1(k) == positions[k - 1]
        else:
            lo = rng.randrange(n)
            hi = rng.randrange(lo, min(n, lo + rng.choice([50, 300, 5000])) + 1)
            assert mv.rightmost_set_in_range(lo, hi) == naive_rightmost(bits, lo, hi)
    frozen = mv.freeze()
    assert frozen.ones == mv.ones == len(positions)
    for i in range(0, n + 1, 101):
        assert frozen.rank1(i) == mv.rank1(i) == bisect_left(positions, i)


@given(st.lists(st.booleans(), max_size=5000), st.data())
def test_rightmost_matches_linear_scan(bits, data):
    bv = BitVec.from_bits(bits)
    mv = MarkVec(len(bits))
    for p, b in enumerate(bits):
        if b:
            mv.set1(p)
    lo = data.draw(st.integers(0, len(bits)))
    hi = data.draw(st.integers(lo, len(bits)))
    want = naive_rightmost(bits, lo, hi)
    assert bv.rightmost_set_in_range(lo, hi) == want
    assert mv.rightmost_set_in_range(lo, hi) == want
    left = next((p for p in range(lo, hi) if bits[p]), None)
    assert bv.leftmost_set_in_range(lo, hi) == left


def test_bits_plain():
    b = Bits(130)
    for p in (0, 64, 129):
        b.set(p)
    assert b[64] == 1 and b[65] == 0
    assert list(b.iter_set()) == [0, 64, 129]
    assert list(b.iter_set(reverse=True)) == [129, 64, 0]
    assert b.popcount() == 3 and b.bits_of() == 130
    with pytest.raises(IndexError):
        b.set(130)


def test_cursor_examples():
    c = CursorArray(offsets_from_degrees([3, 1, 2]))
    assert [c.get(v) for v in range(3)] == [0, 0, 0]
    c.set(0, 2)
    assert c.get(0) == 2
    with pytest.raises(ValueError):
        c.set(1, 2)


def test_cursor_payload_size():
    degrees = [0, 1, 2, 3, 4, 7, 8, 1000, 65535, 65536]
    c = CursorArray(offsets_from_degrees(degrees))
    payload = sum(d.bit_length() for d in degrees)
    assert c.payload_bits == payload
    boundary = len(degrees) + payload
    assert c.bits_of() == payload + boundary + directory_bits(boundary)


def test_cursor_random_vs_plain_array():
    rng = random.Random(11)
    degrees = [rng.choice([0, 1, 2, 5, 17, 64, 300, 70_000]) for _ in range(400)]
    c = CursorArray(offsets_from_degrees(degrees))
    plain = [0] * len(degrees)
    for _ in range(10_000):
        v = rng.randrange(len(degrees))
        if rng.random() < 0.5:
            val = rng.randint(0, degrees[v])
            c.set(v, val)
            plain[v] = val
        else:
            assert c.get(v) == plain[v]
    assert [c.get(v) for v in range(len(degrees))] == plain
