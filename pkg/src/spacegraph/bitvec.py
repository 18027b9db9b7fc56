"""Bit-level substrate: static rank/select vectors, set-only mark vectors,
plain bit arrays and packed per-vertex cursor fields.

All structures store their payload in 64-bit words (``array('Q')``) and
report their size in bits through ``bits_of()``.  The reported size is an
analytic formula over the declared layout:

* payload: exactly ``length`` bits (the unused tail of the last word is not
  charged),
* rank directory: one 32-bit count per 4096-bit superblock plus one 16-bit
  count per 512-bit block.
"""
from __future__ import annotations

from array import array
from bisect import bisect_left
from typing import Iterable, Iterator, Optional, Sequence

WORD = 64
BLOCK = 512
SUPERBLOCK = 4096
WORDS_PER_BLOCK = BLOCK // WORD
BLOCKS_PER_SB = SUPERBLOCK // BLOCK
SB_COUNT_BITS = 32
BLOCK_COUNT_BITS = 16

_MASK64 = (1 << 64) - 1


def _nwords(length: int) -> int:
    return (length + WORD - 1) // WORD


def directory_bits(length: int) -> int:
    """Size of the two-level rank directory for a vector of ``length`` bits."""
    nsb = (length + SUPERBLOCK - 1) // SUPERBLOCK
    nblk = (length + BLOCK - 1) // BLOCK
    return SB_COUNT_BITS * nsb + BLOCK_COUNT_BITS * nblk


def _select_in_word(word: int, k: int) -> int:
    # position of the k-th (1-based) set bit of word
    for _ in range(k - 1):
        word &= word - 1
    return (word & -word).bit_length() - 1


def _check_range(pos: int, length: int) -> None:
    if not 0 <= pos < length:
        raise IndexError(f"bit position {pos} out of range [0, {length})")


class Bits:
    """Plain fixed-length bit array without a rank directory.

    Used for the n-bit vertex flags (visited, finished, roots, ...).
    """

    __slots__ = ("length", "words")

    def __init__(self, length: int) -> None:
        self.length = length
        self.words = array("Q", bytes(8 * _nwords(length)))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        _check_range(i, self.length)
        return (self.words[i >> 6] >> (i & 63)) & 1

    def set(self, i: int) -> None:
        _check_range(i, self.length)
        self.words[i >> 6] |= 1 << (i & 63)

    def popcount(self) -> int:
        return sum(w.bit_count() for w in self.words)

    def iter_set(self, reverse: bool = False) -> Iterator[int]:
        words = self.words
        idx = range(len(words) - 1, -1, -1) if reverse else range(len(words))
        for wi in idx:
            w = words[wi]
            if not w:
                continue
            if reverse:
                while w:
                    b = w.bit_length() - 1
                    yield (wi << 6) | b
                    w ^= 1 << b
            else:
                while w:
                    low = w & -w
                    yield (wi << 6) | (low.bit_length() - 1)
                    w ^= low

    def bits_of(self) -> int:
        return self.length


class BitVec:
    """Immutable bitvector with constant-time rank and logarithmic select.

    >>> bv = BitVec.from_bits([1, 0, 1, 1, 0])
    >>> bv.rank1(5), bv.select1(2)
    (3, 2)
    """

    __slots__ = ("length", "words", "sb_counts", "blk_counts", "ones")

    def __init__(self, words: array, length: int) -> None:
        if len(words) != _nwords(length):
            raise ValueError("word count does not match length")
        self.length = length
        self.words = words
        sb_counts: list[int] = []
        blk_counts: list[int] = []
        total = 0
        sb_base = 0
        for wi, w in enumerate(words):
            if wi % WORDS_PER_BLOCK == 0:
                if wi % (WORDS_PER_BLOCK * BLOCKS_PER_SB) == 0:
                    sb_counts.append(total)
                    sb_base = total
                blk_counts.append(total - sb_base)
            total += w.bit_count()
        self.sb_counts = sb_counts
        self.blk_counts = blk_counts
        self.ones = total

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVec":
        words = array("Q")
        cur = 0
        n = 0
        for b in bits:
            if b:
                cur |= 1 << (n & 63)
            n += 1
            if n & 63 == 0:
                words.append(cur)
                cur = 0
        if n & 63:
            words.append(cur)
        return cls(words, n)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        _check_range(i, self.length)
        return (self.words[i >> 6] >> (i & 63)) & 1

    access = __getitem__

    def bits_of(self) -> int:
        return self.length + directory_bits(self.length)

    def rank1(self, i: int) -> int:
        """Number of set bits in positions ``[0, i)``."""
        if i <= 0:
            return 0
        if i >= self.length:
            return self.ones
        wi = i >> 6
        r = self.sb_counts[i >> 12] + self.blk_counts[i >> 9]
        words = self.words
        for j in range(wi & ~7, wi):
            r += words[j].bit_count()
        off = i & 63
        if off:
            r += (words[wi] & ((1 << off) - 1)).bit_count()
        return r

    def rank0(self, i: int) -> int:
        i = max(0, min(i, self.length))
        return i - self.rank1(i)

    def select1(self, k: int) -> int:
        """Position of the ``k``-th set bit (1-based ``k``)."""
        if not 1 <= k <= self.ones:
            raise IndexError(f"select1({k}) with {self.ones} set bits")
        sb = bisect_left(self.sb_counts, k) - 1
        k -= self.sb_counts[sb]
        lo = sb * BLOCKS_PER_SB
        hi = min(lo + BLOCKS_PER_SB, len(self.blk_counts))
        blk = bisect_left(self.blk_counts, k, lo, hi) - 1
        k -= self.blk_counts[blk]
        words = self.words
        wi = blk * WORDS_PER_BLOCK
        while True:
            c = words[wi].bit_count()
            if c >= k:
                return (wi << 6) + _select_in_word(words[wi], k)
            k -= c
            wi += 1

    def select0(self, k: int) -> int:
        """Position of the ``k``-th clear bit (1-based ``k``)."""
        zeros = self.length - self.ones
        if not 1 <= k <= zeros:
            raise IndexError(f"select0({k}) with {zeros} clear bits")
        sbc = self.sb_counts
        # zeros before superblock s: s*SUPERBLOCK - sbc[s]; binary search on it
        lo, hi = 0, len(sbc)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if mid * SUPERBLOCK - sbc[mid] < k:
                lo = mid
            else:
                hi = mid
        sb = lo
        k -= sb * SUPERBLOCK - sbc[sb]
        blk = sb * BLOCKS_PER_SB
        end = min(blk + BLOCKS_PER_SB, len(self.blk_counts))
        base = sb * BLOCKS_PER_SB
        while blk + 1 < end and (blk + 1 - base) * BLOCK - self.blk_counts[blk + 1] < k:
            blk += 1
        k -= (blk - base) * BLOCK - self.blk_counts[blk]
        words = self.words
        wi = blk * WORDS_PER_BLOCK
        while True:
            valid = min(WORD, self.length - (wi << 6))
            inv = ~words[wi] & ((1 << valid) - 1)
            c = inv.bit_count()
            if c >= k:
                return (wi << 6) + _select_in_word(inv, k)
            k -= c
            wi += 1

    def rightmost_set_in_range(self, lo: int, hi: int) -> Optional[int]:
        """Largest set position in ``[lo, hi)``, or None."""
        if hi <= lo:
            return None
        k = self.rank1(hi)
        if k == 0:
            return None
        p = self.select1(k)
        return p if p >= lo else None

    def leftmost_set_in_range(self, lo: int, hi: int) -> Optional[int]:
        """Smallest set position in ``[lo, hi)``, or None."""
        if hi <= lo:
            return None
        k = self.rank1(lo)
        if k == self.ones:
            return None
        p = self.select1(k + 1)
        return p if p < hi else None


class _Fenwick:
    """Prefix sums over superblock popcounts, updated in place."""

    __slots__ = ("tree", "size")

    def __init__(self, size: int) -> None:
        self.size = size
        self.tree = [0] * (size + 1)

    def add(self, i: int, delta: int) -> None:
        i += 1
        tree = self.tree
        while i <= self.size:
            tree[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        # sum of entries [0, i)
        s = 0
        tree = self.tree
        while i > 0:
            s += tree[i]
            i -= i & -i
        return s

    def search(self, k: int) -> tuple[int, int]:
        # largest idx with prefix(idx) < k; returns (idx, prefix(idx))
        pos = 0
        acc = 0
        step = 1 << self.size.bit_length()
        tree = self.tree
        while step:
            nxt = pos + step
            if nxt <= self.size and acc + tree[nxt] < k:
                pos = nxt
                acc += tree[nxt]
            step >>= 1
        return pos, acc


class MarkVec:
    """Set-only dynamic bitvector with rank/select.

    Block counts are relative to their superblock and are patched forward on
    every set; superblock totals live in a Fenwick tree, so ``set1`` touches
    at most ``BLOCKS_PER_SB`` block counters plus ``O(lg)`` tree nodes.
    """

    __slots__ = ("length", "words", "blk_counts", "sb_tree", "ones")

    def __init__(self, length: int) -> None:
        self.length = length
        self.words = array("Q", bytes(8 * _nwords(length)))
        self.blk_counts = [0] * ((length + BLOCK - 1) // BLOCK)
        self.sb_tree = _Fenwick((length + SUPERBLOCK - 1) // SUPERBLOCK)
        self.ones = 0

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        _check_range(i, self.length)
        return (self.words[i >> 6] >> (i & 63)) & 1

    access = __getitem__

    def bits_of(self) -> int:
        return self.length + directory_bits(self.length)

    def set1(self, pos: int) -> None:
        _check_range(pos, self.length)
        wi = pos >> 6
        bit = 1 << (pos & 63)
        w = self.words[wi]
        if w & bit:
            return
        self.words[wi] = w | bit
        self.ones += 1
        blk = pos >> 9
        end = min((blk | (BLOCKS_PER_SB - 1)) + 1, len(self.blk_counts))
        counts = self.blk_counts
        for b in range(blk + 1, end):
            counts[b] += 1
        self.sb_tree.add(pos >> 12, 1)

    def rank1(self, i: int) -> int:
        if i <= 0:
            return 0
        if i >= self.length:
            return self.ones
        wi = i >> 6
        r = self.sb_tree.prefix(i >> 12) + self.blk_counts[i >> 9]
        words = self.words
        for j in range(wi & ~7, wi):
            r += words[j].bit_count()
        off = i & 63
        if off:
            r += (words[wi] & ((1 << off) - 1)).bit_count()
        return r

    def select1(self, k: int) -> int:
        if not 1 <= k <= self.ones:
            raise IndexError(f"select1({k}) with {self.ones} set bits")
        sb, acc = self.sb_tree.search(k)
        k -= acc
        lo = sb * BLOCKS_PER_SB
        hi = min(lo + BLOCKS_PER_SB, len(self.blk_counts))
        blk = bisect_left(self.blk_counts, k, lo, hi) - 1
        k -= self.blk_counts[blk]
        words = self.words
        wi = blk * WORDS_PER_BLOCK
        while True:
            c = words[wi].bit_count()
            if c >= k:
                return (wi << 6) + _select_in_word(words[wi], k)
            k -= c
            wi += 1

    def rightmost_set_in_range(self, lo: int, hi: int) -> Optional[int]:
        """Largest set position in ``[lo, hi)``, or None."""
        if hi <= lo:
            return None
        # short ranges: scan words directly
        if hi - lo <= 4 * WORD:
            words = self.words
            wi = (hi - 1) >> 6
            w = words[wi] & ((2 << ((hi - 1) & 63)) - 1)
            while True:
                base = wi << 6
                if base < lo:
                    w &= _MASK64 ^ ((1 << (lo - base)) - 1)
                if w:
                    return base + w.bit_length() - 1
                if base <= lo:
                    return None
                wi -= 1
                w = words[wi]
        k = self.rank1(hi)
        if k == 0:
            return None
        p = self.select1(k)
        return p if p >= lo else None

    def freeze(self) -> BitVec:
        """Static copy answering rank/select with the fixed directory."""
        return BitVec(array("Q", self.words), self.length)


class CursorArray:
    """Packed per-vertex offsets, field ``v`` holding a value in ``[0, d_v]``.

    Field ``v`` is ``d_v.bit_length()`` bits wide.  Field starts are located
    through a unary boundary vector (``w_v`` zeros then a one per vertex),
    so ``start(v) = select1(v) + 1 - v``.
    """

    __slots__ = ("n", "offsets", "payload_bits", "words", "boundary")

    def __init__(self, offsets: Sequence[int]) -> None:
        # offsets: the graph's segment starts (n + 1 entries, read-only input)
        self.n = len(offsets) - 1
        self.offsets = offsets
        widths = [(offsets[v + 1] - offsets[v]).bit_length() for v in range(self.n)]
        self.payload_bits = sum(widths)
        self.words = array("Q", bytes(8 * _nwords(self.payload_bits)))

        def unary() -> Iterator[int]:
            for w in widths:
                yield from (0,) * w
                yield 1

        self.boundary = BitVec.from_bits(unary())

    def __len__(self) -> int:
        return self.n

    def bits_of(self) -> int:
        return self.payload_bits + self.boundary.bits_of()

    def _field(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range [0, {self.n})")
        start = 0 if v == 0 else self.boundary.select1(v) + 1 - v
        d = self.offsets[v + 1] - self.offsets[v]
        return start, d

    def get(self, v: int) -> int:
        start, d = self._field(v)
        width = d.bit_length()
        if width == 0:
            return 0
        wi, off = start >> 6, start & 63
        val = self.words[wi] >> off
        if off + width > WORD:
            val |= self.words[wi + 1] << (WORD - off)
        return val & ((1 << width) - 1)

    def set(self, v: int, value: int) -> None:
        start, d = self._field(v)
        if not 0 <= value <= d:
            raise ValueError(f"cursor value {value} outside [0, {d}] for vertex {v}")
        width = d.bit_length()
        if width == 0:
            return
        mask = (1 << width) - 1
        wi, off = start >> 6, start & 63
        words = self.words
        words[wi] = (words[wi] & ~(mask << off) & _MASK64) | ((value << off) & _MASK64)
        if off + width > WORD:
            spill = off + width - WORD
            words[wi + 1] = (words[wi + 1] & ~((1 << spill) - 1) & _MASK64) | (value >> (WORD - off))
