"""Packed bit arrays with constant-time range rank queries.

Bits live in 64-bit words; a two-level directory (superblock totals plus
per-word offsets) gives rank in O(1) with hardware population counts.
"""
from __future__ import annotations

import numpy as np

WORD_BITS = 64
SUPERBLOCK_WORDS = 64  # 4096 bits per superblock


class BitArray:
    """Fixed-length bit sequence packed little-endian into uint64 words.

    Bits at positions >= len are zero in the backing words.
    """

    __slots__ = ("words", "nbits")

    def __init__(self, words: np.ndarray, nbits: int):
        assert words.dtype == np.uint64
        self.words = words
        self.nbits = nbits

    @classmethod
    def zeros(cls, nbits: int) -> "BitArray":
        return cls(np.zeros((nbits + WORD_BITS - 1) // WORD_BITS, dtype=np.uint64), nbits)

    @classmethod
    def from_bits(cls, bits) -> "BitArray":
        bits = np.asarray(bits, dtype=np.uint8)
        nbits = len(bits)
        nwords = (nbits + WORD_BITS - 1) // WORD_BITS
        padded = np.zeros(nwords * 8, dtype=np.uint8)
        packed = np.packbits(bits, bitorder="little")
        padded[: len(packed)] = packed
        return cls(padded.view(np.uint64), nbits)

    @classmethod
    def from_positions(cls, nbits: int, positions) -> "BitArray":
        b = cls.zeros(nbits)
        pos = np.asarray(positions, dtype=np.int64)
        if len(pos):
            np.bitwise_or.at(b.words, pos >> 6, np.uint64(1) << (pos & 63).astype(np.uint64))
        return b

    def get(self, i: int) -> int:
        return (int(self.words[i >> 6]) >> (i & 63)) & 1

    def set(self, i: int) -> None:
        self.words[i >> 6] |= np.uint64(1 << (i & 63))

    def __len__(self) -> int:
        return self.nbits


class RankIndex:
    """Two-level rank directory over a BitArray.

    super_counts[s] = ones before superblock s; block_counts[w] = ones from
    the superblock start up to word w (exclusive), fits 16 bits.
    """

    __slots__ = ("bits", "super_counts", "block_counts", "total", "_words")

    def __init__(self, bits: BitArray, super_counts: np.ndarray, block_counts: np.ndarray, total: int):
        self.bits = bits
        self.super_counts = super_counts
        self.block_counts = block_counts
        self.total = total
        self._words = bits.words

    def rank1(self, i: int) -> int:
        """Number of 1 bits in positions [0, i)."""
        if i <= 0:
            return 0
        if i >= self.bits.nbits:
            return self.total
        w = i >> 6
        r = int(self.super_counts[w >> 6]) + int(self.block_counts[w])
        rem = i & 63
        if rem:
            r += (int(self._words[w]) & ((1 << rem) - 1)).bit_count()
        return r

    def count_ones(self, lo: int, hi: int) -> int:
        """Number of 1 bits in positions [lo, hi], clipped to the array.

        Positions outside [0, len) read as zero; lo > hi is the empty range.
        """
        if lo < 0:
            lo = 0
        if hi >= self.bits.nbits:
            hi = self.bits.nbits - 1
        if lo > hi:
            return 0
        return self.rank1(hi + 1) - self.rank1(lo)


def build_rank(b: BitArray) -> RankIndex:
    """Build a rank directory in time linear in the word count."""
    nwords = len(b.words)
    pc = np.bitwise_count(b.words)
    csum = np.zeros(nwords + 1, dtype=np.int64)
    np.cumsum(pc, out=csum[1:])
    nsuper = (nwords + SUPERBLOCK_WORDS - 1) // SUPERBLOCK_WORDS
    super_counts = csum[0 : nsuper * SUPERBLOCK_WORDS : SUPERBLOCK_WORDS].copy()
    block_counts = (csum[:nwords] - np.repeat(super_counts, SUPERBLOCK_WORDS)[:nwords]).astype(np.uint16)
    return RankIndex(b, super_counts, block_counts, int(csum[-1]))
