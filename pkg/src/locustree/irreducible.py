"""Branch-depth bit arrays stored for irreducible positions, per direction.

A position is irreducible (left) when its suffix starts a BWT run, i.e.
isa[p] = 0 or bwt[isa[p]-1] != bwt[isa[p]]; the right direction mirrors
with run ends.  For each such p we store a bit array of length plcp[p]
whose bit d says whether a branching node of string depth d lies on the
leaf's root path.  All arrays are concatenated (word-aligned starts) into
one packed buffer with a single shared rank directory.
"""
from __future__ import annotations

import math

import numpy as np

from .bitrank import BitArray, RankIndex, build_rank
from .suffix_tree import SuffixTree
from .text import LEFT, RIGHT, SuffixArrayBundle


def mark_irreducible(bundle: SuffixArrayBundle, direction: int) -> np.ndarray:
    """Bit per position: does this position's suffix sit on a run boundary."""
    bwt = np.frombuffer(bundle.bwt, dtype=np.uint8)
    n = bundle.n
    if direction == LEFT:
        boundary = np.ones(n, dtype=bool)
        boundary[1:] = bwt[1:] != bwt[:-1]
    else:
        boundary = np.ones(n, dtype=bool)
        boundary[:-1] = bwt[:-1] != bwt[1:]
    out = np.zeros(n, dtype=bool)
    out[bundle.sa[boundary]] = True
    return out


class IrreducibleStore:
    __slots__ = ("direction", "n", "is_irreducible", "offsets", "lengths", "bits", "rank", "value_sum")

    def __init__(self, direction, n, is_irreducible, offsets, lengths, bits, rank, value_sum):
        self.direction = direction
        self.n = n
        self.is_irreducible = is_irreducible
        self.offsets = offsets  # bit offset of each position's array (word aligned)
        self.lengths = lengths  # stored array length per position (0 if none)
        self.bits = bits
        self.rank = rank
        self.value_sum = value_sum  # sum of irreducible plcp values

    def count_ones(self, p: int, lo: int, hi: int) -> int:
        """Ones in b_p[lo..hi]; positions >= the stored length read as zero."""
        if not self.is_irreducible[p]:
            raise ValueError(f"position {p} has no stored array in this direction")
        length = int(self.lengths[p])
        if hi >= length:
            hi = length - 1
        if lo < 0:
            lo = 0
        if lo > hi:
            return 0
        off = int(self.offsets[p])
        return self.rank.count_ones(off + lo, off + hi)


def build_bp_store(tree: SuffixTree, bundle: SuffixArrayBundle, direction: int) -> IrreducibleStore:
    """One lex-order traversal maintaining the packed working array; at each
    internal node the boundary between adjacent child subtrees identifies
    the position receiving a copy of the current path's branch bits."""
    n = bundle.n
    is_irr = mark_irreducible(bundle, direction)
    plcp = bundle.plcp_pred if direction == LEFT else bundle.plcp_succ
    lengths = np.where(is_irr, plcp, 0).astype(np.int64)

    words_per = (lengths + 63) >> 6
    offsets = np.zeros(n, dtype=np.int64)
    offw = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(words_per, out=offw[1:])
    offsets = offw[:-1] * 64
    total_words = int(offw[-1])
    dest = np.zeros(max(total_words, 1), dtype=np.uint64)

    value_sum = int(plcp[is_irr].sum())
    bound = 2.0 * n * math.log2(n)
    assert value_sum <= bound, f"irreducible value sum {value_sum} exceeds 2 n log2 n = {bound:.1f}"

    max_internal = int(bundle.lcp.max()) if n > 1 else 0
    work = np.zeros((max_internal >> 6) + 1, dtype=np.uint64)

    child_start = tree.child_start.tolist()
    child_arr = tree.child_arr.tolist()
    sdepth = tree.sdepth.tolist()
    sa_lo = tree.sa_lo.tolist()
    sa = bundle.sa.tolist()
    irr_l = is_irr.tolist()
    lengths_l = lengths.tolist()
    offw_l = (offw[:-1]).tolist()

    stack = [0]
    ptr = list(child_start[:-1])
    left = direction == LEFT
    while stack:
        u = stack[-1]
        p = ptr[u]
        cs = child_start[u]
        ce = child_start[u + 1]
        if p < ce:
            if p == cs and ce - cs >= 2:
                # copy-outs for all adjacent-subtree boundaries below u
                du = sdepth[u]
                nw = (du + 63) >> 6
                for cp in range(cs + 1, ce):
                    i = sa_lo[child_arr[cp]]
                    pos = sa[i] if left else sa[i - 1]
                    if irr_l[pos] and lengths_l[pos] > 0:
                        w0 = offw_l[pos]
                        dest[w0 : w0 + nw] = work[:nw]
                        rem = du & 63
                        if rem:
                            dest[w0 + nw - 1] &= np.uint64((1 << rem) - 1)
            ptr[u] = p + 1
            c = child_arr[p]
            du = sdepth[u]
            if left:
                flag = p > cs
            else:
                flag = p < ce - 1
            if flag:
                work[du >> 6] |= np.uint64(1 << (du & 63))
            else:
                work[du >> 6] &= np.uint64(~(1 << (du & 63)) & 0xFFFFFFFFFFFFFFFF)
            stack.append(c)
        else:
            stack.pop()
            if ce > cs:  # internal: clear this node's own depth bit
                du = sdepth[u]
                work[du >> 6] &= np.uint64(~(1 << (du & 63)) & 0xFFFFFFFFFFFFFFFF)

    bits = BitArray(dest, total_words * 64)
    rank = build_rank(bits)
    return IrreducibleStore(direction, n, is_irr, offsets, lengths, bits, rank, value_sum)
