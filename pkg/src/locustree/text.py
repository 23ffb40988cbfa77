"""Text loading and the flat suffix-array family of indexes.

The text is stored with a terminal sentinel byte 0, strictly smaller than
every other symbol, so suffixes and suffix-tree leaves correspond 1:1.
Input bytes containing 0 are rejected rather than remapped.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SENTINEL = 0

LEFT = 0
RIGHT = 1
DIRECTIONS = (LEFT, RIGHT)


@dataclass(frozen=True)
class Text:
    """Sentinel-terminated byte text of length n (sentinel included)."""

    data: bytes
    n: int


def build_text(raw: bytes) -> Text:
    if len(raw) == 0:
        raise ValueError("empty input text")
    if SENTINEL in raw:
        raise ValueError("input contains the reserved sentinel byte 0")
    data = bytes(raw) + bytes([SENTINEL])
    return Text(data, len(data))


@dataclass
class SuffixArrayBundle:
    """Suffix array, its inverse, LCP, both permuted LCP views, and the BWT."""

    sa: np.ndarray
    isa: np.ndarray
    lcp: np.ndarray
    plcp_pred: np.ndarray  # lcp with the lexicographic predecessor suffix
    plcp_succ: np.ndarray  # lcp with the lexicographic successor suffix
    bwt: bytes
    n: int


def _suffix_array_doubling(sym: np.ndarray) -> np.ndarray:
    """Prefix-doubling suffix array, O(n log n) via numpy sorts."""
    n = len(sym)
    rank = sym.astype(np.int64)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    k = 1
    while True:
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - k] = rank[k:]
        sa = np.lexsort((key2, rank))
        r1 = rank[sa]
        r2 = key2[sa]
        diff = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa[0]] = 0
        new_rank[sa[1:]] = np.cumsum(diff)
        rank = new_rank
        if rank[sa[-1]] == n - 1:
            return sa
        k *= 2


def _lcp_kasai(sym_list: list, sa_list: list, isa_list: list) -> list:
    n = len(sym_list)
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = isa_list[i]
        if r > 0:
            j = sa_list[r - 1]
            while i + h < n and j + h < n and sym_list[i + h] == sym_list[j + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


def build_suffix_arrays(t: Text) -> SuffixArrayBundle:
    sym = np.frombuffer(t.data, dtype=np.uint8)
    n = t.n
    sa = _suffix_array_doubling(sym)
    isa = np.empty(n, dtype=np.int64)
    isa[sa] = np.arange(n, dtype=np.int64)
    lcp = np.array(_lcp_kasai(sym.tolist(), sa.tolist(), isa.tolist()), dtype=np.int32)
    plcp_pred = lcp[isa]
    lcp_ext = np.append(lcp, np.int32(0))
    plcp_succ = lcp_ext[isa + 1]
    bwt = sym[sa - 1].tobytes()  # sa[i] == 0 wraps to the sentinel at n-1
    return SuffixArrayBundle(
        sa=sa.astype(np.int32),
        isa=isa.astype(np.int32),
        lcp=lcp,
        plcp_pred=plcp_pred.astype(np.int32),
        plcp_succ=plcp_succ.astype(np.int32),
        bwt=bwt,
        n=n,
    )
