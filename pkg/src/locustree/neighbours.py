"""Closest irreducible lexicographical neighbour and overlap per position.

For each position p, two SA-order scans find the nearest run-boundary
indexes on either side; the neighbour with the longer common prefix wins
(ties and an undefined far side fall back to the preceding boundary).
Overlaps come from running LCP minima, so no tree queries are needed.
"""
from __future__ import annotations

import numpy as np

from .text import LEFT, SuffixArrayBundle

UNDEF = -1


class NeighbourTable:
    __slots__ = ("direction", "r_of", "c_of")

    def __init__(self, direction: int, r_of: np.ndarray, c_of: np.ndarray):
        self.direction = direction
        self.r_of = r_of  # position -> irreducible neighbour position (self if irreducible)
        self.c_of = c_of  # position -> overlap; plcp[p] at irreducible p by definition


def build_neighbours(bundle: SuffixArrayBundle, is_irreducible: np.ndarray, direction: int) -> NeighbourTable:
    n = bundle.n
    sa = bundle.sa.tolist()
    lcp = bundle.lcp.tolist()
    plcp = (bundle.plcp_pred if direction == LEFT else bundle.plcp_succ).tolist()
    irr_at = is_irreducible[bundle.sa].tolist()  # SA order

    # nearest boundary index at or before each SA index, and the LCP minimum
    # between them (= lcp of the two suffixes)
    prev_idx = [UNDEF] * n
    prev_min = [0] * n
    last = UNDEF
    run_min = 0
    for i in range(n):
        if irr_at[i]:
            last = i
            prev_idx[i] = i
        elif last != UNDEF:
            run_min = lcp[i] if i - 1 == last else min(run_min, lcp[i])
            prev_idx[i] = last
            prev_min[i] = run_min

    next_idx = [UNDEF] * n
    next_min = [0] * n
    nxt = UNDEF
    run_min = 0
    for i in range(n - 1, -1, -1):
        if irr_at[i]:
            nxt = i
            next_idx[i] = i
        elif nxt != UNDEF:
            run_min = lcp[i + 1] if i + 1 == nxt else min(run_min, lcp[i + 1])
            next_idx[i] = nxt
            next_min[i] = run_min

    r_of = np.empty(n, dtype=np.int32)
    c_of = np.empty(n, dtype=np.int32)
    for i in range(n):
        p = sa[i]
        if irr_at[i]:
            r_of[p] = p
            c_of[p] = plcp[p]
        elif next_idx[i] == UNDEF or (prev_idx[i] != UNDEF and prev_min[i] >= next_min[i]):
            r_of[p] = sa[prev_idx[i]]
            c_of[p] = prev_min[i]
        else:
            r_of[p] = sa[next_idx[i]]
            c_of[p] = next_min[i]
    return NeighbourTable(direction, r_of, c_of)
