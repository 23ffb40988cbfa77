"""Brute-force reference implementations of every queried quantity.

Used by the test suite and the `verify` subcommand.  Everything here favors
clarity over speed; quadratic behavior is fine at test scale (n <= 2000).
None of these read the optimized structures' internals beyond the plain
tree adjacency they are checking against.
"""
from __future__ import annotations

import numpy as np

from .text import LEFT, RIGHT, Text


def naive_sa(data: bytes) -> list[int]:
    return sorted(range(len(data)), key=lambda i: data[i:])


def naive_lcp_pair(data: bytes, i: int, j: int) -> int:
    n = len(data)
    k = 0
    while i + k < n and j + k < n and data[i + k] == data[j + k]:
        k += 1
    return k


def naive_lcp_array(data: bytes, sa: list[int]) -> list[int]:
    lcp = [0] * len(sa)
    for i in range(1, len(sa)):
        lcp[i] = naive_lcp_pair(data, sa[i - 1], sa[i])
    return lcp


def naive_bwt(data: bytes, sa: list[int]) -> bytes:
    return bytes(data[p - 1] for p in sa)


def naive_irreducible(data: bytes, direction: int) -> set[int]:
    """Positions whose BWT-run boundary rule holds (starts left, ends right)."""
    sa = naive_sa(data)
    bwt = naive_bwt(data, sa)
    n = len(data)
    out = set()
    for i in range(n):
        if direction == LEFT:
            if i == 0 or bwt[i - 1] != bwt[i]:
                out.add(sa[i])
        else:
            if i == n - 1 or bwt[i] != bwt[i + 1]:
                out.add(sa[i])
    return out


class NaiveNode:
    """Node of a compacted trie built by direct interval splitting."""

    __slots__ = ("depth", "children", "leaf")

    def __init__(self, depth: int, leaf: int = -1):
        self.depth = depth
        self.children: list[tuple[int, "NaiveNode"]] = []  # (first symbol, child)
        self.leaf = leaf


def naive_suffix_tree(data: bytes) -> NaiveNode:
    sa = naive_sa(data)

    def group_lcp(group: list[int]) -> int:
        g = naive_lcp_pair(data, group[0], group[1])
        for a, b in zip(group[1:], group[2:]):
            g = min(g, naive_lcp_pair(data, a, b))
        return g

    def build(group: list[int], depth: int) -> NaiveNode:
        node = NaiveNode(depth)
        i = 0
        while i < len(group):
            sym = data[group[i] + depth]
            j = i
            while j < len(group) and data[group[j] + depth] == sym:
                j += 1
            sub = group[i:j]
            if len(sub) == 1:
                node.children.append((sym, NaiveNode(len(data) - sub[0], leaf=sub[0])))
            else:
                node.children.append((sym, build(sub, group_lcp(sub))))
            i = j
        return node

    return build(sa, 0)


class OracleSuite:
    """Definition-verbatim answers, computed against the plain tree shape."""

    def __init__(self, text: Text, tree):
        self.text = text
        self.tree = tree
        self.data = text.data

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.tree.parent[path[-1]] >= 0:
            path.append(int(self.tree.parent[path[-1]]))
        return path

    def is_branching(self, u: int, child: int, direction: int) -> bool:
        """Does u branch to the smaller (left) / larger (right) side of the
        path that continues through `child`?"""
        ch = self.tree.children(u)
        idx = int(np.nonzero(ch == child)[0][0]) if len(ch) else -1
        if direction == LEFT:
            return idx > 0
        return 0 <= idx < len(ch) - 1

    def branch_list(self, v: int, direction: int) -> list[int]:
        """Branching nodes on the v-root path, deepest first."""
        path = self.path_to_root(v)
        out = []
        for below, u in zip(path, path[1:]):
            if self.is_branching(u, below, direction):
                out.append(u)
        return out

    def count_branching(self, p: int, ell: int, direction: int) -> int:
        v = int(self.tree.leaf_of[p])
        return sum(1 for u in self.branch_list(v, direction) if self.tree.sdepth[u] >= ell)

    def bp_bits(self, p: int, length: int, direction: int) -> list[int]:
        """Branch-depth bits for position p: bit d set iff a branching node
        of string depth d lies on the leaf's root path (d < length)."""
        bits = [0] * length
        v = int(self.tree.leaf_of[p])
        for u in self.branch_list(v, direction):
            d = int(self.tree.sdepth[u])
            if d < length:
                bits[d] = 1
        return bits

    def locus(self, p: int, q: int) -> int:
        """Root descent reading s[p..q]; the O(q-p) baseline."""
        data = self.data
        tree = self.tree
        ell = q - p + 1
        cur = 0
        while tree.sdepth[cur] < ell:
            d0 = int(tree.sdepth[cur])
            sym = data[p + d0]
            nxt = -1
            for c in tree.children(cur).tolist():
                if data[int(tree.rep[c]) + d0] == sym:
                    nxt = c
                    break
            assert nxt >= 0, "substring of the text must occur in its tree"
            d1 = min(int(tree.sdepth[nxt]), ell)
            a = int(tree.rep[nxt])
            assert data[a + d0 : a + d1] == data[p + d0 : p + d1]
            cur = nxt
        return cur

    def neighbour_overlap(self, p: int, direction: int) -> int:
        """Max lcp between suffix p and any irreducible-position suffix."""
        best = -1
        for r in naive_irreducible(self.data, direction):
            if r == p:
                continue
            best = max(best, naive_lcp_pair(self.data, r, p))
        return best


def naive_weighted_ancestor(plcp: list[int], c_of: list[int], base: int, p: int, m: int) -> int:
    """max{t <= p : plcp[t] - m <= c_of[t]}, scanning down to the run base."""
    t = p
    while t > base:
        if plcp[t] - m <= c_of[t]:
            return t
        t -= 1
    return base


def naive_path_pred(weights: list[int], w: int) -> int:
    """Index of the smallest weight >= w in an increasing list."""
    for j, wj in enumerate(weights):
        if wj >= w:
            return j
    raise ValueError("threshold exceeds all weights on the path")
