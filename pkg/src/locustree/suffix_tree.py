"""Compacted suffix tree with string depths, constant-time LCA, and
branching-ancestor level queries.

The tree is built by a single stack sweep over SA/LCP.  Nodes are dense
integer ids (root = 0); children are kept in lexicographic order in CSR
form.  Two per-direction skeleton trees link every node to its nearest
left-/right-branching proper ancestor and carry a ladder decomposition
plus jump pointers, so the d-th branching node on any node-root path is
found in O(1).
"""
from __future__ import annotations

import numpy as np

from .text import LEFT, RIGHT, SuffixArrayBundle

LCA_BLOCK = 64


class SuffixTree:
    __slots__ = (
        "n",
        "node_count",
        "parent",
        "sdepth",
        "leaf_pos",
        "leaf_of",
        "child_start",
        "child_arr",
        "sa_lo",
        "rep",
    )

    def __init__(self, n, node_count, parent, sdepth, leaf_pos, leaf_of, child_start, child_arr):
        self.n = n
        self.node_count = node_count
        self.parent = parent
        self.sdepth = sdepth
        self.leaf_pos = leaf_pos
        self.leaf_of = leaf_of
        self.child_start = child_start
        self.child_arr = child_arr
        self.sa_lo = None  # filled by build_lca's traversal
        self.rep = None

    def children(self, v: int) -> np.ndarray:
        return self.child_arr[self.child_start[v] : self.child_start[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.child_start[v + 1] - self.child_start[v])

    def is_leaf(self, v: int) -> bool:
        return self.leaf_pos[v] >= 0

    def label_extent(self, v: int) -> tuple[int, int]:
        """(start, length) of str(v) as a slice into the text."""
        return int(self.rep[v]), int(self.sdepth[v])


def build_suffix_tree(bundle: SuffixArrayBundle) -> SuffixTree:
    """Stack sweep over SA/LCP; O(n) time, at most 2n-1 nodes."""
    n = bundle.n
    sa = bundle.sa.tolist()
    lcp = bundle.lcp.tolist()

    parent = [-1]
    sdepth = [0]
    leaf_pos = [-1]
    eparent: list[int] = []  # edge lists in finalize order (lex per parent)
    echild: list[int] = []
    stack = [0]
    sd = [0]
    cnt = 1

    for i in range(n):
        d = lcp[i]
        while sd[-1] > d:
            w = stack.pop()
            sd.pop()
            if sd[-1] >= d:
                eparent.append(stack[-1])
                echild.append(w)
            else:
                parent.append(-1)
                sdepth.append(d)
                leaf_pos.append(-1)
                eparent.append(cnt)
                echild.append(w)
                stack.append(cnt)
                sd.append(d)
                cnt += 1
        parent.append(-1)
        sdepth.append(n - sa[i])
        leaf_pos.append(sa[i])
        stack.append(cnt)
        sd.append(n - sa[i])
        cnt += 1
    while len(stack) > 1:
        w = stack.pop()
        sd.pop()
        eparent.append(stack[-1])
        echild.append(w)

    node_count = cnt
    eparent_a = np.array(eparent, dtype=np.int32)
    echild_a = np.array(echild, dtype=np.int32)
    parent_a = np.full(node_count, -1, dtype=np.int32)
    parent_a[echild_a] = eparent_a
    # stable sort keeps the per-parent finalize order, which is lex order
    order = np.argsort(eparent_a, kind="stable")
    child_arr = echild_a[order]
    counts = np.bincount(eparent_a, minlength=node_count)
    child_start = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(counts, out=child_start[1:])

    sdepth_a = np.array(sdepth, dtype=np.int32)
    leaf_pos_a = np.array(leaf_pos, dtype=np.int32)
    leaf_of = np.empty(n, dtype=np.int32)
    leaves = np.nonzero(leaf_pos_a >= 0)[0]
    leaf_of[leaf_pos_a[leaves]] = leaves

    return SuffixTree(n, node_count, parent_a, sdepth_a, leaf_pos_a, leaf_of, child_start, child_arr)


class LcaIndex:
    """Euler tour + block range-minimum structure; O(1) LCA queries.

    In-block minima are resolved by a bounded scan (block size is a fixed
    constant), cross-block by precomputed prefix/suffix argmins and a
    sparse table over per-block minima.
    """

    __slots__ = (
        "euler_node",
        "euler_depth",
        "first_occ",
        "pref_min",
        "suf_min",
        "table",
        "nblocks",
    )

    def __init__(self, euler_node, euler_depth, first_occ, pref_min, suf_min, table, nblocks):
        self.euler_node = euler_node
        self.euler_depth = euler_depth
        self.first_occ = first_occ
        self.pref_min = pref_min
        self.suf_min = suf_min
        self.table = table
        self.nblocks = nblocks

    def lca(self, u: int, v: int) -> int:
        l = int(self.first_occ[u])
        r = int(self.first_occ[v])
        if l > r:
            l, r = r, l
        dep = self.euler_depth
        bl = l >> 6
        br = r >> 6
        if bl == br:
            best = l + int(np.argmin(dep[l : r + 1]))
            return int(self.euler_node[best])
        best = int(self.suf_min[l])
        cand = int(self.pref_min[r])
        if dep[cand] < dep[best]:
            best = cand
        lo_b, hi_b = bl + 1, br - 1
        if lo_b <= hi_b:
            k = (hi_b - lo_b + 1).bit_length() - 1
            c = int(self.table[k][lo_b])
            if dep[c] < dep[best]:
                best = c
            c = int(self.table[k][hi_b - (1 << k) + 1])
            if dep[c] < dep[best]:
                best = c
        return int(self.euler_node[best])


def _euler_tour(tree: SuffixTree):
    """Iterative lex-order DFS.  Returns euler node/depth arrays and the
    leftmost-leaf SA index per node."""
    nc = tree.node_count
    child_start = tree.child_start.tolist()
    child_arr = tree.child_arr.tolist()
    leaf_pos = tree.leaf_pos.tolist()

    euler_node = [0]
    euler_depth = [0]
    ptr = list(child_start[:-1])
    sa_lo = [0] * nc
    stack = [0]
    nleaves = 0
    while stack:
        u = stack[-1]
        p = ptr[u]
        if p < child_start[u + 1]:
            ptr[u] = p + 1
            c = child_arr[p]
            sa_lo[c] = nleaves
            if leaf_pos[c] >= 0:
                nleaves += 1
            euler_node.append(c)
            euler_depth.append(len(stack))
            stack.append(c)
        else:
            stack.pop()
            if stack:
                euler_node.append(stack[-1])
                euler_depth.append(len(stack) - 1)
    return (
        np.array(euler_node, dtype=np.int32),
        np.array(euler_depth, dtype=np.int32),
        np.array(sa_lo, dtype=np.int32),
    )


def build_lca(tree: SuffixTree, bundle: SuffixArrayBundle) -> LcaIndex:
    euler_node, euler_depth, sa_lo = _euler_tour(tree)
    tree.sa_lo = sa_lo
    tree.rep = bundle.sa[sa_lo]

    nc = tree.node_count
    m = len(euler_node)
    first_occ = np.full(nc, -1, dtype=np.int64)
    # first occurrence: reverse scan assigns earliest index last
    rev = np.arange(m - 1, -1, -1, dtype=np.int64)
    first_occ[euler_node[rev]] = rev

    nblocks = (m + LCA_BLOCK - 1) // LCA_BLOCK
    pad = nblocks * LCA_BLOCK
    dep_pad = np.full(pad, np.iinfo(np.int32).max, dtype=np.int64)
    dep_pad[:m] = euler_depth
    blocks = dep_pad.reshape(nblocks, LCA_BLOCK)
    pos_in_block = np.argmin(blocks, axis=1)
    bmin_pos = (np.arange(nblocks, dtype=np.int64) * LCA_BLOCK + pos_in_block)

    # prefix/suffix argmin positions within each block (absolute indices)
    idx_grid = np.arange(pad, dtype=np.int64).reshape(nblocks, LCA_BLOCK)
    run = np.minimum.accumulate(blocks, axis=1)
    take_new = blocks == run
    pref = np.where(take_new, idx_grid, 0)
    pref = np.maximum.accumulate(pref, axis=1)
    rblocks = blocks[:, ::-1]
    rrun = np.minimum.accumulate(rblocks, axis=1)
    rtake = rblocks <= rrun
    suf = np.where(rtake, idx_grid[:, ::-1], pad)
    suf = np.minimum.accumulate(suf, axis=1)[:, ::-1]

    table = [bmin_pos]
    k = 1
    while (1 << k) <= nblocks:
        prev = table[-1]
        half = 1 << (k - 1)
        new_len = nblocks - (1 << k) + 1
        a = prev[:new_len]
        b = prev[half : half + new_len]
        table.append(np.where(dep_pad[a] <= dep_pad[b], a, b))
        k += 1

    return LcaIndex(
        euler_node,
        dep_pad,
        first_occ,
        pref.reshape(-1)[:m].astype(np.int64),
        suf.reshape(-1)[:m].astype(np.int64),
        table,
        nblocks,
    )


def lcp_positions(tree: SuffixTree, lca_idx: LcaIndex, p: int, q: int) -> int:
    """Length of the longest common prefix of the suffixes at p and q."""
    u = lca_idx.lca(int(tree.leaf_of[p]), int(tree.leaf_of[q]))
    return int(tree.sdepth[u])


class BranchingIndex:
    """Per-direction skeletons over branching ancestors with O(1) level
    ancestors (ladders + jump pointers) and per-node branching counts."""

    __slots__ = ("branch_count", "skel_parent", "skel_depth", "_jump", "_lad_of", "_lad_idx", "_lad_nodes", "_lad_start")

    def __init__(self):
        self.branch_count = [None, None]  # proper branching ancestors per node
        self.skel_parent = [None, None]
        self.skel_depth = [None, None]
        self._jump = [None, None]
        self._lad_of = [None, None]
        self._lad_idx = [None, None]
        self._lad_nodes = [None, None]
        self._lad_start = [None, None]

    def level_ancestor(self, v: int, d: int, direction: int) -> int:
        if d == 0:
            return v
        jump = self._jump[direction]
        i = d.bit_length() - 1
        x = int(jump[i][v])
        rem = d - (1 << i)
        if rem == 0:
            return x
        lid = int(self._lad_of[direction][x])
        idx = int(self._lad_idx[direction][x]) - rem
        return int(self._lad_nodes[direction][self._lad_start[direction][lid] + idx])

    def nth_branching_ancestor(self, v: int, d: int, direction: int) -> int:
        if d < 1 or d > int(self.branch_count[direction][v]):
            raise ValueError(f"branching-ancestor rank {d} out of range for node {v}")
        return self.level_ancestor(v, d, direction)


def _build_skeleton_la(idx: BranchingIndex, direction: int, nc: int):
    """Ladder decomposition + jump pointers over one skeleton tree."""
    sparent = idx.skel_parent[direction]
    sdep = idx.skel_depth[direction]

    # heights, processed by skeleton depth layers bottom-up
    height = np.zeros(nc, dtype=np.int32)
    order = np.argsort(sdep, kind="stable")
    bounds = np.searchsorted(sdep[order], np.arange(int(sdep.max()) + 2))
    for d in range(len(bounds) - 2, 0, -1):
        layer = order[bounds[d] : bounds[d + 1]]
        if len(layer):
            np.maximum.at(height, sparent[layer], height[layer] + 1)

    # long child: per parent, a child of maximal height
    nodes = np.arange(nc, dtype=np.int64)
    ch = nodes[sparent >= 0]
    long_child = np.full(nc, -1, dtype=np.int64)
    if len(ch):
        o = np.lexsort((-height[ch], sparent[ch]))
        sorted_par = sparent[ch][o]
        _, firsts = np.unique(sorted_par, return_index=True)
        long_child[sorted_par[firsts]] = ch[o][firsts]

    # paths and ladders
    is_top = np.ones(nc, dtype=bool)
    lc_valid = long_child[long_child >= 0]
    is_top[lc_valid.astype(np.int64)] = False
    lad_nodes: list[int] = []
    lad_start = [0]
    lad_of = np.full(nc, -1, dtype=np.int32)
    lad_idx = np.zeros(nc, dtype=np.int32)
    sparent_l = sparent.tolist()
    long_l = long_child.tolist()
    lid = 0
    for t in np.nonzero(is_top)[0].tolist():
        path = []
        x = t
        while x >= 0:
            path.append(x)
            x = long_l[x]
        ext = []
        x = sparent_l[t]
        while x >= 0 and len(ext) < len(path):
            ext.append(x)
            x = sparent_l[x]
        ext.reverse()
        base = len(lad_nodes)
        lad_nodes.extend(ext)
        off = base + len(ext)
        for i, v in enumerate(path):
            lad_of[v] = lid
            lad_idx[v] = off + i - base
        lad_nodes.extend(path)
        lad_start.append(len(lad_nodes))
        lid += 1

    # jump pointers: 2^k-th skeleton ancestors
    max_d = int(sdep.max())
    levels = max(1, max_d.bit_length())
    j0 = np.where(sparent >= 0, sparent, np.arange(nc, dtype=np.int32)).astype(np.int32)
    jump = [j0]
    for _ in range(1, levels):
        prev = jump[-1]
        jump.append(prev[prev])

    idx._jump[direction] = jump
    idx._lad_of[direction] = lad_of
    idx._lad_idx[direction] = lad_idx
    idx._lad_nodes[direction] = np.array(lad_nodes, dtype=np.int32)
    idx._lad_start[direction] = np.array(lad_start, dtype=np.int64)


def build_branching_index(tree: SuffixTree) -> BranchingIndex:
    """Skeletons, branching counts, and level-ancestor structures for both
    directions in one lex-order traversal."""
    nc = tree.node_count
    child_start = tree.child_start.tolist()
    child_arr = tree.child_arr.tolist()

    idx = BranchingIndex()
    for direction in (LEFT, RIGHT):
        idx.branch_count[direction] = np.zeros(nc, dtype=np.int32)
        idx.skel_parent[direction] = np.full(nc, -1, dtype=np.int32)
        idx.skel_depth[direction] = np.zeros(nc, dtype=np.int32)

    dl = idx.branch_count[LEFT]
    dr = idx.branch_count[RIGHT]
    spl = idx.skel_parent[LEFT]
    spr = idx.skel_parent[RIGHT]
    sdl = idx.skel_depth[LEFT]
    sdr = idx.skel_depth[RIGHT]

    dl_l = [0] * nc
    dr_l = [0] * nc
    spl_l = [-1] * nc
    spr_l = [-1] * nc
    sdl_l = [0] * nc
    sdr_l = [0] * nc

    stack = [0]
    ptr = list(child_start[:-1])
    while stack:
        u = stack[-1]
        p = ptr[u]
        if p < child_start[u + 1]:
            ptr[u] = p + 1
            c = child_arr[p]
            first = p == child_start[u]
            last = p == child_start[u + 1] - 1
            if not first:  # u has a smaller child: left-branching for c's paths
                dl_l[c] = dl_l[u] + 1
                spl_l[c] = u
            else:
                dl_l[c] = dl_l[u]
                spl_l[c] = spl_l[u] if u != 0 else 0
            if not last:  # u has a larger child: right-branching for c's paths
                dr_l[c] = dr_l[u] + 1
                spr_l[c] = u
            else:
                dr_l[c] = dr_l[u]
                spr_l[c] = spr_l[u] if u != 0 else 0
            sdl_l[c] = sdl_l[spl_l[c]] + 1
            sdr_l[c] = sdr_l[spr_l[c]] + 1
            stack.append(c)
        else:
            stack.pop()

    dl[:] = dl_l
    dr[:] = dr_l
    spl[:] = spl_l
    spr[:] = spr_l
    spl[0] = -1
    spr[0] = -1
    sdl[:] = sdl_l
    sdr[:] = sdr_l

    for direction in (LEFT, RIGHT):
        _build_skeleton_la(idx, direction, nc)
    return idx
