"""Maximum matching on the bipartite view of a directed graph.

Every directed edge (u, v) becomes one bipartite edge between the out-copy
u+ of its source and the in-copy v- of its target. A matching in that view
is a set of directed edges sharing no common source and no common target.

The matcher runs Hopcroft-Karp style phases: one multi-source BFS over the
alternating orientation per phase, then a maximal set of vertex-disjoint
shortest augmenting paths extracted from the BFS forest. The BFS/SCC
primitives are scipy.sparse.csgraph; everything else is explicit here.
"""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .graph import DirectedGraph

_MASK64 = (1 << 64) - 1


def _edge_token(code: int) -> int:
    # splitmix64 of the edge code; used for order-independent set signatures
    x = (code + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


@dataclass
class Matching:
    """A maximum matching: edge set plus per-endpoint lookup maps."""

    matched_edges: set[tuple[int, int]]
    matched_out: dict[int, tuple[int, int]]  # source node -> its matched edge
    matched_in: dict[int, tuple[int, int]]  # target node -> its matched edge

    @property
    def size(self) -> int:
        return len(self.matched_edges)


@dataclass
class DriverSet:
    """Nodes whose in-copy is unmatched, plus the driver count max(N-|M|, 1)."""

    drivers: set[int]
    n_driver: int


class AlternatingEngine:
    """Matching plus alternating-reachability analysis, updatable in place.

    The engine snapshots the graph's edges into flat arrays at construction
    and keeps them synchronized through :meth:`replace_edge`, so a caller
    that deletes one edge and adds another (the rewiring loop) never pays
    for a full rebuild. The directed "alternating orientation" D used
    throughout has 2n vertices (out-copies 0..n-1, in-copies n..2n-1):
    an unmatched edge (u, v) is the arc u -> v+n, a matched edge the arc
    v+n -> u. Directed paths in D from free out-copies are exactly the
    alternating paths used both to augment and to decide which edges can
    belong to some maximum matching.
    """

    def __init__(self, g: DirectedGraph):
        self.g = g
        self.n = g.n
        edges = g.sorted_edges()
        m = len(edges)
        self.src = np.fromiter((e[0] for e in edges), dtype=np.int64, count=m)
        self.dst = np.fromiter((e[1] for e in edges), dtype=np.int64, count=m)
        self.slot = {e: i for i, e in enumerate(edges)}
        self.matched_out = np.full(self.n, -1, dtype=np.int64)
        self.matched_in = np.full(self.n, -1, dtype=np.int64)
        self.size = 0
        self.signature = 0
        n = self.n
        for u, v in edges:
            self.signature ^= _edge_token(u * n + v)
        self._reach = None  # forward reach of free out-copies, valid when maximum
        self._rev = None  # vertices with an alternating path to a free in-copy
        self._csr = None  # alternating orientation incl. virtual source row
        self._analysis = None  # cached (matched, redundant, critical) masks
        self.ensure_maximum()

    # -- alternating orientation -------------------------------------------

    def _matched_mask(self) -> np.ndarray:
        return self.matched_out[self.src] == self.dst

    def _arc_arrays(self):
        m = self._matched_mask()
        tails = np.where(m, self.dst + self.n, self.src)
        heads = np.where(m, self.src, self.dst + self.n)
        return m, tails, heads

    def _forward_csr(self):
        vid = 2 * self.n
        _, tails, heads = self._arc_arrays()
        free_left = np.flatnonzero(self.matched_out == -1)
        t = np.concatenate([tails, np.full(free_left.size, vid, dtype=np.int64)])
        h = np.concatenate([heads, free_left])
        data = np.ones(t.size, dtype=np.int8)
        return csr_matrix((data, (t, h)), shape=(vid + 1, vid + 1))

    # -- matching ------------------------------------------------------------

    def ensure_maximum(self) -> None:
        """Augment until no free in-copy is reachable from a free out-copy."""
        vid = 2 * self.n
        if self._reach is not None:
            return
        while True:
            if self.size == self.n or not (self.matched_out == -1).any():
                # no free out-copy: nothing is alternating-reachable
                self._reach = np.zeros(vid + 1, dtype=bool)
                return
            cs = self._forward_csr()
            order, pred = breadth_first_order(
                cs, vid, directed=True, return_predecessors=True
            )
            reach = np.zeros(vid + 1, dtype=bool)
            reach[order] = True
            free_right = np.flatnonzero(self.matched_in == -1) + self.n
            hit = free_right[reach[free_right]]
            if hit.size == 0:
                self._reach = reach
                self._csr = cs
                return
            used = np.zeros(vid + 1, dtype=bool)
            for r in hit:  # ascending ids keeps the result deterministic
                path = []
                x = int(r)
                blocked = False
                while x != vid:
                    if used[x]:
                        blocked = True
                        break
                    path.append(x)
                    x = int(pred[x])
                if blocked:
                    continue
                path.reverse()  # [u0, v1, u1, v2, ..., r], alternating sides
                for k in range(0, len(path), 2):
                    u = path[k]
                    v = path[k + 1] - self.n
                    self.matched_out[u] = v
                    self.matched_in[v] = u
                for x in path:
                    used[x] = True
                self.size += 1

    # -- analysis --------------------------------------------------------------

    def analyze(self):
        """Per-edge masks (matched, redundant, critical) under the current graph.

        An unmatched edge lies in some maximum matching iff its source
        out-copy is reachable from a free out-copy, or its target in-copy
        reaches a free in-copy, or both endpoints share a strongly connected
        component of D (an alternating cycle). A matched edge lies in every
        maximum matching iff none of the symmetric conditions lets any
        maximum matching avoid it.
        """
        if self._analysis is not None:
            return self._analysis
        self.ensure_maximum()
        n = self.n
        vid = 2 * n
        reach = self._reach
        matched, tails, heads = self._arc_arrays()
        free_right = np.flatnonzero(self.matched_in == -1) + n
        if free_right.size:
            t2 = np.concatenate([heads, np.full(free_right.size, vid, dtype=np.int64)])
            h2 = np.concatenate([tails, free_right])
            rcs = csr_matrix(
                (np.ones(t2.size, dtype=np.int8), (t2, h2)), shape=(vid + 1, vid + 1)
            )
            order = breadth_first_order(rcs, vid, directed=True, return_predecessors=False)
            rev = np.zeros(vid + 1, dtype=bool)
            rev[order] = True
        else:
            rev = np.zeros(vid + 1, dtype=bool)
        self._rev = rev
        if self._csr is None:
            data = np.ones(tails.size, dtype=np.int8)
            self._csr = csr_matrix((data, (tails, heads)), shape=(vid + 1, vid + 1))
        _, labels = connected_components(self._csr, directed=True, connection="strong")
        same_scc = labels[self.src] == labels[self.dst + n]
        usable = reach[self.src] | rev[self.dst + n] | same_scc
        redundant = ~matched & ~usable
        avoidable = reach[self.dst + n] | rev[self.src] | same_scc
        critical = matched & ~avoidable
        self._analysis = (matched, redundant, critical)
        return self._analysis

    def redundant_edges(self) -> list[tuple[int, int]]:
        """All edges in no maximum matching, ascending (source, target)."""
        _, redundant, _ = self.analyze()
        idx = np.flatnonzero(redundant)
        if idx.size == 0:
            return []
        us = self.src[idx]
        vs = self.dst[idx]
        order = np.lexsort((vs, us))
        return list(zip(us[order].tolist(), vs[order].tolist()))

    # -- incremental edits -------------------------------------------------------

    def replace_edge(self, old: tuple[int, int], new: tuple[int, int]) -> None:
        """Swap one edge for another; the graph itself must already hold `new`.

        The old edge must not be in the matching (the rewiring loop only
        deletes edges provably outside every maximum matching), so the
        matching stays valid and at most one augmentation is pending.
        """
        i = self.slot.pop(old)
        self.slot[new] = i
        if self.matched_out[old[0]] == old[1]:
            raise AssertionError(f"cannot replace matched edge {old}")
        self.src[i] = new[0]
        self.dst[i] = new[1]
        n = self.n
        self.signature ^= _edge_token(old[0] * n + old[1])
        self.signature ^= _edge_token(new[0] * n + new[1])
        self._reach = None
        self._rev = None
        self._csr = None
        self._analysis = None


def maximum_matching(g: DirectedGraph) -> Matching:
    """Deterministic maximum-cardinality matching of the bipartite view."""
    eng = AlternatingEngine(g)
    edges = set()
    by_out: dict[int, tuple[int, int]] = {}
    by_in: dict[int, tuple[int, int]] = {}
    for u, v in enumerate(eng.matched_out.tolist()):
        if v >= 0:
            e = (u, v)
            edges.add(e)
            by_out[u] = e
            by_in[v] = e
    return Matching(edges, by_out, by_in)


def driver_set(g: DirectedGraph, m: Matching) -> DriverSet:
    """Unmatched in-copies are the drivers; count is max(N - |M|, 1)."""
    drivers = {v for v in range(g.n) if v not in m.matched_in}
    return DriverSet(drivers, max(g.n - m.size, 1))


def n_d(g: DirectedGraph) -> float:
    """Driver-node density: max(N - |M|, 1) / N."""
    m = maximum_matching(g)
    return max(g.n - m.size, 1) / g.n
