"""Rewiring loops that trade redundant links for links between hub nodes.

Every iteration deletes one redundant link (an edge in no maximum matching,
so the deletion provably cannot change the matching size) and adds one
absent link from a maximal out-degree node to a maximal in-degree node,
keeping node and edge counts fixed.

The regular variant prefers addition pairs whose source out-copy lies on an
alternating path from a free out-copy and whose target in-copy has an
alternating path to a free in-copy: such a link always extends the maximum
matching, so each of these additions removes one driver node. Once no such
pair exists (typically because the matching is perfect) it falls back to
the unrestricted hub scan, which concentrates the recycled links between
high-degree nodes. Links added by the loop are never chosen as deletion
victims; since every iteration therefore consumes one pre-existing link,
the loop terminates without help from the iteration cap.

The random variant deletes a uniformly chosen redundant link and adds a
uniformly chosen absent pair, seeded and deterministic.
"""

import random
from dataclasses import dataclass, field

import numpy as np

from .graph import DirectedGraph
from .matching import AlternatingEngine

NO_REDUNDANT_LINKS = "no-redundant-links"
ITERATION_CAP = "iteration-cap"
NO_ADDITION_CANDIDATE = "no-addition-candidate"
NO_PROGRESS = "no-progress"


@dataclass
class RewireLimits:
    """Safety limits for a rewiring run.

    max_iterations defaults to 10x the initial edge count; seed drives the
    random variant only.
    """

    max_iterations: int | None = None
    seed: int = 0


@dataclass
class RewiringReport:
    iterations: int
    deleted: list[tuple[int, int]] = field(default_factory=list)
    added: list[tuple[int, int]] = field(default_factory=list)
    n_driver_trajectory: list[int] = field(default_factory=list)
    termination_reason: str = ""


def _ranked_nodes(deg: np.ndarray) -> np.ndarray:
    """All node ids by (degree desc, id asc)."""
    return np.lexsort((np.arange(deg.size), -deg))


def _ranked_subset(deg: np.ndarray, subset: np.ndarray) -> np.ndarray:
    order = np.lexsort((subset, -deg[subset]))
    return subset[order]


def _scan_pairs(S, T, n, present, excluded_code):
    """First qualifying pair in increasing rank-sum order, ties source-first.

    S and T are ranked node lists; `present` holds u*n+v codes of existing
    edges. Returns the (u, v) pair or None.
    """
    ns = len(S)
    nt = len(T)
    for s in range(ns + nt - 1):
        lo = s - nt + 1
        if lo < 0:
            lo = 0
        hi = s if s < ns else ns - 1
        for i in range(lo, hi + 1):
            u = S[i]
            v = T[s - i]
            if u == v:
                continue
            code = u * n + v
            if code == excluded_code or code in present:
                continue
            return (u, v)
    return None


def select_addition_pair(
    g: DirectedGraph, excluded: tuple[int, int] | None = None
) -> tuple[int, int] | None:
    """First absent non-self pair from a maximal out-degree node to a maximal
    in-degree node.

    Sources are ranked by (out-degree desc, id asc) into a list S, targets by
    (in-degree desc, id asc) into T; pairs (S[i], T[j]) are scanned in
    increasing rank sum i+j with ties broken by smaller i. Returns None when
    no pair qualifies (the graph is complete up to `excluded`).
    """
    n = g.n
    out_deg = np.array(g.out_deg, dtype=np.int64)
    in_deg = np.array(g.in_deg, dtype=np.int64)
    present = {u * n + v for (u, v) in g.edges}
    excluded_code = -1 if excluded is None else excluded[0] * n + excluded[1]
    return _scan_pairs(
        _ranked_nodes(out_deg).tolist(),
        _ranked_nodes(in_deg).tolist(),
        n,
        present,
        excluded_code,
    )


class _Rewirer:
    """Shared state for one rewiring run: graph, engine, degree tables."""

    def __init__(self, g: DirectedGraph):
        self.work = g.copy()
        self.n = g.n
        self.eng = AlternatingEngine(self.work)
        self.out_deg = np.array(self.work.out_deg, dtype=np.int64)
        self.in_deg = np.array(self.work.in_deg, dtype=np.int64)
        self.present = {u * self.n + v for (u, v) in self.work.edges}

    def remove(self, e):
        self.work.remove_edge(*e)
        self.out_deg[e[0]] -= 1
        self.in_deg[e[1]] -= 1
        self.present.discard(e[0] * self.n + e[1])

    def add(self, f):
        self.work.add_edge(*f)
        self.out_deg[f[0]] += 1
        self.in_deg[f[1]] += 1
        self.present.add(f[0] * self.n + f[1])


def _regular_addition(rw: _Rewirer, excluded):
    """Hub pair favoring matching growth: reachable source, rev-reachable target."""
    eng = rw.eng
    n = rw.n
    excluded_code = excluded[0] * n + excluded[1]
    sources = np.flatnonzero(eng._reach[:n])
    targets = np.flatnonzero(eng._rev[n : 2 * n])
    if sources.size and targets.size:
        f = _scan_pairs(
            _ranked_subset(rw.out_deg, sources).tolist(),
            _ranked_subset(rw.in_deg, targets).tolist(),
            n,
            rw.present,
            excluded_code,
        )
        if f is not None:
            return f
    return _scan_pairs(
        _ranked_nodes(rw.out_deg).tolist(),
        _ranked_nodes(rw.in_deg).tolist(),
        n,
        rw.present,
        excluded_code,
    )


def _random_addition(rng: random.Random, rw: _Rewirer, banned):
    """Uniform absent non-self pair, excluding `banned`; None if none exists."""
    n = rw.n
    if n < 2:
        return None
    space = n * (n - 1)
    banned_code = banned[0] * n + banned[1]
    # rejection sampling is uniform and nearly always instant on sparse graphs
    for _ in range(64):
        code = rng.randrange(space)
        u, r = divmod(code, n - 1)
        v = r + (r >= u)
        if u * n + v != banned_code and u * n + v not in rw.present:
            return (u, v)
    absent = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and (u, v) != banned and u * n + v not in rw.present
    ]
    if not absent:
        return None
    return absent[rng.randrange(len(absent))]


def _lazy_chain(first: int, rest: list[int], rng: random.Random):
    yield first
    rng.shuffle(rest)
    yield from rest


def _victim_order_regular(rw: _Rewirer, added_mask: np.ndarray):
    """Slots of eligible victims, lexicographically smallest edge first."""
    _, redundant, _ = rw.eng.analyze()
    eligible = np.flatnonzero(redundant & ~added_mask)
    if eligible.size == 0:
        return eligible, bool(redundant.any())
    codes = rw.eng.src[eligible] * rw.n + rw.eng.dst[eligible]
    return eligible[np.argsort(codes)], True


def _run(g: DirectedGraph, limits: RewireLimits | None, variant: str):
    limits = limits or RewireLimits()
    rw = _Rewirer(g)
    cap = limits.max_iterations
    if cap is None:
        cap = 10 * rw.work.edge_count
    rng = random.Random(limits.seed) if variant == "random" else None
    eng = rw.eng
    deleted: list[tuple[int, int]] = []
    added: list[tuple[int, int]] = []
    trajectory: list[int] = []
    # links added by this loop are protected from deletion in the regular
    # variant: recycling them is provably unproductive churn, and consuming
    # one pre-existing link per iteration makes termination unconditional
    added_mask = np.zeros(eng.src.size, dtype=bool)
    while True:
        if rng is None:
            victims, any_redundant = _victim_order_regular(rw, added_mask)
            if not any_redundant:
                reason = NO_REDUNDANT_LINKS
                break
            if len(deleted) >= cap:
                reason = ITERATION_CAP
                break
            if victims.size == 0:
                reason = NO_PROGRESS
                break
        else:
            _, redundant, _ = eng.analyze()
            candidates = np.flatnonzero(redundant)
            if candidates.size == 0:
                reason = NO_REDUNDANT_LINKS
                break
            if len(deleted) >= cap:
                reason = ITERATION_CAP
                break
            # one uniform draw; the rest are permuted in only if the addition
            # step cannot pair with that deletion (near-impossible outside of
            # tiny dense graphs)
            first = int(candidates[int(rng.randrange(candidates.size))])
            rest = candidates.tolist()
            rest.remove(first)
            victims = _lazy_chain(first, rest, rng)
        commit = None
        for slot in victims:
            slot = int(slot)
            e = (int(eng.src[slot]), int(eng.dst[slot]))
            rw.remove(e)
            if rng is None:
                # a redundant edge lies on no alternating path from a free
                # out-copy or to a free in-copy, so the reach sets computed
                # by the loop-top analysis survive this deletion
                f = _regular_addition(rw, e)
            else:
                f = _random_addition(rng, rw, e)
            if f is None:
                rw.add(e)  # roll back; try the next redundant edge
                continue
            rw.add(f)
            commit = (slot, e, f)
            break
        if commit is None:
            reason = NO_ADDITION_CANDIDATE
            break
        slot, e, f = commit
        eng.replace_edge(e, f)
        eng.ensure_maximum()
        added_mask[slot] = True
        deleted.append(e)
        added.append(f)
        trajectory.append(max(rw.n - eng.size, 1))
    report = RewiringReport(
        iterations=len(deleted),
        deleted=deleted,
        added=added,
        n_driver_trajectory=trajectory,
        termination_reason=reason,
    )
    return rw.work, report


def rewire_regular(
    g: DirectedGraph, limits: RewireLimits | None = None
) -> tuple[DirectedGraph, RewiringReport]:
    """Deterministic rewiring: delete the smallest eligible redundant link,
    add a link from a maximal out-degree node to a maximal in-degree node,
    favoring pairs that extend the matching."""
    return _run(g, limits, "regular")


def rewire_random(
    g: DirectedGraph, limits: RewireLimits | None = None
) -> tuple[DirectedGraph, RewiringReport]:
    """Baseline: delete a uniformly chosen redundant link, add a uniformly
    chosen absent pair. Deterministic per limits.seed."""
    return _run(g, limits, "random")
