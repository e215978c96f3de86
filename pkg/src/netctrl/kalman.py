"""Controllability rank checks with exact arithmetic over a prime field.

The rank of the block matrix (B, AB, A^2 B, ..., A^(N-1) B) decides
controllability of the linear system pair (A, B). Floating point is useless
here (entries of A^(N-1) explode), so weights are drawn from a large prime
field and the rank is computed exactly; by the Schwartz-Zippel bound a
random draw realizes the generic rank except with probability at most
N^2 / prime per trial.
"""

import random
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graph import DirectedGraph
from .matching import DriverSet, driver_set, maximum_matching

# smallest prime above 2^61 (verified by deterministic Miller-Rabin)
DEFAULT_PRIME = 2305843009213693967


@dataclass
class WeightedSystem:
    """Sparse (A, B) pair over GF(prime).

    a_entries is keyed by graph edge (u, v) and holds the state-matrix
    entry at row v, column u (the arc drives node v from node u).
    b_entries is keyed by (state row, input column).
    """

    n: int
    m: int
    a_entries: dict[tuple[int, int], int]
    b_entries: dict[tuple[int, int], int]
    prime: int = DEFAULT_PRIME


def _source_components(g: DirectedGraph) -> list[list[int]]:
    """Strongly connected components with no incoming edge from outside."""
    n = g.n
    edges = g.sorted_edges()
    if edges:
        src = np.fromiter((e[0] for e in edges), dtype=np.int64, count=len(edges))
        dst = np.fromiter((e[1] for e in edges), dtype=np.int64, count=len(edges))
        cs = csr_matrix(
            (np.ones(len(edges), dtype=np.int8), (src, dst)), shape=(n, n)
        )
        ncomp, labels = connected_components(cs, directed=True, connection="strong")
    else:
        ncomp, labels = n, np.arange(n)
    has_external_in = [False] * ncomp
    for u, v in edges:
        if labels[u] != labels[v]:
            has_external_in[labels[v]] = True
    members: list[list[int]] = [[] for _ in range(ncomp)]
    for node in range(n):
        members[labels[node]].append(node)
    return [members[c] for c in range(ncomp) if not has_external_in[c]]


def build_input_matrix(
    g: DirectedGraph, drivers: DriverSet, seed: int = 0, prime: int = DEFAULT_PRIME
) -> tuple[dict[tuple[int, int], int], int]:
    """Input-matrix entries realizing the given driver set.

    One column per driver with a single random nonzero entry at the driver's
    row. A perfect matching leaves no drivers, in which case node 0 stands
    in. Every source strongly connected component that contains no driver
    additionally gets one entry in column 0 at its lowest node: those
    components are unreachable from the inputs otherwise, and sharing an
    existing column keeps the input count at the driver count.
    """
    rng = random.Random(seed)
    rows = sorted(drivers.drivers) if drivers.drivers else [0]
    entries: dict[tuple[int, int], int] = {}
    for col, row in enumerate(rows):
        entries[(row, col)] = rng.randrange(1, prime)
    covered = set(rows)
    for comp in _source_components(g):
        if not covered.intersection(comp):
            entries[(min(comp), 0)] = rng.randrange(1, prime)
    return entries, len(rows)


def make_weighted_system(
    g: DirectedGraph, drivers: DriverSet, seed: int = 0, prime: int = DEFAULT_PRIME
) -> WeightedSystem:
    """Random nonzero weights on every edge plus a driver-derived B."""
    rng = random.Random(seed)
    a_entries = {e: rng.randrange(1, prime) for e in g.sorted_edges()}
    b_entries, m = build_input_matrix(g, drivers, seed=rng.randrange(1 << 48), prime=prime)
    return WeightedSystem(g.n, m, a_entries, b_entries, prime)


def controllability_rank(sys: WeightedSystem) -> int:
    """Exact rank over GF(prime) of (B, AB, ..., A^(N-1) B).

    Grows a Krylov column basis: starting from the columns of B, multiplies
    only the vectors that extended the basis in the previous round, and
    stops as soon as the rank is N or a round adds nothing.
    """
    p = sys.prime
    n = sys.n
    cols: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), w in sys.a_entries.items():
        cols[u].append((v, w))

    basis: list[tuple[int, list[int]]] = []  # (pivot index, vector with vec[pivot]=1)

    def reduce_add(vec: list[int]) -> bool:
        for piv, bvec in basis:
            c = vec[piv]
            if c:
                for i in range(n):
                    if bvec[i]:
                        vec[i] = (vec[i] - c * bvec[i]) % p
        for i in range(n):
            if vec[i]:
                inv = pow(vec[i], -1, p)
                basis.append((i, [(x * inv) % p for x in vec]))
                return True
        return False

    frontier: list[list[int]] = []
    for col in range(sys.m):
        vec = [0] * n
        for (row, c), w in sys.b_entries.items():
            if c == col:
                vec[row] = w % p
        frontier.append(vec)

    survivors = []
    for vec in frontier:
        if reduce_add(list(vec)):
            survivors.append(vec)
    while survivors and len(basis) < n:
        next_survivors = []
        for vec in survivors:
            out = [0] * n
            for j, x in enumerate(vec):
                if x:
                    for i, w in cols[j]:
                        out[i] = (out[i] + w * x) % p
            if reduce_add(list(out)):
                next_survivors.append(out)
        survivors = next_survivors
    return len(basis)


def verify_driver_set(g: DirectedGraph, trials: int = 3, seed: int = 0) -> bool:
    """True iff a matching-derived driver set achieves full rank in at least
    one of `trials` independent random-weight draws."""
    ok, _, _ = controllability_report(g, trials=trials, seed=seed)
    return ok


def controllability_report(
    g: DirectedGraph, trials: int = 3, seed: int = 0
) -> tuple[bool, int, int]:
    """(controllable, input count, best rank over trials)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    m = maximum_matching(g)
    d = driver_set(g, m)
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        sys = make_weighted_system(g, d, seed=rng.randrange(1 << 62))
        r = controllability_rank(sys)
        best = max(best, r)
        if best == g.n:
            return True, d.n_driver, best
    return False, d.n_driver, best
