"""Independent brute-force oracles used to validate the fast implementations.

Everything here is deliberately naive: bitmask dynamic programming and
explicit enumeration, no shared code with the library internals.
"""

import math
import random

from netctrl.graph import DirectedGraph


def random_graph(rng: random.Random, n_max: int, p_range=(0.05, 0.6), n_min: int = 2):
    n = rng.randrange(n_min, n_max + 1)
    p = rng.uniform(*p_range)
    g = DirectedGraph(n)
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                g.add_edge(u, v)
    return g


def max_matching_size(g: DirectedGraph) -> int:
    """Exact maximum bipartite matching size by bitmask DP over targets."""
    n = g.n
    adj = [sorted(g.out_adj[u]) for u in range(n)]
    memo: dict[tuple[int, int], int] = {}

    def best(u: int, used: int) -> int:
        if u == n:
            return 0
        key = (u, used)
        if key in memo:
            return memo[key]
        score = best(u + 1, used)  # leave u unmatched
        for v in adj[u]:
            bit = 1 << v
            if not used & bit:
                score = max(score, 1 + best(u + 1, used | bit))
        memo[key] = score
        return score

    return best(0, 0)


def all_maximum_matchings(g: DirectedGraph) -> list[frozenset]:
    """Every maximum matching, as frozensets of edges."""
    target = max_matching_size(g)
    n = g.n
    adj = [sorted(g.out_adj[u]) for u in range(n)]
    found: list[frozenset] = []

    def rec(u: int, used: int, chosen: list):
        if len(chosen) + (n - u) < target:
            return  # even matching every remaining source cannot reach target
        if u == n:
            if len(chosen) == target:
                found.append(frozenset(chosen))
            return
        rec(u + 1, used, chosen)
        for v in adj[u]:
            bit = 1 << v
            if not used & bit:
                chosen.append((u, v))
                rec(u + 1, used | bit, chosen)
                chosen.pop()

    rec(0, 0, [])
    return found


def link_labels(g: DirectedGraph) -> dict[tuple[int, int], str]:
    """critical/redundant/ordinary from explicit enumeration."""
    matchings = all_maximum_matchings(g)
    labels = {}
    for e in g.edges:
        count = sum(1 for m in matchings if e in m)
        if count == len(matchings):
            labels[e] = "critical"
        elif count == 0:
            labels[e] = "redundant"
        else:
            labels[e] = "ordinary"
    return labels


def streaming_assortativity(g: DirectedGraph, alpha: str, beta: str):
    """Single-pass moment accumulation; independent of the library's
    two-pass evaluation."""
    da = g.in_deg if alpha == "in" else g.out_deg
    db = g.in_deg if beta == "in" else g.out_deg
    L = sx = sy = sxy = sxx = syy = 0
    for u, v in g.edges:
        x = da[u]
        y = db[v]
        L += 1
        sx += x
        sy += y
        sxy += x * y
        sxx += x * x
        syy += y * y
    if L == 0:
        return None
    cov = sxy / L - (sx / L) * (sy / L)
    vx = sxx / L - (sx / L) ** 2
    vy = syy / L - (sy / L) ** 2
    if vx <= 0 or vy <= 0:
        return None
    return cov / math.sqrt(vx * vy)


def direct_heterogeneity(g: DirectedGraph):
    """O(N^2) double sum over all node pairs."""
    L = g.edge_count
    if L == 0:
        return None
    n = g.n
    k = [g.in_deg[i] + g.out_deg[i] for i in range(n)]
    total = sum(abs(k[i] - k[j]) for i in range(n) for j in range(n))
    return total / (2.0 * n * n * (2.0 * L / n))


def powerlaw_mle(degrees, k_min: int = 6):
    """Discrete power-law exponent fit on the tail k >= k_min."""
    tail = [k for k in degrees if k >= k_min]
    s = sum(math.log(k / (k_min - 0.5)) for k in tail)
    return 1.0 + len(tail) / s
