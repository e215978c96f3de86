"""Structural measures: driver-node density, directed assortativity, heterogeneity.

Metrics that can be undefined (zero variance, empty graph) return None
rather than NaN so that downstream aggregation can tell "no data" from 0.
"""

import math

from .graph import DirectedGraph
from .matching import n_d

DEGREE_TYPES = ("in", "out")


def _degree_table(g: DirectedGraph, kind: str) -> list[int]:
    if kind == "in":
        return g.in_deg
    if kind == "out":
        return g.out_deg
    raise ValueError(f"degree type must be 'in' or 'out', got {kind!r}")


def assortativity(g: DirectedGraph, alpha: str, beta: str) -> float | None:
    """Edge-wise Pearson correlation r(alpha, beta).

    For each edge, pairs the alpha-degree of the source with the beta-degree
    of the target; returns the correlation over all L edges, or None when
    L == 0 or either side has zero variance.
    """
    da = _degree_table(g, alpha)
    db = _degree_table(g, beta)
    edges = g.sorted_edges()  # fixed order keeps float rounding reproducible
    L = len(edges)
    if L == 0:
        return None
    xs = [0.0] * L
    ys = [0.0] * L
    for i, (u, v) in enumerate(edges):
        xs[i] = da[u]
        ys[i] = db[v]
    mx = sum(xs) / L
    my = sum(ys) / L
    cov = 0.0
    vx = 0.0
    vy = 0.0
    for i in range(L):
        a = xs[i] - mx
        b = ys[i] - my
        cov += a * b
        vx += a * a
        vy += b * b
    if vx == 0.0 or vy == 0.0:
        return None
    return (cov / L) / (math.sqrt(vx / L) * math.sqrt(vy / L))


def node_degree_correlation(g: DirectedGraph) -> float | None:
    """Per-node Pearson correlation between in-degree and out-degree.

    Not the edge-based assortativity above; reported separately in sweeps
    under the name r_node_inout.
    """
    n = g.n
    xs = g.in_deg
    ys = g.out_deg
    mx = sum(xs) / n
    my = sum(ys) / n
    cov = vx = vy = 0.0
    for i in range(n):
        a = xs[i] - mx
        b = ys[i] - my
        cov += a * b
        vx += a * a
        vy += b * b
    if vx == 0.0 or vy == 0.0:
        return None
    return cov / math.sqrt(vx * vy)


def heterogeneity(g: DirectedGraph) -> float | None:
    """Half the relative mean absolute difference of total degrees.

    H = sum_ij |k_i - k_j| / (2 N^2 <k>) with k_i = in+out degree and
    <k> = 2L/N. Zero for any regular graph, approaching 1 for maximally
    unequal degree sequences; None when the graph has no edges.

    Computed with sorted prefix sums in O(N log N); equal to the direct
    double sum.
    """
    L = g.edge_count
    if L == 0:
        return None
    n = g.n
    k = sorted(g.in_deg[i] + g.out_deg[i] for i in range(n))
    # sum over ordered pairs: each sorted element contributes j*k_j minus the
    # prefix before it, doubled for both orders
    total = 0
    prefix = 0
    for j, kj in enumerate(k):
        total += j * kj - prefix
        prefix += kj
    abs_diff_sum = 2 * total
    k_avg = 2.0 * L / n
    return abs_diff_sum / (2.0 * n * n * k_avg)


def density_of_driver_nodes(g: DirectedGraph) -> float:
    """max(N - |maximum matching|, 1) / N."""
    return n_d(g)
