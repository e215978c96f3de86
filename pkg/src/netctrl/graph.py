"""Simple directed graph with incremental degree bookkeeping.

Nodes are the fixed set {0, ..., n-1}; the node set never changes after
construction. Self-loops and parallel edges are rejected everywhere.
"""


class GraphError(ValueError):
    """Base class for all graph construction/mutation errors."""


class InvalidSizeError(GraphError):
    """Graph must have at least one node."""


class NodeRangeError(GraphError):
    """Node id outside [0, n)."""


class SelfLoopError(GraphError):
    """Edges from a node to itself are forbidden."""


class DuplicateEdgeError(GraphError):
    """The (source, target) pair is already present."""


class EdgeNotFoundError(GraphError):
    """The (source, target) pair is not present."""


class DirectedGraph:
    """Mutable simple directed graph.

    Degree tables are maintained incrementally on every add/remove; use
    :meth:`check_consistency` in tests or debugging to re-derive them from
    the edge set and verify agreement.

    Not thread-safe while being mutated: a single writer mutates, and the
    value may be shared between readers only after mutation stops.
    """

    __slots__ = ("n", "edges", "out_adj", "in_adj", "out_deg", "in_deg")

    def __init__(self, n: int):
        if n < 1:
            raise InvalidSizeError(f"graph needs at least one node, got n={n}")
        self.n = n
        self.edges: set[tuple[int, int]] = set()
        self.out_adj: list[list[int]] = [[] for _ in range(n)]
        self.in_adj: list[list[int]] = [[] for _ in range(n)]
        self.out_deg = [0] * n
        self.in_deg = [0] * n

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise NodeRangeError(f"node {u} out of range [0, {self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def add_edge(self, u: int, v: int) -> None:
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise SelfLoopError(f"self-loop ({u}, {v}) is forbidden")
        if (u, v) in self.edges:
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        self.edges.add((u, v))
        self.out_adj[u].append(v)
        self.in_adj[v].append(u)
        self.out_deg[u] += 1
        self.in_deg[v] += 1

    def remove_edge(self, u: int, v: int) -> None:
        if (u, v) not in self.edges:
            raise EdgeNotFoundError(f"edge ({u}, {v}) not present")
        self.edges.remove((u, v))
        self.out_adj[u].remove(v)
        self.in_adj[v].remove(u)
        self.out_deg[u] -= 1
        self.in_deg[v] -= 1

    def average_degree(self) -> float:
        """Average total degree 2L/N."""
        return 2.0 * len(self.edges) / self.n

    def sorted_edges(self) -> list[tuple[int, int]]:
        """Edges in ascending (source, target) order."""
        return sorted(self.edges)

    def copy(self) -> "DirectedGraph":
        g = DirectedGraph(self.n)
        g.edges = set(self.edges)
        g.out_adj = [list(a) for a in self.out_adj]
        g.in_adj = [list(a) for a in self.in_adj]
        g.out_deg = list(self.out_deg)
        g.in_deg = list(self.in_deg)
        return g

    def check_consistency(self) -> None:
        """Re-derive every table from the edge set; raise AssertionError on drift."""
        out_deg = [0] * self.n
        in_deg = [0] * self.n
        for u, v in self.edges:
            assert 0 <= u < self.n and 0 <= v < self.n and u != v
            out_deg[u] += 1
            in_deg[v] += 1
        assert out_deg == self.out_deg, "out-degree table drifted"
        assert in_deg == self.in_deg, "in-degree table drifted"
        assert sum(out_deg) == sum(in_deg) == len(self.edges)
        for u in range(self.n):
            assert sorted(self.out_adj[u]) == sorted(
                v for (x, v) in self.edges if x == u
            ), f"out adjacency of {u} disagrees with edge set"
            assert sorted(self.in_adj[u]) == sorted(
                x for (x, v) in self.edges if v == u
            ), f"in adjacency of {u} disagrees with edge set"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):  # pragma: no cover - mutable, not hashable
        raise TypeError("DirectedGraph is mutable and unhashable")

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, edges={len(self.edges)})"


def new_graph(n: int) -> DirectedGraph:
    """Construct an empty graph on n nodes (n >= 1)."""
    return DirectedGraph(n)
