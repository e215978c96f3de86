"""Seeded construction of the two network models used in the experiments.

Both generators place exactly L = round(n * k_avg / 2) directed edges so the
realized average degree 2L/N sits exactly on the requested sweep point.
The PRNG is Python's Mersenne Twister seeded with a 64-bit integer; results
are deterministic per seed but not bit-compatible with other PRNGs.
"""

import bisect
import random
from dataclasses import dataclass

from .graph import DirectedGraph


class GenerationError(ValueError):
    """Base class for generator failures."""


class InfeasibleDensityError(GenerationError):
    """Requested edge count exceeds n*(n-1)."""


class GenerationStuckError(GenerationError):
    """Rejection sampling stopped making progress (density too high for the
    weight skew)."""


@dataclass(frozen=True)
class GeneratorSpec:
    model: str  # "ER" or "SF"
    n: int
    k_avg: float
    gamma: float | None = None  # SF only, > 2
    seed: int = 0

    def edge_target(self) -> int:
        # round-half-up keeps L deterministic across platforms
        return int(self.n * self.k_avg / 2.0 + 0.5)


def _validate(spec: GeneratorSpec, model: str) -> int:
    if spec.model != model:
        raise GenerationError(f"spec.model is {spec.model!r}, expected {model!r}")
    if spec.n < 1:
        raise GenerationError(f"n must be >= 1, got {spec.n}")
    if spec.k_avg <= 0:
        raise GenerationError(f"k_avg must be > 0, got {spec.k_avg}")
    L = spec.edge_target()
    if L > spec.n * (spec.n - 1):
        raise InfeasibleDensityError(
            f"L={L} exceeds n*(n-1)={spec.n * (spec.n - 1)} for n={spec.n}"
        )
    return L


def _decode_pair(code: int, n: int) -> tuple[int, int]:
    # bijection [0, n*(n-1)) -> ordered non-self pairs
    u, r = divmod(code, n - 1)
    return u, r + (r >= u)


def erdos_renyi(spec: GeneratorSpec) -> DirectedGraph:
    """Uniform directed graph with exactly L distinct non-self edges."""
    L = _validate(spec, "ER")
    rng = random.Random(spec.seed)
    g = DirectedGraph(spec.n)
    if spec.n == 1:
        if L > 0:
            raise InfeasibleDensityError("single-node graph admits no edges")
        return g
    for code in rng.sample(range(spec.n * (spec.n - 1)), L):
        g.add_edge(*_decode_pair(code, spec.n))
    return g


def scale_free_static(spec: GeneratorSpec) -> DirectedGraph:
    """Static-model scale-free graph with power-law exponent gamma.

    Node weights are w_i proportional to (i+1)^(-xi) with xi = 1/(gamma-1).
    Each edge draws its source from the weights laid over one shuffled node
    order and its target from the weights laid over a second, independent
    shuffle, which decorrelates in- and out-degrees. Self-loops and
    duplicates are rejected and redrawn.
    """
    L = _validate(spec, "SF")
    if spec.gamma is None or spec.gamma <= 2:
        raise GenerationError(f"SF model needs gamma > 2, got {spec.gamma}")
    n = spec.n
    rng = random.Random(spec.seed)
    xi = 1.0 / (spec.gamma - 1.0)
    weights = [(i + 1) ** (-xi) for i in range(n)]
    cum = []
    acc = 0.0
    for w in weights:
        acc += w
        cum.append(acc)
    total = cum[-1]
    source_of_rank = list(range(n))
    target_of_rank = list(range(n))
    rng.shuffle(source_of_rank)
    rng.shuffle(target_of_rank)

    g = DirectedGraph(n)
    rejections = 0
    limit = 100 * max(L, 1)
    while g.edge_count < L:
        u = source_of_rank[bisect.bisect_left(cum, rng.random() * total)]
        v = target_of_rank[bisect.bisect_left(cum, rng.random() * total)]
        if u == v or g.has_edge(u, v):
            rejections += 1
            if rejections >= limit:
                raise GenerationStuckError(
                    f"{rejections} consecutive rejections at L={g.edge_count}/{L}; "
                    "density infeasible for this weight skew"
                )
            continue
        rejections = 0
        g.add_edge(u, v)
    return g


def generate(spec: GeneratorSpec) -> DirectedGraph:
    """Dispatch on spec.model."""
    if spec.model == "ER":
        return erdos_renyi(spec)
    if spec.model == "SF":
        return scale_free_static(spec)
    raise GenerationError(f"unknown model {spec.model!r}")


__all__ = [
    "GeneratorSpec",
    "GenerationError",
    "InfeasibleDensityError",
    "GenerationStuckError",
    "erdos_renyi",
    "scale_free_static",
    "generate",
]
