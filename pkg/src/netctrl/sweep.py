"""Experiment sweeps over (model, N, <k>, gamma, method) grids.

One record per grid cell and replicate. Each record's seed is derived by
hashing the cell coordinates with the base seed, so any record can be
reproduced in isolation; records are emitted in sorted grid order no matter
how the cells were scheduled.
"""

import hashlib
import sys
from dataclasses import dataclass
from multiprocessing import Pool

from .generate import GenerationError, GeneratorSpec, generate
from .matching import driver_set, maximum_matching
from .metrics import assortativity, heterogeneity, node_degree_correlation
from .rewire import RewireLimits, rewire_random, rewire_regular

METHODS = ("original", "random", "regular")

CSV_FIELDS = (
    "model",
    "n",
    "k_target",
    "k_realized",
    "gamma",
    "method",
    "replicate",
    "seed",
    "n_driver",
    "n_d",
    "r_in_in",
    "r_in_out",
    "r_out_in",
    "r_out_out",
    "r_node_inout",
    "H",
    "iterations",
    "termination_reason",
)


@dataclass(frozen=True)
class SweepConfig:
    models: tuple[str, ...]
    n_list: tuple[int, ...]
    k_list: tuple[float, ...]
    gamma_list: tuple[float, ...] = ()
    methods: tuple[str, ...] = ("original",)
    replicates: int = 1
    base_seed: int = 0

    def validate(self) -> None:
        if not self.models or not self.n_list or not self.k_list or not self.methods:
            raise ValueError("models, n_list, k_list and methods must be non-empty")
        if "SF" in self.models and not self.gamma_list:
            raise ValueError("gamma_list must be non-empty when sweeping SF")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        for m in self.methods:
            if m not in METHODS:
                raise ValueError(f"unknown method {m!r}")
        for model in self.models:
            if model not in ("ER", "SF"):
                raise ValueError(f"unknown model {model!r}")


@dataclass
class SweepRecord:
    model: str
    n: int
    k_target: float
    k_realized: float
    gamma: float | None
    method: str
    replicate: int
    seed: int
    n_driver: int
    n_d: float
    r_in_in: float | None
    r_in_out: float | None
    r_out_in: float | None
    r_out_out: float | None
    r_node_inout: float | None
    H: float | None
    iterations: int | None
    termination_reason: str | None

    def csv_row(self) -> str:
        return ",".join(_fmt(getattr(self, f)) for f in CSV_FIELDS)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def csv_header() -> str:
    return ",".join(CSV_FIELDS)


def derive_seed(*parts) -> int:
    """Stable 63-bit seed from arbitrary printable parts."""
    text = "|".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def _cell_key(model, n, k, gamma, method, replicate):
    gamma_txt = "" if gamma is None else f"{float(gamma):g}"
    return (model, n, f"{float(k):g}", gamma_txt, method, replicate)


def cell_seed(base_seed: int, model, n, k, gamma, method, replicate) -> int:
    return derive_seed(base_seed, *_cell_key(model, n, k, gamma, method, replicate))


def grid_cells(config: SweepConfig) -> list[tuple]:
    """(model, n, k, gamma, method, replicate) tuples in output order."""
    config.validate()
    cells = []
    for model in sorted(set(config.models)):
        gammas = sorted(set(config.gamma_list)) if model == "SF" else (None,)
        for n in sorted(set(config.n_list)):
            for k in sorted(set(config.k_list)):
                for gamma in gammas:
                    for method in sorted(set(config.methods)):
                        for rep in range(config.replicates):
                            cells.append((model, n, k, gamma, method, rep))
    return cells


def run_cell(base_seed: int, model, n, k, gamma, method, replicate) -> SweepRecord:
    """Run one grid cell; raises GenerationError on infeasible parameters."""
    seed = cell_seed(base_seed, model, n, k, gamma, method, replicate)
    spec = GeneratorSpec(model=model, n=n, k_avg=float(k), gamma=gamma, seed=seed)
    g = generate(spec)
    iterations: int | None = None
    reason: str | None = None
    if method != "original":
        limits = RewireLimits(seed=derive_seed(seed, "rewire"))
        if method == "regular":
            g, report = rewire_regular(g, limits)
        else:
            g, report = rewire_random(g, limits)
        iterations = report.iterations
        reason = report.termination_reason
    m = maximum_matching(g)
    drivers = driver_set(g, m)
    return SweepRecord(
        model=model,
        n=n,
        k_target=float(k),
        k_realized=g.average_degree(),
        gamma=gamma,
        method=method,
        replicate=replicate,
        seed=seed,
        n_driver=drivers.n_driver,
        n_d=drivers.n_driver / g.n,
        r_in_in=assortativity(g, "in", "in"),
        r_in_out=assortativity(g, "in", "out"),
        r_out_in=assortativity(g, "out", "in"),
        r_out_out=assortativity(g, "out", "out"),
        r_node_inout=node_degree_correlation(g),
        H=heterogeneity(g),
        iterations=iterations,
        termination_reason=reason,
    )


def _worker(args):
    base_seed, cell = args
    try:
        return ("ok", run_cell(base_seed, *cell))
    except GenerationError as exc:
        return ("skip", cell, str(exc))


def run_sweep(config: SweepConfig, jobs: int = 1, errstream=None):
    """Yield SweepRecords in deterministic grid order.

    Cells whose generator parameters are infeasible are skipped with a
    diagnostic on `errstream` (default stderr); the sweep continues.
    """
    errstream = errstream if errstream is not None else sys.stderr
    cells = grid_cells(config)
    seen_seeds: dict[int, tuple] = {}
    for cell in cells:
        s = cell_seed(config.base_seed, *cell)
        if s in seen_seeds and seen_seeds[s] != cell:
            raise RuntimeError(f"seed collision between {seen_seeds[s]} and {cell}")
        seen_seeds[s] = cell
    tasks = [(config.base_seed, cell) for cell in cells]
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            results = pool.imap(_worker, tasks, chunksize=1)
            yield from _emit(results, errstream)
    else:
        yield from _emit(map(_worker, tasks), errstream)


def _emit(results, errstream):
    for res in results:
        if res[0] == "ok":
            yield res[1]
        else:
            _, cell, msg = res
            print(f"skipped {cell}: {msg}", file=errstream)


def figure_recipe(name: str, replicates: int = 10, base_seed: int = 0) -> SweepConfig:
    """Sweep grids for the four figure-style experiments.

    The k ranges and replicate counts are explicit reconstructions: fig1
    compares all three methods on ER and SF(gamma=4) at N=2000 over
    k = 2..10; fig2 restricts fig1 to original vs regular for the
    assortativity columns; fig3 sweeps network size under the regular
    method; fig4 sweeps the SF exponent.
    """
    k_grid = tuple(float(k) for k in range(2, 11))
    if name == "fig1":
        return SweepConfig(
            models=("ER", "SF"),
            n_list=(2000,),
            k_list=k_grid,
            gamma_list=(4.0,),
            methods=("original", "random", "regular"),
            replicates=replicates,
            base_seed=base_seed,
        )
    if name == "fig2":
        return SweepConfig(
            models=("ER", "SF"),
            n_list=(2000,),
            k_list=k_grid,
            gamma_list=(4.0,),
            methods=("original", "regular"),
            replicates=replicates,
            base_seed=base_seed,
        )
    if name == "fig3":
        return SweepConfig(
            models=("ER",),
            n_list=(500, 1000, 2000),
            k_list=k_grid,
            methods=("regular",),
            replicates=replicates,
            base_seed=base_seed,
        )
    if name == "fig4":
        return SweepConfig(
            models=("SF",),
            n_list=(2000,),
            k_list=k_grid,
            gamma_list=(3.0, 4.0, 6.0),
            methods=("original", "regular"),
            replicates=replicates,
            base_seed=base_seed,
        )
    raise ValueError(f"unknown figure recipe {name!r} (expected fig1..fig4)")
