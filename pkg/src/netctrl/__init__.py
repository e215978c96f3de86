"""Measure and improve structural controllability of directed networks.

The library pairs a maximum-matching view of controllability (driver nodes
are the unmatched targets of a maximum matching) with a rewiring loop that
deletes links no maximum matching uses and adds links between the highest
out-degree and highest in-degree nodes, plus an independent finite-field
rank oracle to verify that derived driver sets really control the network.
"""

from .classify import ClassificationResult, LinkClass, classify_links, redundant_links
from .generate import (
    GenerationError,
    GenerationStuckError,
    GeneratorSpec,
    InfeasibleDensityError,
    erdos_renyi,
    generate,
    scale_free_static,
)
from .graph import (
    DirectedGraph,
    DuplicateEdgeError,
    EdgeNotFoundError,
    GraphError,
    InvalidSizeError,
    NodeRangeError,
    SelfLoopError,
    new_graph,
)
from .kalman import (
    DEFAULT_PRIME,
    WeightedSystem,
    build_input_matrix,
    controllability_rank,
    controllability_report,
    make_weighted_system,
    verify_driver_set,
)
from .matching import DriverSet, Matching, driver_set, maximum_matching, n_d
from .metrics import (
    assortativity,
    density_of_driver_nodes,
    heterogeneity,
    node_degree_correlation,
)
from .rewire import (
    RewireLimits,
    RewiringReport,
    rewire_random,
    rewire_regular,
    select_addition_pair,
)
from .sweep import SweepConfig, SweepRecord, figure_recipe, run_cell, run_sweep

__version__ = "0.1.0"
