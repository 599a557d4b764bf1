"""Online graph colouring with a lookahead buffer.

Crown and Kneser graph generators, First Fit, randomized buffered
colouring, exact branch enumeration of its outcome law, and a seeded
Monte Carlo harness.  The colouring kernels run compiled when the
``_ccore`` extension is built and fall back to pure Python otherwise
(see ``buffercolour._kernels.BACKEND``).
"""

from ._kernels import BACKEND
from .analysis import (
    crown_b2_mean,
    crown_b2_pmf,
    crown_b2_tail,
    iterated_log2,
    kneser_chromatic,
    performance_ratio,
)
from .colourer import (
    BranchCapExceeded,
    CandidateColouring,
    Colouring,
    OutcomeDistribution,
    buffered_colouring,
    colours_used,
    enumerate_candidates,
    exact_outcome_distribution,
    first_fit,
    worst_case_colours,
)
from .graph import (
    Graph,
    GraphError,
    alternate_order,
    chromatic_number_exact,
    crown_graph,
    graph_from_edge_list,
    kneser_graph,
    linear_order,
    random_order,
)
from .rng import SplitMix64
from .sim import TrialConfig, GraphSpec, SimulationReport, crown_table, delta_scan, kneser_table, run_trials

__version__ = "0.1.0"
