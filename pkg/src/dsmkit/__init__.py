"""Graph diffusion toolkit built on the inverse modified Laplacian.

Exposes a CSR graph type with deterministic synthetic generators, the exact
/ truncated / mass-compensated diffusion operators with a streaming
propagation engine, spectral-gap analysis, and a diagnostic harness for
error bounds, rank preservation, distance decay, and Dirichlet energy.
"""

__version__ = "0.1.0"

from .algorithms import all_pairs_distances, betweenness, bfs_distances
from .analysis import (
    DecayProfile,
    EnergyTrajectory,
    RankReport,
    VerificationReport,
    centrality_correlation,
    dirichlet_energy,
    distance_decay_profile,
    energy_trajectory,
    kendall_tau,
    rank_preservation,
    verify_truncation,
)
from .errors import (
    DegenerateInputError,
    DegenerateSpectrumError,
    DimensionMismatchError,
    DsmError,
    DuplicateEdgeError,
    GraphConstructionError,
    IndexOutOfRangeError,
    InvalidParamsError,
    NegativeEigenvalueError,
    NoConvergenceError,
    OracleCapExceededError,
    SelfLoopError,
)
from .generators import (
    barabasi_albert,
    erdos_renyi,
    generate_graph,
    random_geometric,
    stochastic_block_model,
    watts_strogatz,
)
from .graph import UNREACHABLE, Graph, build_graph, degrees, read_edgelist, write_edgelist
from .operators import (
    TransitionOperator,
    compensated_dsm,
    error_bound,
    exact_dsm,
    oracle_cap,
    propagate,
    residual_mass,
    transition_apply,
    truncated_dsm,
)
from .spectral import (
    SpectrumReport,
    dsm_spectrum_from_laplacian,
    empirical_spectral_gap,
    exact_spectral_gap,
    laplacian_spectrum,
    spectrum_report,
)
