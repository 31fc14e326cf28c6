"""Spectral analysis of uniform multi-hypergraphs via adjacency tensors.

Build a hypergraph, form its adjacency tensor, and interrogate the
eigenstructure: structural predicates (connectivity, nice-connectivity
with witnesses, regularity, completeness, m-partiteness), the H-spectral
radius by bracketed power iteration, the largest Z-eigenvalue by
multi-start shifted power iteration with degree bounds, closed forms for
regular graphs, positivity classification, and a desk-scale Newton oracle
for the full real Z-spectrum.
"""

from .errors import (
    CertificationError,
    LimitExceededError,
    SolverError,
    ValidationError,
)
from .hypergraph import (
    Hypergraph,
    StructureReport,
    build,
    degree,
    degrees,
    find_m_partition,
    induced_subhypergraph,
    is_complete,
    is_connected,
    is_nicely_connected,
    is_regular,
    structure_report,
    verify_witness,
)
from .solvers import (
    BoundsReport,
    EigenPair,
    NqzResult,
    NqzState,
    PositivityReport,
    SshopmConfig,
    SshopmTrace,
    SymmetrySummary,
    ZStarResult,
    adaptive_shift,
    brute_force_z_oracle,
    certify,
    classify_positivity,
    closed_form_regular_z,
    default_shift,
    distinct_eigenvalues,
    embed_z_eigenpair,
    h_residual,
    negate_eigenpair,
    nqz_h_spectral_radius,
    spectrum_symmetry_check,
    sshopm,
    z_bounds,
    z_residual,
    z_spectral_radius,
)
from .tensor import (
    SymmetricTensor,
    adjacency_tensor,
    apply,
    apply_matrix,
    is_reducible,
    is_weakly_irreducible,
    perturb,
    poly_eval,
    power_vector,
    representation_matrix,
    unit_tensor,
)

__version__ = "0.1.0"
