"""Extended exponential families on finite state spaces: lattice kernels, Hilbert bases, faces."""

from .border import (
    ClosureVerdict,
    ExposedSet,
    GibbsPath,
    b_model_density,
    exposed_sets_from_basis,
    extended_membership,
    gibbs_density,
    indicator_expansions,
    is_exposed,
    limit_of_path,
)
from .exactmath import IntMatrix, hermite_normal_form, integer_kernel, solve_in_rowspan
from .family import (
    Density,
    check_implicit,
    density_theta,
    density_zeta,
    log_partition,
    mean_parameters,
    trace_model,
)
from .hilbert import HilbertBasisSet, brute_force_basis, decompose, hilbert_basis, redundant_elements
from .modelspec import (
    LatticeBasis,
    ModelMatrix,
    StateSpace,
    confounding_space,
    ensure_constant_row,
    four_cycle,
    independence_2x2,
    kernel_basis,
    markov_chain,
    nonnegative_shift,
    parse_model,
)

__version__ = "0.1.0"
