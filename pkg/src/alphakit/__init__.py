"""Weighted-Laplacian toolkit on the unit disk.

Kernels, quadrature, a Dirichlet solver for ``Delta_alpha f = g``,
alpha-harmonic series and numerical checks of the associated Schwarz-type
inequalities.
"""

from .errors import AlphaKitError, CoincidenceError, ConvergenceError, DomainError, PreconditionError, RangeError
from .kernels import (
    KernelValue,
    green_alpha,
    green_alpha_bound,
    green_alpha_dz,
    green_alpha_dzbar,
    h_alpha,
    h_alpha_bound,
    h_alpha_complement,
    phi,
    poisson_kernel,
    poisson_kernel_alpha,
    poisson_kernel_alpha_dz,
    poisson_kernel_alpha_dzbar,
)
from .quadrature import CircleRule, DiskRule, MobiusMap, integrate_circle, integrate_disk, integrate_disk_mobius, polar_grid
from .solver import (
    BoundaryData,
    JacobianData,
    SolutionField,
    SourceField,
    boundary_limit,
    classical_poisson_integral,
    green_potential,
    green_potential_bound,
    poisson_integral,
    solution_jacobian,
    solve,
)
from .series import (
    AlphaHarmonicSeries,
    CoefficientSequence,
    ComposedField,
    Example1Function,
    PolyMap,
    compose,
    example1_build,
    p_alpha_k,
    p_alpha_k_derivative,
    p_alpha_k_recurrence_residual,
)
from .analysis import (
    EnergyParams,
    ResidualConfig,
    TheoremId,
    VerificationReport,
    bergman_membership_check,
    bergman_norm,
    delta_alpha_residual,
    dirichlet_energy,
    laplacian_abs_power,
    verify_colonna,
    verify_composition,
    verify_heinz,
    verify_schwarz,
    verify_schwarz_pick,
)

__version__ = "0.1.0"
