"""Phase-space hydrogen bound states via the Nikiforov-Uvarov method,
with the operator-coefficient manifold algebra and independent
finite-difference oracles."""

from .errors import PhasenuError
from .hydrogen import (
    CONFIG_SPACE_POINT,
    DEEP_BRANCH_POINT,
    DerivedConstants,
    PhaseSpaceConfig,
    PhysicalParams,
    WavefunctionForm,
    annulus_samples,
    assemble_wavefunction,
    build_radial_family,
    canonical_config,
    closed_form_energy,
    derived_constants,
    eval_wavefunction,
    ode_residual,
    perfect_square_alphadelta,
    recover_configuration_space,
    solve_energy,
)
from .numeric import ExpPowerTerm, Poly, quadratic_roots
from .nu import (
    EnergyParametrizedProblem,
    NuBranch,
    NuProblem,
    NuSolution,
    select_branch,
    solve_kappa,
    solve_state,
)
from .opspace import (
    AngleKind,
    GComplement,
    GEta,
    OpPoint,
    PhaseAngleSpec,
    SpaceKind,
    apply_to_point,
    can_combine,
    classify,
    commutator_coefficient,
    complement,
    compose,
    fundamental,
    identity,
    is_on_manifold,
    manifold_point,
    phase_angle,
    satisfies_legacy_sum,
)
from .oracle import RadialGrid, commutator_check, fd_spectrum, laguerre

__version__ = "0.1.0"

__all__ = [
    "AngleKind",
    "CONFIG_SPACE_POINT",
    "DEEP_BRANCH_POINT",
    "DerivedConstants",
    "EnergyParametrizedProblem",
    "ExpPowerTerm",
    "GComplement",
    "GEta",
    "NuBranch",
    "NuProblem",
    "NuSolution",
    "OpPoint",
    "PhaseAngleSpec",
    "PhaseSpaceConfig",
    "PhasenuError",
    "PhysicalParams",
    "Poly",
    "RadialGrid",
    "SpaceKind",
    "WavefunctionForm",
    "annulus_samples",
    "apply_to_point",
    "assemble_wavefunction",
    "build_radial_family",
    "can_combine",
    "canonical_config",
    "classify",
    "closed_form_energy",
    "commutator_check",
    "commutator_coefficient",
    "complement",
    "compose",
    "derived_constants",
    "eval_wavefunction",
    "fd_spectrum",
    "fundamental",
    "identity",
    "is_on_manifold",
    "laguerre",
    "manifold_point",
    "ode_residual",
    "perfect_square_alphadelta",
    "phase_angle",
    "quadratic_roots",
    "recover_configuration_space",
    "satisfies_legacy_sum",
    "select_branch",
    "solve_energy",
    "solve_kappa",
    "solve_state",
    "__version__",
]
