"""Mode mixing, particle creation, and entanglement in a rigid
accelerated cavity, to first order in the dimensionless acceleration
h = aL.

Natural units (c = hbar = 1) everywhere except the `experiment` module,
which converts a concrete optical-cavity setup to SI rates.
"""

__version__ = "0.1.0"

from .bogoliubov import (
    FIRST_ORDER_SUP_H,
    FirstOrderBogoliubovMap,
    IdentityReport,
    StaticCoefficients,
    compose,
    first_order_map,
    static_coefficients,
    verify_first_order_identities,
)
from .experiment import (
    BetaBound,
    CircularMotion,
    ExperimentPlan,
    LinearMotion,
    PlanReport,
    beta_bound,
    circular_report,
    plan,
)
from .gaussian import (
    CovarianceState,
    SymplecticPairingError,
    TwoModeReduction,
    apply_symplectic,
    first_order_negativity,
    negativity,
    negativity_grid,
    partial_transpose,
    reduce_to_pair,
    squeezed_vacuum,
    symplectic_eigenvalues,
    symplectic_form,
    symplectic_from_map,
    symplectic_residual,
)
from .profiles import (
    RIGIDITY_BOUND,
    AccelerationProfile,
    OscillatoryIntegralResult,
    PiecewiseConstantProfile,
    QuadratureError,
    RampProfile,
    RigidityReport,
    SampledProfile,
    SinusoidalProfile,
    WindowedSinusoidProfile,
    oscillatory_integral,
    profile_from_samples,
    validate_rigidity,
)
from .resonance import (
    ResonanceEntry,
    ResonanceKind,
    catalog_1d,
    catalog_3d,
    displacement_h0,
    paraxial_mixing_growth,
    paraxial_mixing_omega,
    paraxial_validity_ratio,
    predicted_mixing_growth,
)
from .scenarios import ResultTable, Scenario, ScenarioError, load_scenario, run_scenario
from .spectrum import (
    Cavity1D,
    Cavity3D,
    ModeSpec,
    mode_1d,
    mode_3d,
    omega_1d,
    omega_3d,
    omega_diff_1d,
    omega_sum_1d,
    reduce_to_effective_1d,
)

__all__ = [
    "__version__",
    "FIRST_ORDER_SUP_H",
    "RIGIDITY_BOUND",
    "AccelerationProfile",
    "BetaBound",
    "Cavity1D",
    "Cavity3D",
    "CircularMotion",
    "CovarianceState",
    "ExperimentPlan",
    "FirstOrderBogoliubovMap",
    "IdentityReport",
    "LinearMotion",
    "ModeSpec",
    "OscillatoryIntegralResult",
    "PiecewiseConstantProfile",
    "PlanReport",
    "QuadratureError",
    "RampProfile",
    "ResonanceEntry",
    "ResonanceKind",
    "ResultTable",
    "RigidityReport",
    "SampledProfile",
    "Scenario",
    "ScenarioError",
    "SinusoidalProfile",
    "StaticCoefficients",
    "SymplecticPairingError",
    "TwoModeReduction",
    "WindowedSinusoidProfile",
    "apply_symplectic",
    "beta_bound",
    "catalog_1d",
    "catalog_3d",
    "circular_report",
    "compose",
    "displacement_h0",
    "first_order_map",
    "first_order_negativity",
    "load_scenario",
    "mode_1d",
    "mode_3d",
    "negativity",
    "negativity_grid",
    "omega_1d",
    "omega_3d",
    "omega_diff_1d",
    "omega_sum_1d",
    "oscillatory_integral",
    "paraxial_mixing_growth",
    "paraxial_mixing_omega",
    "paraxial_validity_ratio",
    "partial_transpose",
    "plan",
    "predicted_mixing_growth",
    "profile_from_samples",
    "reduce_to_effective_1d",
    "reduce_to_pair",
    "run_scenario",
    "squeezed_vacuum",
    "static_coefficients",
    "symplectic_eigenvalues",
    "symplectic_form",
    "symplectic_from_map",
    "symplectic_residual",
    "validate_rigidity",
    "verify_first_order_identities",
]
