"""Rotation-averaged correlation of two-qubit states under local damping."""

from .channels import (
    AMPLITUDE_DAMPING,
    PHASE_DAMPING,
    DampingSchedule,
    KrausChannel,
    amplitude_damping,
    apply_local_channel,
    completeness_residual,
    make_channel,
    p_of_t,
    phase_damping,
)
from .correlation import (
    CLASSICAL_COMPATIBLE,
    CLASSICAL_MAX,
    INDETERMINATE,
    NONCLASSICAL,
    NONCLASSICAL_MIN,
    SigmaEstimate,
    SingularTriple,
    classify,
    correlation_matrix,
    f_phi,
    sigma_closed_pure,
    sigma_for_state,
    sigma_monte_carlo,
    sigma_quadrature,
    singular_values,
)
from .states import (
    DensityReport,
    make_pure_state,
    pauli,
    random_density,
    tensor2,
    validate_density,
)
from .sweep import (
    DecayBlock,
    DecayCurve,
    DecayRow,
    SweepSpec,
    apply_both,
    decay_curve,
    figure_dataset,
)

__version__ = "0.1.0"

__all__ = [
    "AMPLITUDE_DAMPING",
    "CLASSICAL_COMPATIBLE",
    "CLASSICAL_MAX",
    "DampingSchedule",
    "DecayBlock",
    "DecayCurve",
    "DecayRow",
    "DensityReport",
    "INDETERMINATE",
    "KrausChannel",
    "NONCLASSICAL",
    "NONCLASSICAL_MIN",
    "PHASE_DAMPING",
    "SigmaEstimate",
    "SingularTriple",
    "SweepSpec",
    "amplitude_damping",
    "apply_both",
    "apply_local_channel",
    "classify",
    "completeness_residual",
    "correlation_matrix",
    "decay_curve",
    "f_phi",
    "figure_dataset",
    "make_channel",
    "make_pure_state",
    "p_of_t",
    "pauli",
    "phase_damping",
    "random_density",
    "sigma_closed_pure",
    "sigma_for_state",
    "sigma_monte_carlo",
    "sigma_quadrature",
    "singular_values",
    "tensor2",
    "validate_density",
]
