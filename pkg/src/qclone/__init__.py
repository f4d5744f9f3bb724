"""Universal quantum cloning machines: simulation, exact maps, verification.

Three independent routes to every published number: gate-network simulation,
direct isometry application, and closed-form formulas.  See ``qclone.checks``
for the full cross-verification suite and the ``qclone`` CLI to run it.
"""
from ._kernels import backend_name
from .analysis import (
    ScalingFit,
    SeparabilityInterval,
    clone_pair_density_formula,
    extract_scaling_factor,
    fidelity_formula,
    idle_qubit_check,
    inseparability_boundary,
    mdim_copier_formula,
    mdim_formulas,
    mean_fidelity,
    ppt_separable,
    pt_spectrum_formula,
    purity_xi,
    purity_xi_simulated,
    register_pair_formula,
    rho_a1b1_density_formula,
    rho_a1b1_pt_spectrum,
    scaling_factor_formula,
)
from .cloners import (
    CloneOutput,
    gisin_massar_map,
    local_register_clone,
    mdim_clone,
    mdim_coefficients,
    nonlocal_register_clone,
    uqcm_map,
)
from .linalg import (
    DensityOperator,
    HermitianMatrix,
    StateVector,
    SubsystemLayout,
    bures_distance,
    hermitian_eigenvalues,
    outer,
    partial_trace,
    partial_transpose,
    purity,
    reduced_density,
    sqrt_fidelity,
    tensor,
    von_neumann_entropy,
)
from .network import (
    Circuit,
    GateOp,
    build_copy_stage,
    build_prep_circuit_1,
    circuit_from_text,
    circuit_to_text,
    clone_via_network,
    cnot,
    rotation,
    run_circuit,
)
from .report import CloneReport, report_gm, report_mdim, report_register, report_uqcm
from .states import (
    BlochQubit,
    bloch_ket,
    haar_random_ket,
    orthogonal_ket,
    prep_state,
    random_bloch,
    scaled_state,
    symmetric_basis_ket,
)

__version__ = "0.1.0"

__all__ = [
    "BlochQubit",
    "Circuit",
    "CloneOutput",
    "CloneReport",
    "DensityOperator",
    "GateOp",
    "HermitianMatrix",
    "ScalingFit",
    "SeparabilityInterval",
    "StateVector",
    "SubsystemLayout",
    "backend_name",
    "bloch_ket",
    "build_copy_stage",
    "build_prep_circuit_1",
    "bures_distance",
    "circuit_from_text",
    "circuit_to_text",
    "clone_pair_density_formula",
    "clone_via_network",
    "cnot",
    "extract_scaling_factor",
    "fidelity_formula",
    "gisin_massar_map",
    "haar_random_ket",
    "hermitian_eigenvalues",
    "idle_qubit_check",
    "inseparability_boundary",
    "local_register_clone",
    "mdim_clone",
    "mdim_coefficients",
    "mdim_copier_formula",
    "mdim_formulas",
    "mean_fidelity",
    "nonlocal_register_clone",
    "orthogonal_ket",
    "outer",
    "partial_trace",
    "partial_transpose",
    "ppt_separable",
    "prep_state",
    "pt_spectrum_formula",
    "purity",
    "purity_xi",
    "purity_xi_simulated",
    "random_bloch",
    "reduced_density",
    "register_pair_formula",
    "report_gm",
    "report_mdim",
    "report_register",
    "report_uqcm",
    "rho_a1b1_density_formula",
    "rho_a1b1_pt_spectrum",
    "rotation",
    "run_circuit",
    "scaled_state",
    "scaling_factor_formula",
    "sqrt_fidelity",
    "symmetric_basis_ket",
    "tensor",
    "von_neumann_entropy",
]
