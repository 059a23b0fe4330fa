"""Surface-plasmon-polariton fields of dipole emitters at a metal-dielectric interface.

The package computes the electromagnetic Green tensor of a planar
dielectric/metal half-space structure, extracts the bound surface-wave
(pole) contribution in closed form, evaluates classical dipole fields and
enhancement factors, and derives quantum-emitter observables (decay rate,
Rabi splitting, second-order coherence).  A numerical Sommerfeld-integral
evaluator serves as an independent oracle for the closed forms.
"""

from .numerics import (
    BranchRule,
    QuadratureError,
    QuadratureSpec,
    adaptive_integrate,
    bessel_j,
    branched_sqrt,
)
from .material import (
    C_LIGHT,
    DrudeParams,
    Medium,
    NoBoundModeError,
    PoleResidualError,
    SppMode,
    ev_from_omega,
    omega_from_ev,
    omega_from_wavelength_nm,
    permittivity,
    propagation_length,
    silver_default,
    spp_pole,
    vertical_wavenumbers,
    wavelength_nm_from_omega,
)
from .layered_green import (
    PoleProximityError,
    ReducedGreenMatrix,
    RegionPair,
    TensorSample,
    assemble_tensor,
    free_space_green,
    inplane_rotation,
    reduced_green,
    reduced_green_matrix,
    sommerfeld_tensor,
    zz_contact_coefficient,
)
from .spp_tensor import (
    ResonancePoleError,
    SppTensorInputs,
    pole_green,
    pole_tensor,
)
from .emitters import (
    CurrentDensityFourier,
    DipoleSource,
    FieldSample,
    OverdampedError,
    QuantumEmitter,
    RabiSplitting,
    SignConsistencyError,
    current_density_fourier,
    decay_rate,
    free_space_field,
    g2_coherence,
    rabi_splitting,
    relative_intensity,
    spp_field,
)

__version__ = "0.1.0"

# Every CSV the CLI emits carries this tag; absolute field/rate values are
# meaningful only under these conventions, ratios are convention-free.
CONVENTION_TAG = (
    "D=4*pi*G; field phasor E=-(mu0*q*l*Omega^2/2)*G.u; "
    "Gamma=(2*mu0*omega^2/hbar)*Im[d.G.d]"
)

__all__ = [
    "BranchRule",
    "QuadratureError",
    "QuadratureSpec",
    "adaptive_integrate",
    "bessel_j",
    "branched_sqrt",
    "C_LIGHT",
    "DrudeParams",
    "Medium",
    "NoBoundModeError",
    "PoleResidualError",
    "SppMode",
    "ev_from_omega",
    "omega_from_ev",
    "omega_from_wavelength_nm",
    "permittivity",
    "propagation_length",
    "silver_default",
    "spp_pole",
    "vertical_wavenumbers",
    "wavelength_nm_from_omega",
    "PoleProximityError",
    "ReducedGreenMatrix",
    "RegionPair",
    "TensorSample",
    "assemble_tensor",
    "free_space_green",
    "inplane_rotation",
    "reduced_green",
    "reduced_green_matrix",
    "sommerfeld_tensor",
    "zz_contact_coefficient",
    "ResonancePoleError",
    "SppTensorInputs",
    "pole_green",
    "pole_tensor",
    "CurrentDensityFourier",
    "DipoleSource",
    "FieldSample",
    "OverdampedError",
    "QuantumEmitter",
    "RabiSplitting",
    "SignConsistencyError",
    "current_density_fourier",
    "decay_rate",
    "free_space_field",
    "g2_coherence",
    "rabi_splitting",
    "relative_intensity",
    "spp_field",
    "CONVENTION_TAG",
    "__version__",
]
