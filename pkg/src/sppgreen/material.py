"""Dispersive media, unit conversions, and the bound surface-mode pole of
the p-polarized reflection denominator.

All public functions work in SI internally (rad/s, m); wavelengths in nm
and photon energies in eV are converted at the boundary.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .numerics import BranchRule, branched_sqrt

__all__ = [
    "C_LIGHT",
    "E_CHARGE",
    "HBAR",
    "MU_0",
    "EPS_0",
    "EV_TO_RAD_PER_S",
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
]

# CODATA values, 10 significant digits where not exact by definition.
C_LIGHT = 299792458.0            # m/s (exact)
E_CHARGE = 1.602176634e-19       # C   (exact)
HBAR = 1.054571817e-34           # J s (h/2pi, h exact)
MU_0 = 1.256637061e-6            # H/m
EPS_0 = 1.0 / (MU_0 * C_LIGHT**2)  # F/m
EV_TO_RAD_PER_S = E_CHARGE / HBAR  # 1.519267449e15 rad/s per eV


def omega_from_ev(energy_ev: float) -> float:
    """Angular frequency (rad/s) of a photon energy in eV."""
    return energy_ev * EV_TO_RAD_PER_S


def ev_from_omega(omega: float) -> float:
    """Photon energy in eV of an angular frequency in rad/s."""
    return omega / EV_TO_RAD_PER_S


def omega_from_wavelength_nm(lambda_nm: float) -> float:
    """Angular frequency (rad/s) of a vacuum wavelength in nm."""
    if lambda_nm <= 0:
        raise ValueError("wavelength must be positive")
    return 2.0 * math.pi * C_LIGHT / (lambda_nm * 1e-9)


def wavelength_nm_from_omega(omega: float) -> float:
    """Vacuum wavelength in nm of an angular frequency in rad/s."""
    if omega <= 0:
        raise ValueError("omega must be positive")
    return 2.0 * math.pi * C_LIGHT / omega * 1e9


class NoBoundModeError(ValueError):
    """The permittivity pair supports no bound surface mode."""


class PoleResidualError(RuntimeError):
    """The surface-mode root failed the reflection-denominator residual check."""


@dataclass(frozen=True)
class DrudeParams:
    """Free-electron metal parameters: plasma frequency and damping in eV,
    dimensionless high-frequency permittivity."""

    omega_p_ev: float
    eps_inf: float
    gamma_p_ev: float

    def __post_init__(self):
        if not self.omega_p_ev > 0:
            raise ValueError("plasma frequency must be > 0")
        if not self.eps_inf >= 1.0:
            raise ValueError("high-frequency permittivity must be >= 1")
        if self.gamma_p_ev < 0:
            raise ValueError("damping rate must be >= 0")


def silver_default() -> DrudeParams:
    """Drude parameters for silver in the optical range:
    omega_p = 3.76 eV, eps_inf = 9.6, gamma_p = 0.03 * omega_p."""
    return DrudeParams(omega_p_ev=3.76, eps_inf=9.6, gamma_p_ev=0.03 * 3.76)


@dataclass(frozen=True)
class Medium:
    """A half-space: either a lossless dielectric (real eps >= 1) or a
    Drude metal evaluated per frequency.  Use the factory constructors."""

    eps_dielectric: float | None = None
    drude: DrudeParams | None = None

    def __post_init__(self):
        if (self.eps_dielectric is None) == (self.drude is None):
            raise ValueError("medium must be exactly one of dielectric or Drude metal")
        if self.eps_dielectric is not None and not self.eps_dielectric >= 1.0:
            raise ValueError("dielectric permittivity must be real and >= 1")

    @classmethod
    def dielectric(cls, eps_d: float) -> "Medium":
        return cls(eps_dielectric=float(eps_d))

    @classmethod
    def drude_metal(cls, params: DrudeParams) -> "Medium":
        return cls(drude=params)


def permittivity(medium: Medium, omega: float) -> complex:
    """Relative permittivity of ``medium`` at angular frequency ``omega``.

    Dielectrics are dispersionless; the Drude metal evaluates
    eps_inf * (1 - omega_p^2 / (omega * (omega + i*gamma_p))).
    """
    if not omega > 0:
        raise ValueError("omega must be > 0")
    if medium.eps_dielectric is not None:
        return complex(medium.eps_dielectric)
    p = medium.drude
    w = ev_from_omega(omega)
    return p.eps_inf * (1.0 - p.omega_p_ev**2 / (w * (w + 1j * p.gamma_p_ev)))


def vertical_wavenumbers(kpar: float, omega: float, eps_d, eps_m) -> tuple[complex, complex]:
    """Vertical wavenumbers (dielectric side, metal side) at in-plane ``kpar``.

    The dielectric root carries Im >= 0 (outgoing/decaying upward); the
    metal root is the negated branch (decaying downward).
    """
    if not omega > 0:
        raise ValueError("omega must be > 0")
    k0sq = (omega / C_LIGHT) ** 2
    kd = branched_sqrt(eps_d * k0sq - kpar * kpar, BranchRule.IM_NONNEGATIVE)
    km = branched_sqrt(eps_m * k0sq - kpar * kpar, BranchRule.PRINCIPAL_NEGATED)
    return kd, km


@dataclass(frozen=True)
class SppMode:
    """A bound surface mode: complex in-plane wavenumber plus the derived
    lateral 1/e intensity length and vertical confinement scale (m)."""

    k_spp: complex
    omega: float
    propagation_length_m: float
    confinement_length_m: float

    def __post_init__(self):
        if not self.k_spp.real > 0:
            raise ValueError("surface-mode wavenumber must have Re > 0")
        if self.k_spp.imag < 0:
            raise ValueError("passive media require Im k_spp >= 0")


def _denominator_residual(k: complex, omega: float, eps_d, eps_m) -> tuple[float, float]:
    k0sq = (omega / C_LIGHT) ** 2
    kd = branched_sqrt(eps_d * k0sq - k * k, BranchRule.IM_NONNEGATIVE)
    km = branched_sqrt(eps_m * k0sq - k * k, BranchRule.PRINCIPAL_NEGATED)
    return abs(km * eps_d - kd * eps_m), abs(kd * eps_m)


def _polish_root(k: complex, omega: float, eps_d, eps_m) -> complex:
    """Complex Newton iteration on the p-polarized reflection denominator."""
    k0sq = (omega / C_LIGHT) ** 2
    for _ in range(60):
        kd = branched_sqrt(eps_d * k0sq - k * k, BranchRule.IM_NONNEGATIVE)
        km = branched_sqrt(eps_m * k0sq - k * k, BranchRule.PRINCIPAL_NEGATED)
        f = km * eps_d - kd * eps_m
        df = k * (eps_m / kd - eps_d / km)
        step = f / df
        k = k - step
        if abs(step) <= 1e-15 * abs(k):
            break
    return k


def spp_pole(omega: float, eps_d, eps_m, polish: bool = False) -> SppMode:
    """Bound surface-mode wavenumber of a dielectric/metal interface.

    Uses the closed form k = (omega/c) * sqrt(eps_d*eps_m/(eps_d+eps_m)) on
    the branch with Re k > 0, then enforces the reflection-denominator
    residual |km*eps_d - kd*eps_m| <= 1e-8 * |kd*eps_m|.  With
    ``polish=True`` a complex Newton iteration refines the root first
    (fallback for exotic media).

    Raises
    ------
    NoBoundModeError
        If Re(eps_d + eps_m) >= 0 or Re eps_m >= 0.
    PoleResidualError
        If the residual check fails.
    """
    eps_d = complex(eps_d)
    eps_m = complex(eps_m)
    if not (eps_d + eps_m).real < 0 or not eps_m.real < 0:
        raise NoBoundModeError(
            f"no bound surface mode for eps_d={eps_d}, eps_m={eps_m}"
        )
    k = (omega / C_LIGHT) * cmath.sqrt(eps_d * eps_m / (eps_d + eps_m))
    if k.real < 0:
        k = -k
    if polish:
        k = _polish_root(k, omega, eps_d, eps_m)
    residual, scale = _denominator_residual(k, omega, eps_d, eps_m)
    if residual > 1e-8 * scale:
        raise PoleResidualError(
            f"denominator residual {residual:.3e} exceeds 1e-8 * {scale:.3e}"
        )
    if abs(k.imag) < 1e-300:
        prop = math.inf
    else:
        prop = 1.0 / (2.0 * k.imag)
    # vertical 1/e scale in the dielectric: decay constant Re[sqrt(eps_d/-eps_m)] |k|
    decay = (cmath.sqrt(eps_d / (-eps_m)) * abs(k)).real
    conf = math.inf if decay <= 0 else 1.0 / decay
    return SppMode(
        k_spp=k,
        omega=omega,
        propagation_length_m=prop,
        confinement_length_m=conf,
    )


def propagation_length(mode: SppMode) -> float:
    """Lateral 1/e intensity decay length 1/(2 Im k); infinite for a
    lossless mode."""
    if mode.k_spp.imag <= 0.0:
        return math.inf
    return 1.0 / (2.0 * mode.k_spp.imag)
