"""Classical dipole fields (surface-wave and free-space reference) and
quantum-emitter observables: decay rate, Rabi splitting, second-order
coherence.

Field convention
----------------
The monochromatic phasor of a dipole antenna (charge q, length l, drive
Omega, unit orientation u) is E_hat(r) = -(mu0 q l Omega^2 / 2) G(r, r0) . u
and the instantaneous field is Re[E_hat exp(-i Omega t)].  The surface-wave
response is a single-quadrature field: its peak-envelope value is the
signed amplitude Im[E_hat] (in phase with the conventional cos(Omega t)
clock).  The free-space field mixes both quadratures, so its peak-envelope
value is the per-component envelope |E_hat_i|.  Intensity ratios are
envelope-power ratios and are independent of these choices.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .layered_green import _g0_any
from .material import C_LIGHT, HBAR, MU_0, spp_pole
from .numerics import bessel_j
from .spp_tensor import SppTensorInputs, _coefficients, _diag_bracket, pole_tensor

__all__ = [
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
]


class OverdampedError(ValueError):
    """The oscillatory coherence formula only covers the underdamped branch."""


class SignConsistencyError(RuntimeError):
    """A decay rate came out negative: branch or sign bug upstream."""


_ORIENTATIONS = ("x", "z")


@dataclass(frozen=True)
class DipoleSource:
    """Classical dipole antenna: charge (C), length (m), drive frequency
    (rad/s), axis orientation ('x' or 'z'), height above the interface (m)."""

    q: float
    length: float
    omega_drive: float
    orientation: str
    z0: float

    def __post_init__(self):
        if not (self.q > 0 and self.length > 0 and self.omega_drive > 0 and self.z0 > 0):
            raise ValueError("q, length, omega_drive and z0 must all be > 0")
        if self.orientation not in _ORIENTATIONS:
            raise ValueError("orientation must be 'x' or 'z'")


@dataclass(frozen=True)
class QuantumEmitter:
    """Quantum dot: dipole moment magnitude (C m), axis orientation,
    transition frequency (rad/s), position (m), Rabi drive (rad/s)."""

    d0: float
    orientation: str
    omega: float
    position: tuple
    rabi: float = 0.0

    def __post_init__(self):
        if not self.d0 > 0:
            raise ValueError("dipole moment must be > 0")
        if self.orientation not in _ORIENTATIONS:
            raise ValueError("orientation must be 'x' or 'z'")
        if not self.position[2] > 0:
            raise ValueError("emitter must sit in the dielectric half-space (z > 0)")
        if self.rabi < 0:
            raise ValueError("Rabi frequency must be >= 0")


@dataclass(frozen=True)
class FieldSample:
    """A real field vector at a point; ``time`` is None for peak envelope."""

    point: tuple
    time: float | None
    field: tuple

    def __post_init__(self):
        if not all(math.isfinite(v) for v in self.field):
            raise ValueError("field components must be finite")
        if self.point[2] < 0:
            raise ValueError("field samples live in the upper half-space")


@dataclass(frozen=True)
class CurrentDensityFourier:
    """Frequency-domain descriptor of the dipole's point current: a
    delta-supported line current with spectral weight on +/- the drive."""

    amplitude: complex           # i sqrt(pi/2) q l Omega / 2
    support_point: tuple         # (0, 0, z0)
    frequency_support: tuple     # (+Omega, -Omega)
    orientation: str

    def weight_at(self, omega: float) -> complex:
        """Spectral weight: +amplitude at +Omega, -amplitude at -Omega,
        zero elsewhere."""
        if omega == self.frequency_support[0]:
            return self.amplitude
        if omega == self.frequency_support[1]:
            return -self.amplitude
        return 0.0 + 0.0j


def current_density_fourier(source: DipoleSource, omega: float | None = None) -> CurrentDensityFourier:
    """Fourier descriptor of the source current density.

    The ``omega`` argument is accepted for interface symmetry; the
    descriptor itself carries the full +/-Omega support and resolves any
    frequency through ``weight_at``.
    """
    amp = 1j * math.sqrt(math.pi / 2.0) * source.q * source.length * source.omega_drive / 2.0
    return CurrentDensityFourier(
        amplitude=amp,
        support_point=(0.0, 0.0, source.z0),
        frequency_support=(source.omega_drive, -source.omega_drive),
        orientation=source.orientation,
    )


def _unit_index(orientation: str) -> int:
    return {"x": 0, "y": 1, "z": 2}[orientation]


def _field_prefactor(source: DipoleSource) -> float:
    return MU_0 * source.q * source.length * source.omega_drive**2


def _spp_amplitudes(source: DipoleSource, point, eps_d, eps_m) -> np.ndarray:
    """Signed surface-wave field amplitudes (the cos-clock envelope)."""
    mode = spp_pole(source.omega_drive, eps_d, eps_m)
    u = abs(mode.k_spp)
    c_vertical, c_mixed, q = _coefficients(complex(eps_d), complex(eps_m))
    x, y, z = (float(v) for v in point)
    if z < 0:
        raise ValueError("surface-wave fields are evaluated in the dielectric half-space")
    rho = math.hypot(x, y)
    a = u * rho
    damp = cmath.exp(-q * u * (z + source.z0))
    pref = _field_prefactor(source)
    out = np.zeros(3)
    if source.orientation == "z":
        out[2] = (pref / 4.0) * u * (c_vertical * damp).real * bessel_j(0, a)
        if rho > 0:
            radial = -(pref / 4.0) * u * (c_mixed * damp).real * bessel_j(1, a)
            out[0] = radial * x / rho
            out[1] = radial * y / rho
    else:
        if rho == 0.0:
            bx = by = -1.0
        else:
            bx = _diag_bracket(x * x / (rho * rho), a)
            by = _diag_bracket(y * y / (rho * rho), a)
        qc = (q * c_mixed * damp).real
        out[0] = (pref / 8.0) * u * qc * bx
        out[1] = (pref / 8.0) * u * qc * by
        if rho > 0:
            out[2] = (pref / 4.0) * u * (c_mixed * damp).real * (x / rho) * bessel_j(1, a)
    return out


def spp_field(source: DipoleSource, point, eps_d, eps_m, t: float | None = None) -> np.ndarray:
    """Surface-wave electric field of the dipole at ``point``.

    Returns the signed peak-envelope vector for ``t=None``; otherwise the
    envelope times cos(Omega t).  The origin rho = 0 is regular (the
    direction-cosine terms vanish with the first-order Bessel factor).
    """
    amps = _spp_amplitudes(source, point, eps_d, eps_m)
    if t is None:
        return amps
    return amps * math.cos(source.omega_drive * t)


def _free_space_phasor(source: DipoleSource, point, eps_d) -> np.ndarray:
    x, y, z = (float(v) for v in point)
    r0 = (0.0, 0.0, source.z0)
    if (x, y, z) == r0:
        raise ValueError("field evaluation at the source point is singular")
    k = math.sqrt(float(eps_d)) * source.omega_drive / C_LIGHT
    g0 = _g0_any((x, y, z), r0, k)
    unit = np.zeros(3)
    unit[_unit_index(source.orientation)] = 1.0
    return -( _field_prefactor(source) / 2.0) * g0 @ unit


def free_space_field(source: DipoleSource, point, eps_d=1.0, t: float | None = None) -> np.ndarray:
    """Reference field of the same dipole in the unbounded dielectric.

    ``t=None`` returns per-component envelopes (nonnegative); with ``t``
    the instantaneous field Re[E_hat exp(-i Omega t)] is returned.
    """
    phasor = _free_space_phasor(source, point, eps_d)
    if t is None:
        return np.abs(phasor)
    return (phasor * cmath.exp(-1j * source.omega_drive * t)).real


def relative_intensity(source: DipoleSource, point, eps_d, eps_m) -> float:
    """Envelope intensity of the surface-wave field normalized to the
    free-space envelope intensity at the same point.

    A vanishing free-space denominator (nodal direction) returns inf.
    """
    num = float(np.sum(_spp_amplitudes(source, point, eps_d, eps_m) ** 2))
    den = float(np.sum(np.abs(_free_space_phasor(source, point, eps_d)) ** 2))
    if den == 0.0:
        return math.inf
    return num / den


def decay_rate(
    emitter: QuantumEmitter,
    eps_d,
    eps_m,
    mode: str = "normalized",
    include_free_space: bool = False,
) -> float:
    """Spontaneous decay rate of the emitter from the surface-wave tensor.

    ``mode='normalized'`` returns Gamma/Gamma0 with Gamma0 the free-space
    rate of the surrounding dielectric (convention-free).  ``mode='spp-only'``
    returns the absolute rate Gamma = (2 mu0 omega^2 / hbar) d0^2 Im G_uu
    in 1/s under the package convention.  ``include_free_space=True`` adds
    the homogeneous-medium contribution to Im G_uu.

    Raises
    ------
    SignConsistencyError
        If the rate comes out negative beyond roundoff.
    """
    if mode not in ("normalized", "spp-only"):
        raise ValueError("mode must be 'normalized' or 'spp-only'")
    z0 = float(emitter.position[2])
    pole = spp_pole(emitter.omega, eps_d, eps_m)
    comp = "zz" if emitter.orientation == "z" else "xx"
    inputs = SppTensorInputs(
        eps_d=complex(eps_d),
        eps_m=complex(eps_m),
        k_spp_mag=abs(pole.k_spp),
        rho=0.0,
        z=z0,
        zp=z0,
    )
    d_uu = pole_tensor(comp, inputs)
    im_d = d_uu.imag
    k_med = math.sqrt(complex(eps_d).real) * emitter.omega / C_LIGHT
    im_d0_diag = 2.0 * k_med / 3.0  # Im of the 4pi-normalized homogeneous diagonal
    if include_free_space:
        im_d += im_d0_diag
    if im_d < -1e-12 * abs(d_uu):
        raise SignConsistencyError(
            f"negative decay rate (Im D = {im_d:.3e}); branch or sign bug"
        )
    if mode == "normalized":
        return im_d / im_d0_diag
    return 2.0 * MU_0 * emitter.omega**2 * emitter.d0**2 * im_d / (4.0 * math.pi * HBAR)


@dataclass(frozen=True)
class RabiSplitting:
    """Resonant splitting sqrt(rabi^2 - gamma^2/16) with its branch.

    ``value`` is the real splitting on the underdamped branch and the
    magnitude |R| on the overdamped branch.
    """

    value: float
    branch: str  # 'underdamped' | 'critical' | 'overdamped'


def rabi_splitting(rabi: float, gamma: float) -> RabiSplitting:
    """Oscillation frequency of the driven emitter's correlations at
    resonance."""
    if rabi < 0 or gamma < 0:
        raise ValueError("rabi and gamma must be >= 0")
    disc = rabi * rabi - gamma * gamma / 16.0
    if disc > 0:
        return RabiSplitting(value=math.sqrt(disc), branch="underdamped")
    if disc == 0:
        return RabiSplitting(value=0.0, branch="critical")
    return RabiSplitting(value=math.sqrt(-disc), branch="overdamped")


def g2_coherence(tau: float, rabi: float, gamma: float) -> float:
    """Second-order coherence of resonance fluorescence at delay ``tau``:

        1 - exp(-3 gamma tau / 4) [cos(R tau) + (3 gamma / 4R) sin(R tau)]

    Only the underdamped branch (real R > 0) is supported.
    """
    if tau < 0:
        raise ValueError("tau must be >= 0")
    split = rabi_splitting(rabi, gamma)
    if split.branch != "underdamped":
        raise OverdampedError(
            "second-order coherence is implemented only on the underdamped "
            f"branch (got {split.branch}: rabi={rabi}, gamma={gamma})"
        )
    r = split.value
    return 1.0 - math.exp(-0.75 * gamma * tau) * (
        math.cos(r * tau) + (0.75 * gamma / r) * math.sin(r * tau)
    )
