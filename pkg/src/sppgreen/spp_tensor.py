"""Closed-form surface-wave (pole) tensor elements for source and observer
in the dielectric half-space.

All elements share the structure

    coefficient(eps_d, eps_m) * Bessel(|k| rho) * exp(-sqrt(eps_d/-eps_m) |k| (z + zp))

with |k| the magnitude of the bound-mode wavenumber.  Epsilon ratios and
roots are evaluated with full complex arithmetic on the principal branch;
the Bessel and exponential arguments use the real magnitude |k| (the
weak-loss reduction the oracle comparison quantifies).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .numerics import bessel_j

__all__ = [
    "ResonancePoleError",
    "SppTensorInputs",
    "pole_green",
    "pole_tensor",
]

_PUBLISHED = ("zz", "xx", "yy", "zx", "zy")
_DERIVED = ("xz", "yz", "xy", "yx")


class ResonancePoleError(ValueError):
    """eps_d + eps_m = 0: the interface resonance, where the closed forms
    are singular."""


@dataclass(frozen=True)
class SppTensorInputs:
    """Geometry and media for a closed-form pole-tensor evaluation.

    ``dx``/``dy`` are the lateral displacement components (observer minus
    source); they supply the direction cosines of the zx/zy elements.  If
    omitted, the displacement is taken along +x with |(dx, dy)| = rho.
    """

    eps_d: complex
    eps_m: complex
    k_spp_mag: float
    rho: float
    z: float
    zp: float
    dx: float | None = None
    dy: float | None = None

    def __post_init__(self):
        if not self.k_spp_mag > 0:
            raise ValueError("k_spp_mag must be > 0")
        if self.rho < 0:
            raise ValueError("rho must be >= 0")
        if self.z < 0 or self.zp < 0:
            raise ValueError("both heights must be >= 0 (dielectric side)")
        if not complex(self.eps_m).real < 0:
            raise ValueError("metal permittivity must have Re < 0")
        if (self.dx is None) != (self.dy is None):
            raise ValueError("give both dx and dy, or neither")
        if self.dx is not None:
            lat = math.hypot(self.dx, self.dy)
            if abs(lat - self.rho) > 1e-9 * max(self.rho, 1e-30):
                raise ValueError("(dx, dy) must have length rho")

    @property
    def lateral(self) -> tuple[float, float]:
        if self.dx is None:
            return self.rho, 0.0
        return self.dx, self.dy


def _coefficients(eps_d: complex, eps_m: complex):
    denom = (eps_d + eps_m) * (eps_d * eps_d - eps_m * eps_m)
    if abs(eps_d + eps_m) <= 1e-12 * (abs(eps_d) + abs(eps_m)):
        raise ResonancePoleError(
            f"eps_d + eps_m = {eps_d + eps_m} is at the interface resonance"
        )
    c_vertical = eps_d * eps_m**3 / (cmath.sqrt(eps_d * (-eps_m)) * denom)
    c_mixed = eps_d * eps_m**2 / denom
    q = cmath.sqrt(eps_d / (-eps_m))
    return c_vertical, c_mixed, q


def _diag_bracket(w2_over_rho2: float, a: float) -> float:
    """In-plane diagonal bracket (2 w^2/rho^2) J2(a) - 2 J1(a)/a.

    Equivalent to the three-term form
    (2 w^2/rho^2) J0 - 2 J1/a - (2 w^2/rho^2)(J0 - J2), which cancels
    catastrophically for small a; this reduction is stable everywhere.
    The rho -> 0 limit is -1 independent of direction.
    """
    if a < 1e-12:
        return -1.0
    return 2.0 * w2_over_rho2 * bessel_j(2, a) - 2.0 * bessel_j(1, a) / a


def pole_tensor(component: str, inputs: SppTensorInputs, *, allow_derived: bool = False) -> complex:
    """Closed-form surface-wave tensor element, 4pi-normalized.

    Components 'zz', 'xx', 'yy', 'zx', 'zy' are the published closed
    forms; 'xz', 'yz', 'xy', 'yx' are reciprocity-derived extensions and
    require ``allow_derived=True``.

    Raises
    ------
    ResonancePoleError
        When eps_d + eps_m vanishes.
    """
    if component not in _PUBLISHED:
        if component in _DERIVED:
            if not allow_derived:
                raise ValueError(
                    f"component {component!r} is a reciprocity-derived extension; "
                    "pass allow_derived=True"
                )
        else:
            raise ValueError(f"unknown component {component!r}")
    eps_d = complex(inputs.eps_d)
    eps_m = complex(inputs.eps_m)
    c_vertical, c_mixed, q = _coefficients(eps_d, eps_m)
    u = inputs.k_spp_mag
    rho = inputs.rho
    a = u * rho
    damp = cmath.exp(-q * u * (inputs.z + inputs.zp))
    dx, dy = inputs.lateral

    if component == "zz":
        return -2j * math.pi * u * c_vertical * bessel_j(0, a) * damp

    if component in ("zx", "zy", "xz", "yz"):
        if rho == 0.0:
            return 0.0 + 0.0j
        axis = component[1] if component[0] == "z" else component[0]
        cosf = (dx if axis == "x" else dy) / rho
        value = -2j * math.pi * u * c_mixed * cosf * bessel_j(1, a) * damp
        if component in ("xz", "yz"):
            # reciprocity: swap points flips the lateral displacement
            return -value
        return value

    if component in ("xx", "yy"):
        w = dx if component == "xx" else dy
        if rho == 0.0:
            bracket = -1.0
        else:
            bracket = _diag_bracket(w * w / (rho * rho), a)
        return -1j * math.pi * u * q * c_mixed * bracket * damp

    # xy / yx: same prefactor as the diagonal, cross bracket (2 dx dy/rho^2) J2
    if rho == 0.0:
        return 0.0 + 0.0j
    bracket = 2.0 * dx * dy / (rho * rho) * bessel_j(2, a)
    return -1j * math.pi * u * q * c_mixed * bracket * damp


def pole_green(component: str, inputs: SppTensorInputs, *, allow_derived: bool = False) -> complex:
    """Surface-wave Green tensor element: `pole_tensor` divided by 4 pi."""
    return pole_tensor(component, inputs, allow_derived=allow_derived) / (4.0 * math.pi)
