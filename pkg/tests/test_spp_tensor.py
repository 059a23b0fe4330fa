import cmath
import math

import numpy as np
import pytest

from sppgreen.material import (
    Medium,
    omega_from_wavelength_nm,
    permittivity,
    silver_default,
    spp_pole,
)
from sppgreen.numerics import bessel_j
from sppgreen.spp_tensor import (
    ResonancePoleError,
    SppTensorInputs,
    pole_green,
    pole_tensor,
)
from sppgreen.layered_green import sommerfeld_tensor

W580 = omega_from_wavelength_nm(580.0)
EPS_AG_580 = permittivity(Medium.drude_metal(silver_default()), W580)


def _toy_inputs(rho=0.0, z=30e-9, zp=30e-9, dx=None, dy=None):
    u = abs(spp_pole(W580, 1.0, -2.0).k_spp)
    return SppTensorInputs(eps_d=1.0, eps_m=-2.0, k_spp_mag=u,
                           rho=rho, z=z, zp=zp, dx=dx, dy=dy)


def test_toy_coincidence_coefficient():
    # eps_d = 1, eps_m = -2 at rho = 0: the vertical-vertical Green element
    # is i (4/(3 sqrt2)) |k| exp(-sqrt2 |k| z0) exactly
    inputs = _toy_inputs()
    u = inputs.k_spp_mag
    got = pole_green("zz", inputs)
    expect = 1j * (4.0 / (3.0 * math.sqrt(2.0))) * u * math.exp(-math.sqrt(2.0) * u * 30e-9)
    assert abs(got - expect) <= 1e-10 * abs(expect)


def test_green_is_tensor_over_four_pi():
    inputs = _toy_inputs(rho=200e-9, dx=200e-9, dy=0.0)
    for comp in ("zz", "zx", "xx", "yy"):
        assert pole_green(comp, inputs) * 4.0 * math.pi == pole_tensor(comp, inputs)


def test_zx_vanishes_at_equal_x():
    inputs = _toy_inputs(rho=300e-9, dx=0.0, dy=300e-9)
    assert pole_tensor("zx", inputs) == 0.0


def test_vertical_exponential_decay_ratio():
    u = _toy_inputs().k_spp_mag
    h = 40e-9
    v1 = pole_tensor("zz", _toy_inputs(z=h, zp=0.0))
    v2 = pole_tensor("zz", _toy_inputs(z=2 * h, zp=0.0))
    q = cmath.sqrt(1.0 / 2.0)
    assert v2 / v1 == pytest.approx(cmath.exp(-q * u * h), rel=1e-13)


def test_coincidence_sign_gives_positive_decay():
    for em in (-1.5, -2.0, -5.0, -20.0):
        u = abs(spp_pole(W580, 1.0, em).k_spp)
        inputs = SppTensorInputs(eps_d=1.0, eps_m=em, k_spp_mag=u,
                                 rho=0.0, z=25e-9, zp=25e-9)
        assert pole_green("zz", inputs).imag > 0.0
        assert pole_green("xx", inputs).imag > 0.0


def test_azimuthal_structure():
    u = abs(spp_pole(W580, 1.0, EPS_AG_580).k_spp)
    rho = 420e-9
    base = SppTensorInputs(eps_d=1.0, eps_m=EPS_AG_580, k_spp_mag=u,
                           rho=rho, z=30e-9, zp=30e-9, dx=rho, dy=0.0)
    zz0 = pole_tensor("zz", base)
    zx0 = pole_tensor("zx", base)
    zy0 = pole_tensor("zy", base)
    for phi in (0.3, 1.1, 2.7, 4.4):
        c, s = math.cos(phi), math.sin(phi)
        rot = SppTensorInputs(eps_d=1.0, eps_m=EPS_AG_580, k_spp_mag=u,
                              rho=rho, z=30e-9, zp=30e-9, dx=rho * c, dy=rho * s)
        assert pole_tensor("zz", rot) == pytest.approx(zz0, rel=1e-13)
        # (zx, zy) transforms as a vector under rotation of the displacement
        assert pole_tensor("zx", rot) == pytest.approx(c * zx0 - s * zy0, rel=1e-12)
        assert pole_tensor("zy", rot) == pytest.approx(s * zx0 + c * zy0, rel=1e-12)


def test_confinement_slope_is_linear():
    u = abs(spp_pole(W580, 1.0, EPS_AG_580).k_spp)
    q = cmath.sqrt(1.0 / (-EPS_AG_580))
    heights = np.linspace(20e-9, 220e-9, 9)
    logs = []
    for h in heights:
        val = pole_tensor("zz", SppTensorInputs(
            eps_d=1.0, eps_m=EPS_AG_580, k_spp_mag=u, rho=0.0, z=h / 2, zp=h / 2))
        logs.append(math.log(abs(val)))
    slope = np.polyfit(heights, logs, 1)[0]
    assert slope == pytest.approx(-q.real * u, rel=1e-6)


def test_inplane_diagonal_sum_reduces_to_zeroth_bessel():
    # the two diagonal brackets sum to -2 J0, so the xx + yy combination
    # carries the cylindrical-spreading envelope ~ rho^(-1/2)
    u = abs(spp_pole(W580, 1.0, EPS_AG_580).k_spp)
    q = cmath.sqrt(1.0 / (-EPS_AG_580))
    coeff = EPS_AG_580**2 / ((1.0 + EPS_AG_580) * (1.0 - EPS_AG_580**2))
    for rho_nm in (120.0, 430.0, 1500.0):
        rho = rho_nm * 1e-9
        inp = SppTensorInputs(eps_d=1.0, eps_m=EPS_AG_580, k_spp_mag=u,
                              rho=rho, z=30e-9, zp=30e-9, dx=rho, dy=0.0)
        total = pole_tensor("xx", inp) + pole_tensor("yy", inp)
        expect = -1j * math.pi * u * q * coeff * (-2.0 * bessel_j(0, u * rho)) \
            * cmath.exp(-q * u * 60e-9)
        assert total == pytest.approx(expect, rel=1e-12)
    # window-averaged magnitude follows the inverse-root envelope
    def rms(rho0):
        vals = []
        for j in range(16):
            r = rho0 + (j + 0.5) / 16 * math.pi / u
            inp = SppTensorInputs(eps_d=1.0, eps_m=EPS_AG_580, k_spp_mag=u,
                                  rho=r, z=30e-9, zp=30e-9, dx=r, dy=0.0)
            damp = abs(cmath.exp(-q * u * 60e-9))
            vals.append(abs(pole_tensor("xx", inp) + pole_tensor("yy", inp)) / damp)
        return math.sqrt(np.mean(np.square(vals)))

    r1, r2 = 1000e-9, 4000e-9
    assert rms(r1) / rms(r2) == pytest.approx(math.sqrt(r2 / r1), rel=0.05)


def test_diagonal_bracket_small_argument_stability():
    # the reduced bracket stays finite and smooth through rho -> 0, where a
    # literal three-term evaluation cancels catastrophically
    u = _toy_inputs().k_spp_mag
    vals = []
    for rho in (0.0, 1e-12, 1e-10, 1e-9):
        dx = rho
        inp = _toy_inputs(rho=rho, dx=dx, dy=0.0)
        vals.append(pole_tensor("xx", inp))
    for v in vals[1:]:
        assert v == pytest.approx(vals[0], rel=1e-6)

    def three_term(w2_over_rho2, a):
        return (2.0 * w2_over_rho2 * bessel_j(0, a)
                - 2.0 * bessel_j(1, a) / a
                - 2.0 * w2_over_rho2 * (bessel_j(0, a) - bessel_j(2, a)))

    from sppgreen.spp_tensor import _diag_bracket

    for a in (0.5, 2.0, 7.0):
        assert three_term(0.6, a) == pytest.approx(_diag_bracket(0.6, a), rel=1e-10)


def test_resonance_pole_rejected():
    with pytest.raises(ResonancePoleError):
        pole_tensor("zz", SppTensorInputs(eps_d=1.0, eps_m=-1.0, k_spp_mag=1e7,
                                          rho=0.0, z=10e-9, zp=10e-9))


def test_input_validation():
    with pytest.raises(ValueError):
        SppTensorInputs(eps_d=1.0, eps_m=-2.0, k_spp_mag=1e7, rho=1e-7, z=-1e-9, zp=0.0)
    with pytest.raises(ValueError):
        SppTensorInputs(eps_d=1.0, eps_m=2.0, k_spp_mag=1e7, rho=0.0, z=1e-9, zp=1e-9)
    with pytest.raises(ValueError):
        SppTensorInputs(eps_d=1.0, eps_m=-2.0, k_spp_mag=1e7, rho=1e-7,
                        z=1e-9, zp=1e-9, dx=1e-7, dy=1e-7)  # wrong length


def test_derived_components_are_gated_and_antisymmetric():
    inputs = _toy_inputs(rho=350e-9, dx=210e-9, dy=280e-9)
    with pytest.raises(ValueError):
        pole_tensor("xz", inputs)
    xz = pole_tensor("xz", inputs, allow_derived=True)
    zx = pole_tensor("zx", inputs)
    assert xz == pytest.approx(-zx, rel=1e-13)
    yz = pole_tensor("yz", inputs, allow_derived=True)
    zy = pole_tensor("zy", inputs)
    assert yz == pytest.approx(-zy, rel=1e-13)
    assert pole_tensor("xy", inputs, allow_derived=True) == pytest.approx(
        pole_tensor("yx", inputs, allow_derived=True), rel=1e-13)


def test_oracle_equivalence_smoke():
    # the full randomized suite runs in the acceptance module; one silver
    # configuration per component here
    mode = spp_pole(W580, 1.0, EPS_AG_580)
    u = abs(mode.k_spp)
    rho, z, zp = 300e-9, 30e-9, 30e-9
    for comp, tol in (("zz", 0.05), ("zx", 0.05), ("xx", 0.10), ("yy", 0.10)):
        closed = pole_tensor(comp, SppTensorInputs(
            eps_d=1.0, eps_m=EPS_AG_580, k_spp_mag=u,
            rho=rho, z=z, zp=zp, dx=rho, dy=0.0))
        oracle = sommerfeld_tensor(comp, (rho, 0.0, z), (0.0, 0.0, zp),
                                   W580, 1.0, EPS_AG_580, pole_handling="pole-only")
        assert abs(closed - oracle) <= tol * abs(oracle), comp
