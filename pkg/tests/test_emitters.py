import math

import numpy as np
import pytest

from sppgreen.emitters import (
    DipoleSource,
    OverdampedError,
    QuantumEmitter,
    current_density_fourier,
    decay_rate,
    free_space_field,
    g2_coherence,
    rabi_splitting,
    relative_intensity,
    spp_field,
)
from sppgreen.material import (
    Medium,
    omega_from_wavelength_nm,
    permittivity,
    silver_default,
    spp_pole,
)

SILVER = Medium.drude_metal(silver_default())
W580 = omega_from_wavelength_nm(580.0)
EPS_AG_580 = permittivity(SILVER, W580)
ECHARGE = 1.602176634e-19


def _src(orientation="z", lam=580.0, z0=30e-9, q=ECHARGE, length=20e-9):
    return DipoleSource(q=q, length=length,
                        omega_drive=omega_from_wavelength_nm(lam),
                        orientation=orientation, z0=z0)


def _eps_m(lam):
    return permittivity(SILVER, omega_from_wavelength_nm(lam))


# ---------------------------------------------------------------------------
# current density descriptor
# ---------------------------------------------------------------------------


def test_current_density_amplitude_and_support():
    src = _src()
    j = current_density_fourier(src)
    expect = 1j * math.sqrt(math.pi / 2.0) * src.q * src.length * src.omega_drive / 2.0
    assert j.amplitude == expect
    assert j.support_point == (0.0, 0.0, src.z0)
    assert j.orientation == "z"
    assert j.weight_at(src.omega_drive) == expect
    assert j.weight_at(-src.omega_drive) == -expect
    assert j.weight_at(0.123 * src.omega_drive) == 0.0


def test_current_density_linear_scaling():
    a = current_density_fourier(_src()).amplitude
    assert current_density_fourier(_src(q=2 * ECHARGE)).amplitude == pytest.approx(2 * a)
    assert current_density_fourier(_src(length=40e-9)).amplitude == pytest.approx(2 * a)
    assert current_density_fourier(_src(lam=290.0)).amplitude == pytest.approx(2 * a, rel=1e-12)


# ---------------------------------------------------------------------------
# surface-wave fields
# ---------------------------------------------------------------------------


def test_z_dipole_on_axis_is_purely_vertical_and_exponential():
    src = _src("z")
    e1 = spp_field(src, (0.0, 0.0, 50e-9), 1.0, -2.0)
    e2 = spp_field(src, (0.0, 0.0, 150e-9), 1.0, -2.0)
    assert e1[0] == 0.0 and e1[1] == 0.0
    u = abs(spp_pole(src.omega_drive, 1.0, -2.0).k_spp)
    assert e2[2] / e1[2] == pytest.approx(math.exp(-math.sqrt(0.5) * u * 100e-9), rel=1e-12)


def test_x_dipole_vertical_field_vanishes_on_yz_plane():
    src = _src("x")
    e = spp_field(src, (0.0, 350e-9, 40e-9), 1.0, EPS_AG_580)
    assert e[2] == 0.0


def test_z_dipole_azimuthal_isotropy():
    src = _src("z")
    rho = 420e-9
    ref = None
    for phi in np.linspace(0.0, 2 * math.pi, 13):
        pt = (rho * math.cos(phi), rho * math.sin(phi), 25e-9)
        mag = float(np.linalg.norm(spp_field(src, pt, 1.0, EPS_AG_580)))
        if ref is None:
            ref = mag
        assert abs(mag - ref) <= 1e-10 * ref


def test_parities_of_field_components():
    zsrc, xsrc = _src("z"), _src("x")
    y0, z = 0.0, 30e-9
    for x in (150e-9, 600e-9):
        ep = spp_field(zsrc, (x, y0, z), 1.0, EPS_AG_580)
        em = spp_field(zsrc, (-x, y0, z), 1.0, EPS_AG_580)
        assert ep[2] == pytest.approx(em[2], rel=1e-10)   # vertical even
        assert ep[0] == pytest.approx(-em[0], rel=1e-10)  # in-plane odd
    for (x, y) in ((200e-9, 140e-9), (650e-9, -90e-9)):
        base = spp_field(xsrc, (x, y, z), 1.0, EPS_AG_580)
        flipx = spp_field(xsrc, (-x, y, z), 1.0, EPS_AG_580)
        flipy = spp_field(xsrc, (x, -y, z), 1.0, EPS_AG_580)
        both = spp_field(xsrc, (-x, -y, z), 1.0, EPS_AG_580)
        assert flipx[1] == pytest.approx(base[1], rel=1e-10)
        assert flipy[1] == pytest.approx(base[1], rel=1e-10)
        assert both[0] == pytest.approx(base[0], rel=1e-10)
        assert both[1] == pytest.approx(base[1], rel=1e-10)


def test_x_dipole_axis_field_strongest_along_dipole():
    # the in-plane component along the dipole axis, window-averaged over a
    # radial band, dominates the same component measured broadside
    src = _src("x")
    rhos = np.linspace(500e-9, 2000e-9, 25)
    along = float(np.mean([spp_field(src, (r, 0.0, 20e-9), 1.0, EPS_AG_580)[0] ** 2
                           for r in rhos]))
    broadside = float(np.mean([spp_field(src, (0.0, r, 20e-9), 1.0, EPS_AG_580)[0] ** 2
                               for r in rhos]))
    assert along > 3.0 * broadside


def test_time_argument_restores_oscillation():
    src = _src("z")
    pt = (300e-9, 0.0, 30e-9)
    peak = spp_field(src, pt, 1.0, EPS_AG_580)
    t_quarter = math.pi / (2.0 * src.omega_drive)
    osc = spp_field(src, pt, 1.0, EPS_AG_580, t=t_quarter)
    assert np.allclose(osc, 0.0, atol=1e-9 * np.max(np.abs(peak)))
    assert np.allclose(spp_field(src, pt, 1.0, EPS_AG_580, t=0.0), peak)


def test_origin_is_regular():
    for ori in ("x", "z"):
        e = spp_field(_src(ori), (0.0, 0.0, 50e-9), 1.0, EPS_AG_580)
        assert np.all(np.isfinite(e))


# ---------------------------------------------------------------------------
# free-space reference field
# ---------------------------------------------------------------------------


def test_free_space_far_field_scaling_and_polarization():
    src = _src("z")
    k = src.omega_drive / 299792458.0
    r1, r2 = 50e-6, 100e-6  # kR ~ 540, 1080
    e1 = free_space_field(src, (r1, 0.0, src.z0), 1.0)
    e2 = free_space_field(src, (r2, 0.0, src.z0), 1.0)
    assert np.linalg.norm(e1) / np.linalg.norm(e2) == pytest.approx(2.0, rel=5e-3)
    # broadside from a vertical dipole: transverse (z) polarized
    assert abs(e1[0]) <= 3.0 / (k * r1) * abs(e1[2])


def test_free_space_near_field_scaling():
    src = _src("z")
    r1, r2 = 2e-9, 4e-9
    e1 = free_space_field(src, (r1, 0.0, src.z0), 1.0)
    e2 = free_space_field(src, (r2, 0.0, src.z0), 1.0)
    assert np.linalg.norm(e1) / np.linalg.norm(e2) == pytest.approx(8.0, rel=1e-3)


def test_free_space_on_axis_vertical_dipole_is_vertical():
    src = _src("z")
    e = free_space_field(src, (0.0, 0.0, 300e-9), 1.0)
    assert e[0] == 0.0 and e[1] == 0.0 and e[2] > 0.0


def test_free_space_rejects_source_point():
    src = _src("z")
    with pytest.raises(ValueError):
        free_space_field(src, (0.0, 0.0, src.z0), 1.0)


# ---------------------------------------------------------------------------
# relative intensity
# ---------------------------------------------------------------------------


def test_relative_intensity_prefactor_cancellation():
    pt = (300e-9, 300e-9, 8e-9)
    a = relative_intensity(_src("z"), pt, 1.0, EPS_AG_580)
    b = relative_intensity(_src("z", q=7 * ECHARGE, length=3e-9), pt, 1.0, EPS_AG_580)
    assert a == pytest.approx(b, rel=1e-12)


def test_perpendicular_enhancement_exceeds_parallel():
    pt = (300e-9, 300e-9, 8e-9)
    for lam in (500.0, 550.0, 600.0, 650.0, 700.0):
        rz = relative_intensity(_src("z", lam=lam, z0=10e-9), pt, 1.0, _eps_m(lam))
        rx = relative_intensity(_src("x", lam=lam, z0=10e-9), pt, 1.0, _eps_m(lam))
        assert rz > rx


def test_enhancement_grows_as_source_approaches_surface():
    pt = (300e-9, 300e-9, 8e-9)
    for ori in ("z", "x"):
        vals = [relative_intensity(_src(ori, z0=z0), pt, 1.0, EPS_AG_580)
                for z0 in (10e-9, 30e-9, 75e-9, 150e-9)]
        assert all(a > b for a, b in zip(vals, vals[1:]))


def test_larger_wavelength_decays_slower():
    im500 = spp_pole(omega_from_wavelength_nm(500.0), 1.0, _eps_m(500.0)).k_spp.imag
    im700 = spp_pole(omega_from_wavelength_nm(700.0), 1.0, _eps_m(700.0)).k_spp.imag
    assert im700 < im500


# ---------------------------------------------------------------------------
# decay rate
# ---------------------------------------------------------------------------


def _emitter(orientation="z", lam=580.0, z0=30e-9):
    return QuantumEmitter(d0=1e-28, orientation=orientation,
                          omega=omega_from_wavelength_nm(lam),
                          position=(0.0, 0.0, z0), rabi=1e9)


def test_decay_rate_positive_and_monotone_in_height():
    for ori in ("z", "x"):
        rates = [decay_rate(_emitter(ori, z0=z0), 1.0, EPS_AG_580)
                 for z0 in np.linspace(10e-9, 200e-9, 12)]
        assert all(r > 0 for r in rates)
        assert all(a > b for a, b in zip(rates, rates[1:]))


def test_decay_rate_height_doubling_follows_exponent():
    z0 = 40e-9
    mode = spp_pole(W580, 1.0, -2.0)
    g1 = decay_rate(_emitter("z", z0=z0), 1.0, -2.0)
    g2 = decay_rate(_emitter("z", z0=2 * z0), 1.0, -2.0)
    expect = math.exp(-math.sqrt(0.5) * abs(mode.k_spp) * 2.0 * z0)
    assert g2 / g1 == pytest.approx(expect, rel=1e-12)


def test_decay_rate_orientation_ordering():
    gz = decay_rate(_emitter("z"), 1.0, EPS_AG_580)
    gx = decay_rate(_emitter("x"), 1.0, EPS_AG_580)
    assert gz > gx > 0


def test_decay_rate_free_space_offset_and_absolute():
    em = EPS_AG_580
    base = decay_rate(_emitter("z"), 1.0, em)
    with_fs = decay_rate(_emitter("z"), 1.0, em, include_free_space=True)
    assert with_fs == pytest.approx(base + 1.0, rel=1e-12)
    gabs = decay_rate(_emitter("z"), 1.0, em, mode="spp-only")
    assert gabs > 0.0
    # the absolute rate scales with the squared dipole moment
    big = QuantumEmitter(d0=2e-28, orientation="z", omega=W580,
                         position=(0.0, 0.0, 30e-9), rabi=1e9)
    assert decay_rate(big, 1.0, em, mode="spp-only") == pytest.approx(4 * gabs, rel=1e-12)


# ---------------------------------------------------------------------------
# Rabi splitting and second-order coherence
# ---------------------------------------------------------------------------


def test_rabi_splitting_branches():
    crit = rabi_splitting(0.25, 1.0)
    assert crit.branch == "critical" and crit.value == 0.0
    under = rabi_splitting(1.0, 1.0)
    assert under.branch == "underdamped"
    assert under.value == pytest.approx(math.sqrt(15.0) / 4.0, rel=1e-12)
    over = rabi_splitting(0.1, 1.0)
    assert over.branch == "overdamped"
    assert over.value == pytest.approx(math.sqrt(1.0 / 16.0 - 0.01), rel=1e-12)
    assert rabi_splitting(50.0, 1.0).value == pytest.approx(50.0, rel=1e-3)


def test_g2_at_zero_and_infinity():
    assert abs(g2_coherence(0.0, 1.0, 1.0)) <= 1e-12
    assert abs(g2_coherence(50.0, 1.0, 1.0) - 1.0) <= 1e-6


@pytest.mark.parametrize(
    "gamma,rabi,expect",
    [(1.0, 1.0, 1.0877321193418148), (1.0, 2.0, 1.3050100928155428)],
)
def test_g2_first_maximum(gamma, rabi, expect):
    r = rabi_splitting(rabi, gamma).value
    tau = math.pi / r
    val = g2_coherence(tau, rabi, gamma)
    assert val == pytest.approx(1.0 + math.exp(-3.0 * gamma * math.pi / (4.0 * r)), rel=1e-12)
    assert val == pytest.approx(expect, rel=1e-9)


def test_g2_antibunching_property():
    for tau in np.linspace(1e-4, 3.0, 800):
        assert g2_coherence(tau, 1.0, 1.0) > 0.0


def test_g2_rejects_overdamped_and_negative_tau():
    with pytest.raises(OverdampedError):
        g2_coherence(1.0, 0.1, 1.0)
    with pytest.raises(ValueError):
        g2_coherence(-1.0, 1.0, 1.0)


def test_validation_of_types():
    with pytest.raises(ValueError):
        DipoleSource(q=-1.0, length=1e-9, omega_drive=1e15, orientation="z", z0=1e-9)
    with pytest.raises(ValueError):
        DipoleSource(q=1e-19, length=1e-9, omega_drive=1e15, orientation="y", z0=1e-9)
    with pytest.raises(ValueError):
        QuantumEmitter(d0=1e-28, orientation="z", omega=1e15, position=(0, 0, -1e-9))
