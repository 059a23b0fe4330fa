"""Command-line front end: parameter parsing, sweep/grid orchestration,
delimited output, optional figure rendering, and the oracle-comparison
validation harness.

Subcommands: dispersion, field-map, sweep, g2, validate.  Exit codes:
0 success, 1 usage error, 2 numerical failure, 3 validation tolerance
exceeded.  Every table starts with '#' comment lines carrying the package
version, the unit-convention tag, and a full echo of the effective
configuration; identical configuration yields byte-identical output.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field, fields, replace

import numpy as np

from . import CONVENTION_TAG, __version__
from .emitters import (
    DipoleSource,
    OverdampedError,
    QuantumEmitter,
    SignConsistencyError,
    decay_rate,
    free_space_field,
    g2_coherence,
    relative_intensity,
    spp_field,
)
from .layered_green import sommerfeld_tensor
from .material import (
    C_LIGHT,
    DrudeParams,
    Medium,
    NoBoundModeError,
    PoleResidualError,
    omega_from_wavelength_nm,
    permittivity,
    spp_pole,
)
from .numerics import QuadratureError, QuadratureSpec
from .spp_tensor import SppTensorInputs, pole_tensor

__all__ = ["main", "run_validation_suite", "windowed_oracle_error"]


class UsageError(Exception):
    """Bad flags, bad config keys, or missing required parameters."""


# --------------------------------------------------------------------------
# Configuration: flat key=value with section prefixes; flags override.
# --------------------------------------------------------------------------

_CONFIG_SCHEMA = {
    "material.omega_p_ev": float,
    "material.eps_inf": float,
    "material.gamma_p_ev": float,
    "material.eps_d": float,
    "geometry.z0_nm": float,
    "geometry.z_nm": float,
    "geometry.x_nm": float,
    "geometry.y_nm": float,
    "geometry.xmin_nm": float,
    "geometry.xmax_nm": float,
    "geometry.nx": int,
    "geometry.ymin_nm": float,
    "geometry.ymax_nm": float,
    "geometry.ny": int,
    "source.q_c": float,
    "source.l_nm": float,
    "source.orientation": str,
    "emitter.d0_cm": float,
    "emitter.orientation": str,
    "emitter.rabi_rad_s": float,
    "quad.rtol": float,
    "quad.atol": float,
    "quad.max_subdivisions": int,
    "quad.tail_cutoff": float,
    "run.lambda_nm": str,
    "run.tau_max_gamma": float,
    "run.n_tau": int,
    "sweep.z0_list_nm": str,
    "sweep.rho_min_nm": float,
    "sweep.rho_max_nm": float,
    "sweep.n_rho": int,
    "validate.n_cases": int,
    "validate.seed": int,
}


@dataclass
class RunConfig:
    """Effective run parameters after merging defaults, config file and
    command-line flags (flags win)."""

    omega_p_ev: float = 3.76
    eps_inf: float = 9.6
    gamma_p_ev: float = 0.03 * 3.76
    eps_d: float = 1.0
    z0_nm: float = 30.0
    z_nm: float = 8.0
    x_nm: float = 300.0
    y_nm: float = 300.0
    xmin_nm: float = -1000.0
    xmax_nm: float = 1000.0
    nx: int = 41
    ymin_nm: float = -1000.0
    ymax_nm: float = 1000.0
    ny: int = 41
    q_c: float = 1.602176634e-19
    l_nm: float = 20.0
    source_orientation: str = "z"
    d0_cm: float = 1e-28
    emitter_orientation: str = "z"
    rabi_rad_s: float | None = None
    quad_rtol: float = 1e-8
    quad_atol: float = 1e-30
    quad_max_subdivisions: int = 2000
    quad_tail_cutoff: float = 40.0
    lambda_list_nm: tuple = (500.0, 550.0, 600.0, 650.0, 700.0)
    tau_max_gamma: float = 15.0
    n_tau: int = 301
    z0_list_nm: tuple = (10.0, 20.0, 30.0, 50.0, 75.0, 100.0, 150.0, 200.0)
    rho_min_nm: float = 200.0
    rho_max_nm: float = 4000.0
    n_rho: int = 40
    validate_n_cases: int = 20
    validate_seed: int = 0
    orientation_flag: str | None = None
    relative: bool = False
    time_s: float | None = None
    out_format: str = "csv"

    def quadrature_spec(self) -> QuadratureSpec:
        return QuadratureSpec(
            rtol=self.quad_rtol,
            atol=self.quad_atol,
            max_subdivisions=self.quad_max_subdivisions,
            tail_cutoff=self.quad_tail_cutoff,
        )

    def drude(self) -> DrudeParams:
        return DrudeParams(
            omega_p_ev=self.omega_p_ev,
            eps_inf=self.eps_inf,
            gamma_p_ev=self.gamma_p_ev,
        )

    def eps_metal(self, omega: float) -> complex:
        return permittivity(Medium.drude_metal(self.drude()), omega)

    def echo_items(self):
        out = []
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, tuple):
                v = ",".join(_fmt(x) for x in v)
            out.append((f.name, v))
        return out


_CONFIG_TO_FIELD = {
    "material.omega_p_ev": "omega_p_ev",
    "material.eps_inf": "eps_inf",
    "material.gamma_p_ev": "gamma_p_ev",
    "material.eps_d": "eps_d",
    "geometry.z0_nm": "z0_nm",
    "geometry.z_nm": "z_nm",
    "geometry.x_nm": "x_nm",
    "geometry.y_nm": "y_nm",
    "geometry.xmin_nm": "xmin_nm",
    "geometry.xmax_nm": "xmax_nm",
    "geometry.nx": "nx",
    "geometry.ymin_nm": "ymin_nm",
    "geometry.ymax_nm": "ymax_nm",
    "geometry.ny": "ny",
    "source.q_c": "q_c",
    "source.l_nm": "l_nm",
    "source.orientation": "source_orientation",
    "emitter.d0_cm": "d0_cm",
    "emitter.orientation": "emitter_orientation",
    "emitter.rabi_rad_s": "rabi_rad_s",
    "quad.rtol": "quad_rtol",
    "quad.atol": "quad_atol",
    "quad.max_subdivisions": "quad_max_subdivisions",
    "quad.tail_cutoff": "quad_tail_cutoff",
    "run.tau_max_gamma": "tau_max_gamma",
    "run.n_tau": "n_tau",
    "sweep.rho_min_nm": "rho_min_nm",
    "sweep.rho_max_nm": "rho_max_nm",
    "sweep.n_rho": "n_rho",
    "validate.n_cases": "validate_n_cases",
    "validate.seed": "validate_seed",
}


def _parse_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in _CONFIG_SCHEMA:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        caster = _CONFIG_SCHEMA[key]
        try:
            values[key] = caster(val)
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {val!r}") from exc
    return values


def _parse_float_list(text: str, what: str) -> tuple:
    try:
        vals = tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise UsageError(f"bad {what} list: {text!r}") from exc
    if not vals:
        raise UsageError(f"{what} list is empty")
    return vals


def build_config(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        file_vals = _parse_config_file(args.config)
        kw = {}
        for key, val in file_vals.items():
            if key == "run.lambda_nm":
                kw["lambda_list_nm"] = _parse_float_list(val, "wavelength")
            elif key == "sweep.z0_list_nm":
                kw["z0_list_nm"] = _parse_float_list(val, "z0")
            else:
                kw[_CONFIG_TO_FIELD[key]] = val
        cfg = replace(cfg, **kw)
    if args.lambda_nm:
        cfg = replace(cfg, lambda_list_nm=_parse_float_list(args.lambda_nm, "wavelength"))
    if args.z0_nm is not None:
        if args.z0_nm <= 0:
            raise UsageError("--z0-nm must be > 0")
        cfg = replace(cfg, z0_nm=args.z0_nm)
    if args.orientation:
        cfg = replace(cfg, orientation_flag=args.orientation,
                      source_orientation=args.orientation,
                      emitter_orientation=args.orientation)
    if args.quad_rtol is not None:
        if args.quad_rtol <= 0:
            raise UsageError("--quad-rtol must be > 0")
        cfg = replace(cfg, quad_rtol=args.quad_rtol)
    if getattr(args, "rabi", None) is not None:
        if args.rabi <= 0:
            raise UsageError("--rabi must be > 0")
        cfg = replace(cfg, rabi_rad_s=args.rabi)
    cfg = replace(
        cfg,
        relative=bool(getattr(args, "relative", False)),
        time_s=getattr(args, "time", None),
        out_format=args.format,
    )
    if any(v <= 0 for v in cfg.lambda_list_nm):
        raise UsageError("wavelengths must be positive")
    return cfg


# --------------------------------------------------------------------------
# Table output
# --------------------------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    x = float(v)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def write_table(stream, columns, rows, cfg: RunConfig, fmt: str):
    sep = "," if fmt == "csv" else "\t"
    stream.write(f"# sppgreen {__version__}\n")
    stream.write(f"# convention: {CONVENTION_TAG}\n")
    echo = " ".join(f"{k}={v}" for k, v in cfg.echo_items())
    stream.write(f"# config: {echo}\n")
    stream.write(sep.join(columns) + "\n")
    for row in rows:
        stream.write(sep.join(_fmt(v) for v in row) + "\n")


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------


def cmd_dispersion(cfg: RunConfig):
    columns = [
        "lambda_nm", "omega_rad_s", "eps_m_re", "eps_m_im",
        "kspp_re", "kspp_im", "L_prop_m", "confinement_m", "status",
    ]
    rows = []
    for lam in cfg.lambda_list_nm:
        omega = omega_from_wavelength_nm(lam)
        em = cfg.eps_metal(omega)
        try:
            mode = spp_pole(omega, cfg.eps_d, em)
            rows.append([
                lam, omega, em.real, em.imag,
                mode.k_spp.real, mode.k_spp.imag,
                mode.propagation_length_m, mode.confinement_length_m, "ok",
            ])
        except NoBoundModeError:
            rows.append([lam, omega, em.real, em.imag,
                         math.nan, math.nan, math.nan, math.nan, "no-bound-mode"])
    return columns, rows


def _source(cfg: RunConfig, lam_nm: float, orientation: str) -> DipoleSource:
    return DipoleSource(
        q=cfg.q_c,
        length=cfg.l_nm * 1e-9,
        omega_drive=omega_from_wavelength_nm(lam_nm),
        orientation=orientation,
        z0=cfg.z0_nm * 1e-9,
    )


def cmd_field_map(cfg: RunConfig):
    lam = cfg.lambda_list_nm[0]
    omega = omega_from_wavelength_nm(lam)
    em = cfg.eps_metal(omega)
    orientation = cfg.orientation_flag or cfg.source_orientation
    src = _source(cfg, lam, orientation)
    columns = ["x_nm", "y_nm", "z_nm", "Ex", "Ey", "Ez", "E2"]
    if cfg.relative:
        columns += ["E0x", "E0y", "E0z", "E02", "ratio", "status"]
    rows = []
    xs = np.linspace(cfg.xmin_nm, cfg.xmax_nm, cfg.nx)
    ys = np.linspace(cfg.ymin_nm, cfg.ymax_nm, cfg.ny)
    z = cfg.z_nm * 1e-9
    for y in ys:
        for x in xs:
            pt = (x * 1e-9, y * 1e-9, z)
            e = spp_field(src, pt, cfg.eps_d, em, t=cfg.time_s)
            row = [x, y, cfg.z_nm, e[0], e[1], e[2], float(np.dot(e, e))]
            if cfg.relative:
                e0 = free_space_field(src, pt, cfg.eps_d, t=cfg.time_s)
                e02 = float(np.dot(e0, e0))
                if e02 == 0.0:
                    row += [e0[0], e0[1], e0[2], e02, math.inf, "nodal"]
                else:
                    row += [e0[0], e0[1], e0[2], e02, row[6] / e02, "ok"]
            rows.append(row)
    return columns, rows


def _intensity_pair(cfg: RunConfig, lam: float, z0_nm: float, point_nm):
    """(E2, E02, ratio) for both orientations at one geometry."""
    omega = omega_from_wavelength_nm(lam)
    em = cfg.eps_metal(omega)
    pt = tuple(v * 1e-9 for v in point_nm)
    out = []
    for orientation in ("z", "x"):
        src = DipoleSource(
            q=cfg.q_c, length=cfg.l_nm * 1e-9, omega_drive=omega,
            orientation=orientation, z0=z0_nm * 1e-9,
        )
        e = spp_field(src, pt, cfg.eps_d, em)
        e0 = free_space_field(src, pt, cfg.eps_d)
        e2 = float(np.dot(e, e))
        e02 = float(np.dot(e0, e0))
        ratio = math.inf if e02 == 0.0 else e2 / e02
        out.extend([e2, e02, ratio])
    return out


def cmd_sweep(cfg: RunConfig, mode: str):
    point = (cfg.x_nm, cfg.y_nm, cfg.z_nm)
    base_cols = ["E2_perp", "E02_perp", "ratio_perp", "E2_par", "E02_par", "ratio_par", "status"]
    rows = []
    if mode == "height":
        columns = ["z0_nm", "lambda_nm"] + base_cols
        lam = cfg.lambda_list_nm[0]
        for z0 in cfg.z0_list_nm:
            vals = _intensity_pair(cfg, lam, z0, point)
            rows.append([z0, lam] + vals + ["ok"])
    elif mode == "wavelength":
        columns = ["lambda_nm", "z0_nm"] + base_cols
        for lam in cfg.lambda_list_nm:
            vals = _intensity_pair(cfg, lam, cfg.z0_nm, point)
            rows.append([lam, cfg.z0_nm] + vals + ["ok"])
    elif mode == "radial":
        columns = ["rho_nm", "lambda_nm"] + base_cols
        rhos = np.linspace(cfg.rho_min_nm, cfg.rho_max_nm, cfg.n_rho)
        for lam in cfg.lambda_list_nm:
            for rho in rhos:
                vals = _intensity_pair(cfg, lam, cfg.z0_nm, (rho, 0.0, cfg.z_nm))
                rows.append([rho, lam] + vals + ["ok"])
    else:
        raise UsageError(f"unknown sweep mode {mode!r}")
    return columns, rows


def cmd_g2(cfg: RunConfig):
    if cfg.rabi_rad_s is None:
        raise UsageError("g2 requires the Rabi drive: pass --rabi RAD_PER_S "
                         "or set emitter.rabi_rad_s in the config")
    orientations = [cfg.orientation_flag] if cfg.orientation_flag else ["z", "x"]
    columns = ["orientation", "lambda_nm", "z0_nm", "gamma_per_s",
               "tau_gamma", "tau_s", "g2"]
    taus = np.linspace(0.0, cfg.tau_max_gamma, cfg.n_tau)
    rows = []
    for orientation in orientations:
        for lam in cfg.lambda_list_nm:
            omega = omega_from_wavelength_nm(lam)
            em = cfg.eps_metal(omega)
            emitter = QuantumEmitter(
                d0=cfg.d0_cm, orientation=orientation, omega=omega,
                position=(0.0, 0.0, cfg.z0_nm * 1e-9), rabi=cfg.rabi_rad_s,
            )
            gamma = decay_rate(emitter, cfg.eps_d, em, mode="spp-only")
            for tg in taus:
                val = g2_coherence(tg / gamma, cfg.rabi_rad_s, gamma)
                rows.append([orientation, lam, cfg.z0_nm, gamma, tg, tg / gamma, val])
    return columns, rows


# --------------------------------------------------------------------------
# Validation harness (oracle comparison)
# --------------------------------------------------------------------------


def windowed_oracle_error(component, omega, eps_d, eps_m, rho, z, zp,
                          n_window: int = 8) -> tuple[float, complex, complex]:
    """Relative magnitude error between the closed-form surface-wave element
    and the pole-contour oracle.

    The two are compared through their root-mean-square magnitudes over one
    Bessel half-period in the radial argument (``n_window`` samples): a
    pointwise ratio is ill-conditioned near Bessel nodes, where the
    closed form's real-magnitude radial argument and the oracle's complex
    pole shift their zeros apart.  Returns (rel_err, closed_center,
    oracle_center) with the center values at the requested rho.
    """
    mode = spp_pole(omega, eps_d, eps_m)
    u = abs(mode.k_spp)
    a0 = u * rho

    def closed(r):
        dx = r  # displacement along +x
        return pole_tensor(component, SppTensorInputs(
            eps_d=complex(eps_d), eps_m=complex(eps_m), k_spp_mag=u,
            rho=r, z=z, zp=zp, dx=dx, dy=0.0))

    def oracle(r):
        return sommerfeld_tensor(component, (r, 0.0, z), (0.0, 0.0, zp),
                                 omega, eps_d, eps_m, pole_handling="pole-only")

    rs = [(a0 + (j + 0.5) * math.pi / n_window) / u for j in range(n_window)]
    c_sq = sum(abs(closed(r)) ** 2 for r in rs) / n_window
    o_sq = sum(abs(oracle(r)) ** 2 for r in rs) / n_window
    rms_c = math.sqrt(c_sq)
    rms_o = math.sqrt(o_sq)
    rel = abs(rms_c - rms_o) / rms_o
    return rel, closed(rho), oracle(rho)


def run_validation_suite(cfg: RunConfig):
    """Rows of the `validate` subcommand; the last column is PASS/FAIL."""
    rng = np.random.default_rng(cfg.validate_seed)
    spec = cfg.quadrature_spec()
    columns = ["case", "kind", "component", "lambda_nm", "rho_nm", "zsum_nm",
               "closed_re", "closed_im", "oracle_re", "oracle_im",
               "rel_err", "tol", "status"]
    rows = []
    case = 0

    tols = {"zz": 0.05, "zx": 0.05, "xx": 0.10, "yy": 0.10}
    for _ in range(cfg.validate_n_cases):
        lam = rng.uniform(450.0, 700.0)
        zsum = rng.uniform(20.0, 200.0)
        split = rng.uniform(0.25, 0.75)
        rho = rng.uniform(50.0, 2000.0)
        comp = ("zz", "zx", "xx", "yy")[case % 4]
        omega = omega_from_wavelength_nm(lam)
        em = cfg.eps_metal(omega)
        rel, cval, oval = windowed_oracle_error(
            comp, omega, cfg.eps_d, em,
            rho * 1e-9, zsum * split * 1e-9, zsum * (1 - split) * 1e-9)
        tol = tols[comp]
        rows.append([case, "silver-oracle", comp, lam, rho, zsum,
                     cval.real, cval.imag, oval.real, oval.imag,
                     rel, tol, "PASS" if rel <= tol else "FAIL"])
        case += 1

    # lossless toy medium: no weak-loss reduction error, pointwise check
    for rho_nm in (150.0, 400.0, 900.0):
        lam = 580.0
        omega = omega_from_wavelength_nm(lam)
        mode = spp_pole(omega, 1.0, -2.0)
        u = abs(mode.k_spp)
        cval = pole_tensor("zz", SppTensorInputs(
            eps_d=1.0, eps_m=-2.0, k_spp_mag=u,
            rho=rho_nm * 1e-9, z=30e-9, zp=30e-9, dx=rho_nm * 1e-9, dy=0.0))
        oval = sommerfeld_tensor("zz", (rho_nm * 1e-9, 0.0, 30e-9), (0.0, 0.0, 30e-9),
                                 omega, 1.0, -2.0, spec, pole_handling="pole-only")
        rel = abs(cval - oval) / abs(oval)
        rows.append([case, "toy-lossless", "zz", lam, rho_nm, 60.0,
                     cval.real, cval.imag, oval.real, oval.imag,
                     rel, 0.01, "PASS" if rel <= 0.01 else "FAIL"])
        case += 1

    # full-mode reciprocity rows
    lam = 580.0
    omega = omega_from_wavelength_nm(lam)
    em = cfg.eps_metal(omega)
    for comp in ("zz", "zx", "xy"):
        a_pt = tuple(rng.uniform([-400, -400, 30], [400, 400, 200]) * 1e-9)
        b_pt = tuple(rng.uniform([-400, -400, 30], [400, 400, 200]) * 1e-9)
        dij = sommerfeld_tensor(comp, a_pt, b_pt, omega, cfg.eps_d, em, spec)
        dji = sommerfeld_tensor(comp[::-1], b_pt, a_pt, omega, cfg.eps_d, em, spec)
        scale = max(abs(dij), abs(dji))
        rel = abs(dij - dji) / scale if scale > 0 else 0.0
        tol = 10.0 * spec.rtol
        rho_nm = math.hypot(a_pt[0] - b_pt[0], a_pt[1] - b_pt[1]) * 1e9
        rows.append([case, "reciprocity", comp, lam, rho_nm,
                     (a_pt[2] + b_pt[2]) * 1e9,
                     dij.real, dij.imag, dji.real, dji.imag,
                     rel, tol, "PASS" if rel <= tol else "FAIL"])
        case += 1

    return columns, rows


def cmd_validate(cfg: RunConfig):
    return run_validation_suite(cfg)


# --------------------------------------------------------------------------
# Entry point
# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; the CLI
        raise UsageError(message)  # contract reserves 2 for numerics


def _add_common(p):
    p.add_argument("--config", help="key=value configuration file")
    p.add_argument("--out", help="output table path (default: stdout)")
    p.add_argument("--lambda-nm", help="comma-separated wavelengths in nm")
    p.add_argument("--z0-nm", type=float, help="source/emitter height in nm")
    p.add_argument("--orientation", choices=["x", "z"], help="dipole axis")
    p.add_argument("--relative", action="store_true",
                   help="also emit free-space fields and the intensity ratio")
    p.add_argument("--time", type=float, default=None, metavar="SECONDS",
                   help="instantaneous fields at this time (default: peak envelope)")
    p.add_argument("--quad-rtol", type=float, help="quadrature relative tolerance")
    p.add_argument("--format", choices=["csv", "tsv"], default="csv")
    p.add_argument("--plot", action="store_true",
                   help="render a PNG figure next to the output table")


def _build_parser():
    epilog = (
        "units: lengths in nm, energies in eV at the interface; SI internally "
        f"(c={C_LIGHT:.10g} m/s, e=1.602176634e-19 C, hbar=1.054571817e-34 J s, "
        "mu0=1.256637061e-6 H/m)"
    )
    parser = _Parser(prog="sppgreen", epilog=epilog, description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, hlp in [
        ("dispersion", "surface-mode wavenumber vs wavelength"),
        ("field-map", "field components on an xy grid at fixed height"),
        ("sweep", "intensity and enhancement vs height, wavelength or radius"),
        ("g2", "second-order coherence curves"),
        ("validate", "closed form vs numerical oracle comparison"),
    ]:
        p = sub.add_parser(name, help=hlp)
        _add_common(p)
        if name == "sweep":
            p.add_argument("--mode", choices=["height", "wavelength", "radial"],
                           default="height")
        if name == "g2":
            p.add_argument("--rabi", type=float, metavar="RAD_PER_S",
                           help="Rabi drive (required; no physical default exists)")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = build_config(args)
        if args.plot and not args.out:
            raise UsageError("--plot requires --out to name the figure file")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1

    try:
        if args.command == "dispersion":
            columns, rows = cmd_dispersion(cfg)
        elif args.command == "field-map":
            columns, rows = cmd_field_map(cfg)
        elif args.command == "sweep":
            columns, rows = cmd_sweep(cfg, args.mode)
        elif args.command == "g2":
            columns, rows = cmd_g2(cfg)
        elif args.command == "validate":
            columns, rows = cmd_validate(cfg)
        else:  # pragma: no cover
            raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (QuadratureError, PoleResidualError, NoBoundModeError,
            OverdampedError, SignConsistencyError, ValueError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            write_table(fh, columns, rows, cfg, cfg.out_format)
    else:
        write_table(sys.stdout, columns, rows, cfg, cfg.out_format)

    if args.plot:
        from . import plots

        stem = args.out.rsplit(".", 1)[0] if "." in args.out.rsplit("/", 1)[-1] else args.out
        plots.render(args.command, columns, rows, stem + ".png")

    if args.command == "validate":
        status_i = columns.index("status")
        if any(r[status_i] == "FAIL" for r in rows):
            print("validation tolerance exceeded", file=sys.stderr)
            return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
