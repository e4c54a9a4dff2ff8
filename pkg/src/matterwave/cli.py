"""Command-line front end.

Subcommands mirror the physics modules: mode, fields, classical, scatter,
mzi, resonator, accel, interact.  Options resolve as CLI > config file >
built-in default; the config file is flat INI with one section per
subcommand.  All numeric output uses %.17g so identical inputs produce
byte-identical files.  Exit codes: 0 success, 2 configuration error,
3 physics-domain error, 4 file I/O failure.
"""

from __future__ import annotations

import argparse
import configparser
import math
import sys

import numpy as np

from . import dynamics, fields, interactions, interferometer, mode as mode_mod, resonator as res_mod, scattering
from .errors import MatterWaveError
from .quantities import CONSTANTS, ParticleSpecies, load_species_registry

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PHYSICS = 3
EXIT_IO = 4

CSV_VERSION = "matterwave-csv v1"


def _fmt(value) -> str:
    return "%.17g" % value


class ConfigError(Exception):
    pass


# option name -> (type, default, help); None default means required unless
# another option of the same group supplies it
_MODE_OPTS = {
    "mass": (float, None, "particle mass in kg"),
    "species-file": (str, None, "INI species registry"),
    "species": (str, None, "species name from the registry"),
    "omega0": (float, None, "drive frequency in rad/s"),
    "omega0-hz": (float, None, "drive frequency in Hz (converted to rad/s)"),
    "vv": (float, None, "particle velocity in m/s"),
    "energy": (float, None, "particle energy in J"),
}


def _add_options(parser, opts):
    for name, (typ, default, help_text) in opts.items():
        parser.add_argument("--" + name, type=typ, default=None, help=help_text)
    parser.add_argument("--config", type=str, default=None,
                        help="INI config file; section named after the subcommand")
    parser.add_argument("--dump-config", action="store_true",
                        help="print the resolved configuration and exit")
    parser.add_argument("--output", type=str, default=None,
                        help="output path (default: stdout)")


def _resolve(args, opts, section):
    """CLI > config > default resolution into a flat dict."""
    config = {}
    if args.config is not None:
        parser = configparser.ConfigParser()
        try:
            with open(args.config) as fh:
                parser.read_file(fh)
        except OSError as exc:
            raise exc
        except configparser.Error as exc:
            raise ConfigError("bad config file: %s" % exc)
        if parser.has_section(section):
            config = dict(parser.items(section))
    resolved = {}
    for name, (typ, default, _) in opts.items():
        cli_value = getattr(args, name.replace("-", "_"))
        if cli_value is not None:
            resolved[name] = cli_value
        elif name in config:
            try:
                resolved[name] = typ(config[name])
            except ValueError as exc:
                raise ConfigError("config key %s: %s" % (name, exc))
        else:
            resolved[name] = default
    return resolved


def _dump_config(cfg, section, out):
    out.write("[%s]\n" % section)
    for name in sorted(cfg):
        value = cfg[name]
        if value is None:
            continue
        out.write("%s = %s\n" % (name, _fmt(value) if isinstance(value, float) else value))


def _species_from(cfg) -> ParticleSpecies:
    if cfg.get("mass") is not None:
        return ParticleSpecies("particle", cfg["mass"])
    if cfg.get("species-file") and cfg.get("species"):
        registry = load_species_registry(cfg["species-file"])
        name = cfg["species"]
        if name not in registry["species"]:
            raise ConfigError("species %r not in registry" % name)
        return registry["species"][name]
    raise ConfigError("give --mass or --species-file with --species")


def _omega0_from(cfg) -> float:
    if (cfg.get("omega0") is None) == (cfg.get("omega0-hz") is None):
        raise ConfigError("give exactly one of --omega0 (rad/s) or --omega0-hz")
    if cfg.get("omega0") is not None:
        return cfg["omega0"]
    return 2.0 * math.pi * cfg["omega0-hz"]


def _mode_from(cfg) -> mode_mod.MatterWaveMode:
    species = _species_from(cfg)
    omega0 = _omega0_from(cfg)
    if (cfg.get("vv") is None) == (cfg.get("energy") is None):
        raise ConfigError("give exactly one of --vv or --energy")
    try:
        return mode_mod.make_mode(species, omega0, velocity=cfg.get("vv"),
                                  energy=cfg.get("energy"))
    except ValueError as exc:
        raise ConfigError(str(exc))


def _grid(start, stop, count, log):
    if count < 2:
        raise ConfigError("sweep needs at least 2 points")
    if log:
        if not (start > 0 and stop > 0):
            raise ConfigError("log grid requires positive bounds")
        return np.logspace(math.log10(start), math.log10(stop), count)
    return np.linspace(start, stop, count)


def _write_csv(out, name, header, rows):
    out.write("# %s %s\n" % (CSV_VERSION, name))
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(_fmt(v) for v in row) + "\n")


def _write_record(out, name, pairs):
    out.write("# %s %s\n" % (CSV_VERSION, name))
    for key, value in pairs:
        out.write("%s = %s\n" % (key, _fmt(value) if isinstance(value, float) else value))


# --- subcommands ---------------------------------------------------------

def _cmd_mode(args):
    cfg = _resolve(args, _MODE_OPTS, "mode")
    if args.dump_config:
        _dump_config(cfg, "mode", sys.stdout)
        return EXIT_OK
    mode = _mode_from(cfg)
    with _open_out(args) as out:
        _write_record(out, "mode",
                      [(k, v) for k, v in mode_mod.mode_to_record(mode).items()])
    return EXIT_OK


_FIELDS_OPTS = dict(_MODE_OPTS, **{
    "a0": (float, 1e-4, "vector-potential amplitude in m/s"),
    "x-span": (float, None, "spatial span of the scan in m (default: one wavelength)"),
    "t-span": (float, None, "temporal span of the scan in s (default: one period)"),
    "nx": (int, 64, "spatial samples"),
    "nt": (int, 64, "temporal samples"),
})


def _cmd_fields(args):
    cfg = _resolve(args, _FIELDS_OPTS, "fields")
    if args.dump_config:
        _dump_config(cfg, "fields", sys.stdout)
        return EXIT_OK
    mode = _mode_from(cfg)
    field = fields.fields_from_potential(cfg["a0"], mode)
    x_span = cfg["x-span"] if cfg["x-span"] is not None else 2.0 * math.pi / mode.k
    t_span = cfg["t-span"] if cfg["t-span"] is not None else 2.0 * math.pi / mode.omega0
    xs = np.linspace(0.0, x_span, cfg["nx"])
    ts = np.linspace(0.0, t_span, cfg["nt"])
    rows = []
    for t in ts:
        sample = fields.evaluate(field, xs, t)
        for x, A, F, G in zip(xs, sample.A, sample.F, sample.G):
            rows.append((x, t, A, F, G))
    with _open_out(args) as out:
        _write_csv(out, "fields-scan", ("x", "t", "A", "F", "G"), rows)
    return EXIT_OK


_CLASSICAL_OPTS = dict(_MODE_OPTS, **{
    "a0": (float, 1e-4, "drive amplitude in m/s"),
    "x0": (float, 0.0, "initial position in m"),
    "p0": (float, None, "initial canonical momentum in kg m/s (default: resonant)"),
    "steps-per-period": (int, 200, "integration steps per drive period"),
    "periods": (float, 100.0, "number of drive periods to integrate"),
})


def _cmd_classical(args):
    cfg = _resolve(args, _CLASSICAL_OPTS, "classical")
    if args.dump_config:
        _dump_config(cfg, "classical", sys.stdout)
        return EXIT_OK
    mode = _mode_from(cfg)
    drive = dynamics.DriveField(A0=cfg["a0"], k=mode.k, omega0=mode.omega0)
    p0 = cfg["p0"] if cfg["p0"] is not None else mode.species.mass * mode.omega0 / mode.k
    period = 2.0 * math.pi / mode.omega0
    dt = period / cfg["steps-per-period"]
    steps = int(round(cfg["periods"] * cfg["steps-per-period"]))
    traj = dynamics.integrate(dynamics.ParticleState(x=cfg["x0"], p=p0, t=0.0),
                              drive, mode.species, dt, steps)
    rows = zip(traj.t, traj.x, traj.p, traj.P_kinetic, traj.H)
    with _open_out(args) as out:
        _write_csv(out, "trajectory", ("t", "x", "p", "P", "H"), rows)
    return EXIT_OK


_SCATTER_OPTS = dict(_MODE_OPTS, **{
    "stack": (str, None, "stack definition file"),
    "oracle-points-per-wavelength": (int, 400, "Numerov grid density"),
})


def read_stack_file(path, energy):
    """Parse a stack file: one `key=value [key=value ...]` line per layer.

    Layer lines carry `length_m` plus `U_joule` or `U_rel` (units of the
    particle energy).  A final line starting with `exit` sets the exit
    potential the same way (default 0).
    """
    layers = []
    exit_potential = 0.0
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            is_exit = tokens[0] == "exit"
            if is_exit:
                tokens = tokens[1:]
            entries = {}
            for token in tokens:
                key, _, value = token.partition("=")
                if not value:
                    raise ConfigError("bad stack line: %r" % raw.strip())
                entries[key] = float(value)
            if ("U_joule" in entries) == ("U_rel" in entries):
                raise ConfigError("each stack line needs U_joule or U_rel")
            potential = entries.get("U_joule", entries.get("U_rel", 0.0))
            if "U_rel" in entries:
                potential = entries["U_rel"] * energy
            if is_exit:
                exit_potential = potential
            else:
                if "length_m" not in entries:
                    raise ConfigError("layer line needs length_m")
                layers.append(scattering.Layer(potential=potential,
                                               length=entries["length_m"]))
    return scattering.LayerStack(layers=tuple(layers), exit_potential=exit_potential)


def _cmd_scatter(args):
    cfg = _resolve(args, _SCATTER_OPTS, "scatter")
    if args.dump_config:
        _dump_config(cfg, "scatter", sys.stdout)
        return EXIT_OK
    mode = _mode_from(cfg)
    if cfg["stack"] is None:
        raise ConfigError("scatter needs --stack FILE")
    stack = read_stack_file(cfg["stack"], mode.hbar * mode.omega_v)
    maxwell = scattering.transfer_matrix(stack, mode, scattering.MAXWELL)
    debroglie = scattering.transfer_matrix(stack, mode, scattering.DEBROGLIE)
    oracle = scattering.numerov_oracle(
        stack, mode, points_per_wavelength=cfg["oracle-points-per-wavelength"])
    header = ("R_maxwell", "T_maxwell", "R_debroglie", "T_debroglie",
              "R_oracle", "T_oracle")
    row = (maxwell.R, maxwell.T, debroglie.R, debroglie.T,
           oracle["R"], oracle["T"])
    with _open_out(args) as out:
        _write_csv(out, "scatter", header, [row])
    return EXIT_OK


_MZI_OPTS = dict(_MODE_OPTS, **{
    "flux": (float, 1e3, "input flux in particles/s"),
    "lmax": (float, None, "sweep delta_L over [0, lmax] m"),
    "points": (int, 101, "sweep points"),
    "split": (float, 0.5, "splitter ratio in (0, 1)"),
    "log-grid": (int, 0, "1 for logarithmic sweep"),
})


def _cmd_mzi(args):
    cfg = _resolve(args, _MZI_OPTS, "mzi")
    if args.dump_config:
        _dump_config(cfg, "mzi", sys.stdout)
        return EXIT_OK
    mode = _mode_from(cfg)
    lmax = cfg["lmax"] if cfg["lmax"] is not None else interferometer.fringe_period(
        mode, scattering.MAXWELL)
    start = lmax / (cfg["points"] * 10.0) if cfg["log-grid"] else 0.0
    grid = _grid(start, lmax, cfg["points"], bool(cfg["log-grid"]))
    rows = []
    for delta_L in grid:
        config = interferometer.MachZehnderConfig(
            mode=mode, input_flux=cfg["flux"], delta_L=float(delta_L),
            split_ratio=cfg["split"])
        out_m = interferometer.mzi_output(config, scattering.MAXWELL)
        out_d = interferometer.mzi_output(config, scattering.DEBROGLIE)
        rows.append((delta_L, out_m["bright"], out_m["dark"],
                     out_d["bright"], out_d["dark"]))
    with _open_out(args) as out:
        _write_csv(out, "mzi-sweep",
                   ("delta_L", "bright_maxwell", "dark_maxwell",
                    "bright_debroglie", "dark_debroglie"), rows)
    return EXIT_OK


_RESONATOR_OPTS = dict(_MODE_OPTS, **{
    "length": (float, None, "cavity length in m"),
    "reflectance": (float, None, "mirror reflectance in (0, 1)"),
    "finesse": (float, None, "target finesse (alternative to --reflectance)"),
    "n-min": (int, None, "first comb index to list"),
    "n-max": (int, None, "last comb index to list"),
    "scan-span": (float, 3.0, "Airy scan span in linewidths around the locked line"),
    "scan-points": (int, 201, "Airy scan points"),
})


def _resonator_from(cfg, mode):
    if cfg.get("length") is None:
        raise ConfigError("resonator needs --length")
    if (cfg.get("reflectance") is None) == (cfg.get("finesse") is None):
        raise ConfigError("give exactly one of --reflectance or --finesse")
    reflectance = cfg["reflectance"]
    if reflectance is None:
        reflectance = res_mod.reflectance_for_finesse(cfg["finesse"])
    try:
        return res_mod.Resonator(mode=mode, length=cfg["length"],
                                 mirror_reflectance=reflectance)
    except ValueError as exc:
        raise ConfigError(str(exc))


def _cmd_resonator(args):
    cfg = _resolve(args, _RESONATOR_OPTS, "resonator")
    if args.dump_config:
        _dump_config(cfg, "resonator", sys.stdout)
        return EXIT_OK
    mode = _mode_from(cfg)
    res = _resonator_from(cfg, mode)
    locked = res_mod.nearest_mode(res, mode.omega0)
    n_lo = cfg["n-min"] if cfg["n-min"] is not None else max(locked - 2, 1)
    n_hi = cfg["n-max"] if cfg["n-max"] is not None else locked + 2
    with _open_out(args) as out:
        _write_record(out, "resonator-summary", [
            ("length_m", res.length),
            ("mirror_reflectance", res.mirror_reflectance),
            ("finesse", res.finesse),
            ("fsr_rad_s", res.fsr),
            ("linewidth_rad_s", res.linewidth),
            ("locked_mode", str(locked)),
            ("accel_resolution_m_s2", res_mod.accel_resolution(res)),
        ])
        _write_csv(out, "resonance-comb", ("N", "omega_N"),
                   [(float(N), res_mod.resonance_frequency(res, N))
                    for N in range(n_lo, n_hi + 1)])
        omega_lock = res_mod.resonance_frequency(res, locked)
        span = cfg["scan-span"] * res.linewidth
        omegas = np.linspace(omega_lock - span, omega_lock + span, cfg["scan-points"])
        _write_csv(out, "airy-scan", ("omega", "T_cav"),
                   [(w, res_mod.airy_transmission(res, float(w))) for w in omegas])
    return EXIT_OK


_ACCEL_OPTS = dict(_MODE_OPTS, **{
    "L": (float, None, "cavity length in m"),
    "reflectance": (float, None, "mirror reflectance in (0, 1)"),
    "finesse": (float, None, "target finesse"),
    "report-resolution": (int, 0, "1 to print the resolution summary"),
    "shifts": (str, None, "CSV file of t,delta_omega rows to convert"),
})


def _cmd_accel(args):
    cfg = _resolve(args, _ACCEL_OPTS, "accel")
    if args.dump_config:
        _dump_config(cfg, "accel", sys.stdout)
        return EXIT_OK
    mode = _mode_from(cfg)
    cfg["length"] = cfg["L"]
    res = _resonator_from(cfg, mode)
    locked = res_mod.nearest_mode(res, mode.omega0)
    with _open_out(args) as out:
        if cfg["report-resolution"] or cfg["shifts"] is None:
            _write_record(out, "accelerometer", [
                ("locked_mode", str(locked)),
                ("scale_factor_rad_s_m", res_mod.accel_scale_factor(res, locked)),
                ("linewidth_rad_s", res.linewidth),
                ("a_res_m_s2", res_mod.accel_resolution(res)),
            ])
        if cfg["shifts"] is not None:
            rows = []
            with open(cfg["shifts"]) as fh:
                for raw in fh:
                    line = raw.split("#", 1)[0].strip()
                    if not line or line.startswith("t"):
                        continue
                    t_str, dw_str = line.split(",")
                    reading = res_mod.accel_from_shift(res, locked, float(dw_str))
                    rows.append((float(t_str), reading.delta_omega,
                                 reading.acceleration))
            _write_csv(out, "accel-series", ("t", "delta_omega", "acceleration"), rows)
    return EXIT_OK


_INTERACT_OPTS = dict(_MODE_OPTS, **{
    "flux": (float, None, "particle flux in particles/s"),
    "area": (float, None, "effective cross-section in m^2"),
    "scattering-length": (float, None, "s-wave scattering length in m"),
    "length": (float, None, "optional cavity length for the resonance pull"),
    "reflectance": (float, 0.9, "mirror reflectance for the pull cavity"),
})


def _cmd_interact(args):
    cfg = _resolve(args, _INTERACT_OPTS, "interact")
    if args.dump_config:
        _dump_config(cfg, "interact", sys.stdout)
        return EXIT_OK
    mode = _mode_from(cfg)
    for key in ("flux", "area", "scattering-length"):
        if cfg[key] is None:
            raise ConfigError("interact needs --" + key)
    pair = interactions.CounterPropPair(
        mode=mode, flux=cfg["flux"], area=cfg["area"],
        scattering_length=cfg["scattering-length"])
    shift = interactions.index_shift(pair)
    pairs = [
        ("energy_density_J_m3", interactions.energy_density(pair)),
        ("mean_field_energy_J", interactions.mean_field_energy(pair)),
        ("delta_n", shift.value),
        ("delta_n_first_order", shift.first_order),
        ("delta_n_paper_form_1_s", shift.paper_form),
    ]
    if cfg["length"] is not None:
        res = res_mod.Resonator(mode=mode, length=cfg["length"],
                                mirror_reflectance=cfg["reflectance"])
        pairs.append(("resonance_pull_rad_s", interactions.resonance_pull(res, pair)))
    if mode.n < 1.0:
        branch = interactions.parametric_branch(mode)
        pairs.extend([
            ("n_plus", branch.n_plus),
            ("n_minus", branch.n_minus),
            ("delta_p_exact_kg_m_s", branch.delta_p_exact),
            ("delta_p_approx_kg_m_s", branch.delta_p_approx),
        ])
    with _open_out(args) as out:
        _write_record(out, "interactions", pairs)
    return EXIT_OK


# --- driver --------------------------------------------------------------

class _OutputHandle:
    def __init__(self, path):
        self.path = path
        self.fh = None

    def __enter__(self):
        self.fh = open(self.path, "w") if self.path else sys.stdout
        return self.fh

    def __exit__(self, exc_type, exc, tb):
        if self.path and self.fh is not None:
            self.fh.close()
        return False


def _open_out(args):
    return _OutputHandle(args.output)


_COMMANDS = {
    "mode": (_cmd_mode, _MODE_OPTS),
    "fields": (_cmd_fields, _FIELDS_OPTS),
    "classical": (_cmd_classical, _CLASSICAL_OPTS),
    "scatter": (_cmd_scatter, _SCATTER_OPTS),
    "mzi": (_cmd_mzi, _MZI_OPTS),
    "resonator": (_cmd_resonator, _RESONATOR_OPTS),
    "accel": (_cmd_accel, _ACCEL_OPTS),
    "interact": (_cmd_interact, _INTERACT_OPTS),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matterwave",
        description="Matter-wave optics with transmission-line analogs")
    subparsers = parser.add_subparsers(dest="command")
    for name, (_, opts) in _COMMANDS.items():
        sub = subparsers.add_parser(name)
        _add_options(sub, opts)
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_CONFIG
    command, _ = _COMMANDS[args.command]
    try:
        return command(args)
    except ConfigError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG
    except MatterWaveError as exc:
        print("physics error: %s" % exc, file=sys.stderr)
        return EXIT_PHYSICS
    except ValueError as exc:
        print("physics error: %s" % exc, file=sys.stderr)
        return EXIT_PHYSICS
    except OSError as exc:
        print("i/o error: %s" % exc, file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
