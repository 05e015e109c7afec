"""Command-line front end: jcspec <mode> --config <path> [...].

Each run mode writes one CSV artifact:

* ``spectrum`` - columns ``omega,T``
* ``chart``    - columns ``delta,omega,T`` in row-major delta-then-omega order
* ``modes``    - columns ``delta,branch,omega_mode,kappa_c_eff,kappa_eff,
  T_peak_model,T_peak_exact,fwhm_exact,flag``
* ``weak``     - columns ``delta,kappa_q,delta_omega_q,T_peak_approx,
  T_peak_exact``
* ``fit``      - reads a CSV with ``omega,T`` columns and writes a one-row
  fit report

Floats are emitted with 12 significant digits and output is byte-for-byte
deterministic for a given configuration.  Exit status is 0 on success, 1 on
a domain error, and 2 on a usage or configuration error.
"""

import argparse
import math
import sys

import numpy as np

from ._backend import kernels
from .analysis import find_peaks, fit_lorentzian, mode_summary_sweep
from .config import parse_config
from .core import validate
from .errors import (
    ConfigError,
    ConflictingKeys,
    JcspecError,
    MissingKey,
    NoPeaks,
    ParseError,
)
from .response import Spectrum, sample_spectrum
from .weak import dispersive_shift, induced_loss

__all__ = ["main", "run", "read_csv"]

# hard ceiling on automatic grid refinement, to bound memory.
MAX_GRID_POINTS = 2_000_001


def _fmt(value):
    if isinstance(value, str):
        return value
    return f"{value:.11e}"


def _write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def read_csv(path):
    """Read one of our CSV artifacts: header list plus string-valued columns."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    if not lines or not lines[0]:
        raise ParseError(f"{path}: missing CSV header")
    header = lines[0].split(",")
    columns = {name: [] for name in header}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        cells = line.split(",")
        if len(cells) != len(header):
            raise ParseError(f"{path}: row has {len(cells)} cells, "
                             f"header has {len(header)}", line=lineno)
        for name, cell in zip(header, cells):
            columns[name].append(cell)
    return header, columns


def _resolution_floor(params):
    # narrowest feature in a run: min(kappa_eff) >= min(kappa, gamma)
    if params.gamma > 0.0:
        return min(params.kappa, params.gamma)
    return params.kappa


def _refine_points(omega_min, omega_max, n_points, kappa_min):
    """Grow the grid until the step resolves kappa_min / 10; warn when doing so."""
    span = omega_max - omega_min
    target = kappa_min / 10.0
    if span / (n_points - 1) <= target * (1.0 + 1e-9):
        return n_points
    refined = min(int(math.ceil(span / target)) + 1, MAX_GRID_POINTS)
    print(f"jcspec: grid of {n_points} points is coarser than the narrowest "
          f"linewidth / 10; refined to {refined}", file=sys.stderr)
    return refined


def _delta_grid(config):
    return np.linspace(config.delta_min, config.delta_max, config.delta_points)


def _run_spectrum(config):
    params = validate(config.params)
    n = _refine_points(config.omega_min, config.omega_max,
                       config.omega_points, _resolution_floor(params))
    spec = sample_spectrum(params, config.omega_min, config.omega_max, n)
    rows = zip(spec.frequencies, spec.transmissions)
    _write_csv(config.output, ["omega", "T"], rows)


def _run_chart(config):
    params = validate(config.params)
    n = _refine_points(config.omega_min, config.omega_max,
                       config.omega_points, _resolution_floor(params))
    deltas = _delta_grid(config)
    omegas = np.linspace(config.omega_min, config.omega_max, n)
    t = kernels.chart_grid(params.omega_r, params.kappa_c, params.kappa,
                           params.g, params.gamma, deltas, omegas)
    def rows():
        for i, d in enumerate(deltas):
            for j, w in enumerate(omegas):
                yield (d, w, t[i, j])
    _write_csv(config.output, ["delta", "omega", "T"], rows())


def _run_modes(config):
    params = validate(config.params)
    rows = mode_summary_sweep(params, _delta_grid(config))
    _write_csv(
        config.output,
        ["delta", "branch", "omega_mode", "kappa_c_eff", "kappa_eff",
         "T_peak_model", "T_peak_exact", "fwhm_exact", "flag"],
        ((r.delta, r.branch, r.omega_mode, r.kappa_c_eff, r.kappa_eff,
          r.t_peak_model, r.t_peak_exact, r.fwhm_exact, r.flag)
         for r in rows),
    )


def _weak_peak_exact(params, config):
    kq = induced_loss(params)
    if config.omega_min is not None:
        lo, hi = config.omega_min, config.omega_max
        n = config.omega_points or 2001
    else:
        center = params.omega_r + dispersive_shift(params)
        half = 5.0 * (params.kappa + kq)
        lo, hi = center - half, center + half
        n = 2001
    n = _refine_points(lo, hi, n, _resolution_floor(params))
    spec = sample_spectrum(params, lo, hi, n)
    try:
        return find_peaks(spec)[0].t_peak
    except NoPeaks:
        return math.nan


def _run_weak(config):
    params = validate(config.params)
    rows = []
    for delta in _delta_grid(config):
        p = params.detuned(float(delta))
        kq = induced_loss(p)
        dwq = dispersive_shift(p)
        t_approx = (2.0 * p.kappa_c / (p.kappa + kq)) ** 2
        rows.append((delta, kq, dwq, t_approx, _weak_peak_exact(p, config)))
    _write_csv(config.output,
               ["delta", "kappa_q", "delta_omega_q", "T_peak_approx",
                "T_peak_exact"],
               rows)


def _run_fit(config, input_path):
    if input_path is None:
        raise MissingKey("mode 'fit' requires --input <csv with omega,T>")
    header, columns = read_csv(input_path)
    for needed in ("omega", "T"):
        if needed not in header:
            raise ParseError(f"{input_path}: fit input needs an "
                             f"'{needed}' column, header is {header}")
    omega = np.array([float(v) for v in columns["omega"]])
    t = np.array([float(v) for v in columns["T"]])
    fit = fit_lorentzian(Spectrum(frequencies=omega, transmissions=t))
    _write_csv(config.output,
               ["omega_0", "kappa_fit", "kappa_c_fit", "rms_residual",
                "converged"],
               [(fit.omega_0, fit.kappa_fit, fit.kappa_c_fit,
                 fit.rms_residual, str(int(fit.converged)))])


def run(config, input_path=None):
    """Execute one run configuration, writing its CSV artifact."""
    if config.output is None:
        raise MissingKey("no output path: set 'output' in the config or "
                         "pass --output")
    if config.mode == "spectrum":
        _run_spectrum(config)
    elif config.mode == "chart":
        _run_chart(config)
    elif config.mode == "modes":
        _run_modes(config)
    elif config.mode == "weak":
        _run_weak(config)
    elif config.mode == "fit":
        _run_fit(config, input_path)
    else:  # pragma: no cover - parse_config rejects unknown modes
        raise ParseError(f"unknown mode {config.mode!r}")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="jcspec",
        description="Transmission response of a resonator coupled to a "
                    "two-level system: exact input-output evaluation and "
                    "effective-mode analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, blurb in (
        ("spectrum", "sample one transmission trace"),
        ("chart", "2D transmission over detuning and drive frequency"),
        ("modes", "peak/linewidth summary versus detuning, both branches"),
        ("weak", "induced loss, dispersive shift, and peak heights"),
        ("fit", "fit a Lorentzian to a CSV trace"),
    ):
        cmd = sub.add_parser(name, help=blurb)
        cmd.add_argument("--config", required=True, help="path to config file")
        cmd.add_argument("--output", help="output CSV path (overrides config)")
        cmd.add_argument("--override", action="append", default=[],
                         metavar="KEY=VALUE",
                         help="override a config key (repeatable)")
        if name == "fit":
            cmd.add_argument("--input", help="CSV with omega,T columns to fit")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"jcspec: {exc}", file=sys.stderr)
        return 1
    lines = [text]
    for item in args.override:
        key, sep, value = item.partition("=")
        if not sep or not key.strip() or not value.strip():
            print(f"jcspec: bad --override {item!r}, expected KEY=VALUE",
                  file=sys.stderr)
            return 2
        lines.append(f"{key.strip()} = {value.strip()}")
    try:
        config = parse_config("\n".join(lines), default_mode=args.command)
        if config.mode != args.command:
            raise ConflictingKeys(
                f"config sets mode '{config.mode}' but subcommand is "
                f"'{args.command}'")
        if args.output is not None:
            from .config import with_output
            config = with_output(config, args.output)
        run(config, input_path=getattr(args, "input", None))
    except ConfigError as exc:
        print(f"jcspec: {exc}", file=sys.stderr)
        return 2
    except JcspecError as exc:
        print(f"jcspec: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"jcspec: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
