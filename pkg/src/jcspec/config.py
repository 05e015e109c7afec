"""Line-oriented run configuration for the command-line front end.

Config files hold ``key = value`` pairs, one per line, with ``#`` comments.
All frequencies and rates may be given in absolute units: when ``omega_r``
is present everything is normalized by it, so the rest of the library
always sees ``omega_r = 1``.  When the same key appears twice the last
occurrence wins, which lets a base configuration be extended by appending
lines (the CLI ``--override`` mechanism does exactly that).
"""

from dataclasses import dataclass, replace
from math import hypot

from .core import SystemParams
from .errors import ConflictingKeys, MissingKey, ParseError

__all__ = ["RunConfig", "parse_config", "RUN_MODES"]

RUN_MODES = ("spectrum", "chart", "modes", "weak", "fit")

_FLOAT_KEYS = frozenset({
    "omega_r", "omega_q", "delta", "kappa_c", "kappa", "g", "gamma",
    "omega_min", "omega_max", "delta_min", "delta_max",
})
_INT_KEYS = frozenset({"omega_points", "delta_points"})
_STR_KEYS = frozenset({"mode", "output"})
_KNOWN_KEYS = _FLOAT_KEYS | _INT_KEYS | _STR_KEYS

# keys rescaled by omega_r when absolute units are used
_SCALED_KEYS = (
    "omega_q", "delta", "kappa_c", "kappa", "g", "gamma",
    "omega_min", "omega_max", "delta_min", "delta_max",
)

_PARAM_KEYS = ("kappa_c", "kappa", "g", "gamma")


@dataclass(frozen=True)
class RunConfig:
    """A fully resolved run description (all values in units of omega_r)."""

    mode: str
    params: SystemParams = None
    omega_min: float = None
    omega_max: float = None
    omega_points: int = None
    delta_min: float = None
    delta_max: float = None
    delta_points: int = None
    output: str = None
    fmt: str = "csv"


def _raw_pairs(text):
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {line!r}", line=lineno)
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _KNOWN_KEYS:
            raise ParseError(f"unknown key {key!r}", line=lineno)
        if not value:
            raise ParseError(f"empty value for key {key!r}", line=lineno)
        values[key] = (value, lineno)  # last occurrence wins
    return values


def _convert(values):
    out = {}
    for key, (text, lineno) in values.items():
        if key in _FLOAT_KEYS:
            try:
                out[key] = float(text)
            except ValueError:
                raise ParseError(f"{key} needs a number, got {text!r}", line=lineno)
        elif key in _INT_KEYS:
            try:
                out[key] = int(text)
            except ValueError:
                raise ParseError(f"{key} needs an integer, got {text!r}", line=lineno)
        else:
            out[key] = text
    return out


def _require(values, keys, mode):
    for key in keys:
        if values.get(key) is None:
            raise MissingKey(f"mode '{mode}' requires key '{key}'")


def _check_range(values, lo_key, hi_key, pts_key):
    lo, hi, pts = values.get(lo_key), values.get(hi_key), values.get(pts_key)
    if lo is not None and hi is not None and not lo < hi:
        raise ParseError(f"need {lo_key} < {hi_key}, got [{lo}, {hi}]")
    if pts is not None and pts < 2:
        raise ParseError(f"{pts_key} must be >= 2, got {pts}")


def _apply_default_grids(values, mode, params):
    """Fill unset ranges with physics-derived defaults.

    The detuning span defaults to +-6g for the hybridization modes and to
    +-2.5 gamma for the weak-coupling sweep; the drive window is chosen to
    cover both hybridized branches at the extreme detunings with a
    10-kappa margin.  Point counts start modest; the runner refines them
    against the narrowest linewidth.
    """
    if mode in ("chart", "modes", "weak"):
        if mode == "weak" and params.gamma > 0:
            span = 2.5 * params.gamma
        else:
            span = 6.0 * params.g
        if values.get("delta_min") is None:
            values["delta_min"] = -span
        if values.get("delta_max") is None:
            values["delta_max"] = span
        if values.get("delta_points") is None:
            values["delta_points"] = 101

    if mode in ("spectrum", "chart"):
        if mode == "spectrum":
            candidates = (params.delta,)
        else:
            candidates = (values["delta_min"], values["delta_max"], 0.0)
        lo = hi = params.omega_r
        for delta in candidates:
            rabi = hypot(delta, 2.0 * params.g)
            center = params.omega_r + 0.5 * delta
            lo = min(lo, center - 0.5 * rabi)
            hi = max(hi, center + 0.5 * rabi)
        margin = 10.0 * params.kappa
        if values.get("omega_min") is None:
            values["omega_min"] = lo - margin
        if values.get("omega_max") is None:
            values["omega_max"] = hi + margin
        if values.get("omega_points") is None:
            values["omega_points"] = 501


def parse_config(text, default_mode=None):
    """Parse config text into a :class:`RunConfig`.

    ``default_mode`` supplies the run mode when the text does not; a mode
    present in the text always wins (the CLI cross-checks it against the
    subcommand separately).  Grid ranges and point counts not given in the
    text get physics-derived defaults; the four rates (and, for single
    spectra, the detuning) are never defaulted silently.

    Raises
    ------
    ParseError
        Malformed line, unknown key, bad value, or degenerate range.
    MissingKey
        A key required by the run mode is absent.
    ConflictingKeys
        ``omega_q`` and ``delta`` are both present but inconsistent.
    """
    values = _convert(_raw_pairs(text))

    mode = values.get("mode", default_mode)
    if mode is None:
        raise MissingKey("key 'mode' is required")
    if mode not in RUN_MODES:
        raise ParseError(f"mode must be one of {'/'.join(RUN_MODES)}, got {mode!r}")

    # normalize to units of omega_r
    scale = values.get("omega_r", 1.0)
    if not scale > 0.0:
        raise ParseError(f"omega_r must be > 0, got {scale}")
    if scale != 1.0:
        for key in _SCALED_KEYS:
            if key in values:
                values[key] = values[key] / scale

    omega_q = values.get("omega_q")
    delta = values.get("delta")
    if omega_q is not None and delta is not None:
        if abs(omega_q - (1.0 + delta)) > 1e-9:
            raise ConflictingKeys(
                f"omega_q = {omega_q} and delta = {delta} disagree "
                f"(omega_q - omega_r = {omega_q - 1.0})")
    elif delta is not None:
        omega_q = 1.0 + delta

    params = None
    if all(values.get(k) is not None for k in _PARAM_KEYS):
        params = SystemParams(
            kappa_c=values["kappa_c"],
            kappa=values["kappa"],
            g=values["g"],
            gamma=values["gamma"],
            omega_r=1.0,
            omega_q=1.0 if omega_q is None else omega_q,
        )

    if mode != "fit":
        _require(values, _PARAM_KEYS, mode)
    if mode == "spectrum" and omega_q is None:
        raise MissingKey("mode 'spectrum' requires 'omega_q' or 'delta'")
    if mode == "weak" and \
            (values.get("omega_min") is None) != (values.get("omega_max") is None):
        raise MissingKey("mode 'weak' needs both omega_min and omega_max "
                         "when a window is given")

    _check_range(values, "omega_min", "omega_max", "omega_points")
    _check_range(values, "delta_min", "delta_max", "delta_points")
    if params is not None and mode != "fit":
        _apply_default_grids(values, mode, params)

    return RunConfig(
        mode=mode,
        params=params,
        omega_min=values.get("omega_min"),
        omega_max=values.get("omega_max"),
        omega_points=values.get("omega_points"),
        delta_min=values.get("delta_min"),
        delta_max=values.get("delta_max"),
        delta_points=values.get("delta_points"),
        output=values.get("output"),
    )


def with_output(config, output):
    """Copy of ``config`` with the output path replaced."""
    return replace(config, output=output)
