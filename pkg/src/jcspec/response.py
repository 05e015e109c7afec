"""Exact weak-drive transmission of the full system from input-output theory.

The response amplitude is evaluated in complex double precision exactly as
the closed form is written (numerator and denominator separately); at the
parameter scales this library targets the dynamic range is far from
overflow, and the denominator cannot vanish for real drive frequencies as
long as kappa and gamma are positive.

The drive is strictly a linear weak probe: there is no power parameter
anywhere in the interface.
"""

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import BadGrid

__all__ = ["Spectrum", "amplitude", "transmission", "sample_spectrum"]


@dataclass(frozen=True)
class Spectrum:
    """A sampled transmission trace.

    ``params`` records the generating parameter set when there is one;
    spectra loaded from files or built synthetically carry ``None`` and the
    analysis routines then fall back to grid interpolation.
    """

    frequencies: np.ndarray
    transmissions: np.ndarray
    amplitudes: np.ndarray = None
    params: object = None

    def __post_init__(self):
        if len(self.frequencies) != len(self.transmissions):
            raise BadGrid("frequencies and transmissions differ in length")
        if self.amplitudes is not None and len(self.amplitudes) != len(self.frequencies):
            raise BadGrid("amplitudes length does not match the grid")
        if len(self.frequencies) >= 2 and not np.all(np.diff(self.frequencies) > 0):
            raise BadGrid("frequency grid must be strictly increasing")


def amplitude(params, omega):
    """Complex response amplitude A at drive frequency ``omega``.

    A = (gamma/2 - i(w - w_q)) / ((kappa/2 - i(w - w_r))(gamma/2 - i(w - w_q)) + g^2)

    Accepts a scalar or an array of frequencies.
    """
    num = 0.5 * params.gamma - 1j * (omega - params.omega_q)
    den = (0.5 * params.kappa - 1j * (omega - params.omega_r)) * num + params.g ** 2
    return num / den


def transmission(params, omega):
    """Transmission T = kappa_c^2 |A|^2; lies in [0, 1] for kappa >= 2 kappa_c."""
    a = amplitude(params, omega)
    return params.kappa_c ** 2 * (a.real * a.real + a.imag * a.imag)


def sample_spectrum(params, omega_min, omega_max, n_points, keep_amplitudes=False):
    """Sample the exact transmission on a uniform, endpoint-inclusive grid.

    Grid points are evaluated independently (the kernel may do so in any
    order); the returned arrays are always ordered by frequency.

    Raises
    ------
    BadGrid
        If ``omega_min >= omega_max`` or ``n_points < 2``.
    """
    if not omega_min < omega_max:
        raise BadGrid(f"need omega_min < omega_max, got [{omega_min}, {omega_max}]")
    if n_points < 2:
        raise BadGrid(f"need at least 2 grid points, got {n_points}")
    grid = np.linspace(omega_min, omega_max, int(n_points))
    t = kernels.transmission_grid(params.omega_r, params.omega_q, params.kappa_c,
                                  params.kappa, params.g, params.gamma, grid)
    amps = None
    if keep_amplitudes:
        amps = kernels.amplitude_grid(params.omega_r, params.omega_q, params.kappa_c,
                                      params.kappa, params.g, params.gamma, grid)
    return Spectrum(frequencies=grid, transmissions=t, amplitudes=amps, params=params)
