"""Physical parameter set and closed-form eigenstructure of the lowest doublet.

All frequencies and rates are expressed in units of the resonator frequency,
so ``omega_r = 1.0`` in normal use; the CLI normalizes absolute inputs before
they reach this module.  Everything here is a pure function of an immutable
parameter set and is safe to share across threads.
"""

from dataclasses import dataclass, replace
from math import atan2, hypot, sqrt

import numpy as np

from .errors import NegativeGamma, NonPositiveRate, PortExceedsTotal

__all__ = [
    "SystemParams",
    "EigenStructure",
    "validate",
    "eigenstructure",
    "diagonalize_oracle",
]


@dataclass(frozen=True)
class SystemParams:
    """One configuration of a driven resonator coupled to a two-level system.

    Parameters
    ----------
    kappa_c : float
        Coupling rate to each of the input and output ports.
    kappa : float
        Total photon loss rate of the resonator mode (both ports plus any
        internal losses), so ``kappa >= 2 * kappa_c``.
    g : float
        Coupling rate between the two-level system and the photon mode.
    gamma : float
        Total decoherence rate of the two-level system.  ``gamma = 0`` is
        accepted as a lossless-qubit test mode.
    omega_r : float
        Resonator frequency (the frequency unit; defaults to 1).
    omega_q : float
        Two-level-system transition frequency.
    """

    kappa_c: float
    kappa: float
    g: float
    gamma: float
    omega_r: float = 1.0
    omega_q: float = 1.0

    @property
    def delta(self):
        """Qubit detuning omega_q - omega_r (any sign)."""
        return self.omega_q - self.omega_r

    def detuned(self, delta):
        """Copy of this parameter set with omega_q = omega_r + delta."""
        return replace(self, omega_q=self.omega_r + delta)


@dataclass(frozen=True)
class EigenStructure:
    """Eigenfrequencies and hybridization of the lowest excited doublet.

    ``c_plus``/``c_minus`` are the amplitudes of the bare electronic and
    photonic excitations in the upper eigenstate; the lower eigenstate
    carries the same amplitudes swapped, with a relative sign.
    """

    omega_rabi: float
    omega_plus: float
    omega_minus: float
    c_plus: float
    c_minus: float
    phi: float


def validate(params):
    """Check the parameter invariants, returning ``params`` unchanged.

    Raises
    ------
    NonPositiveRate
        If any of omega_r, omega_q, kappa_c, kappa, g is <= 0.
    PortExceedsTotal
        If kappa < 2 * kappa_c.
    NegativeGamma
        If gamma < 0.
    """
    for name in ("omega_r", "omega_q", "kappa_c", "kappa", "g"):
        value = getattr(params, name)
        if not value > 0.0:
            raise NonPositiveRate(f"{name} must be > 0, got {value}")
    if params.gamma < 0.0:
        raise NegativeGamma(f"gamma must be >= 0, got {params.gamma}")
    if params.kappa < 2.0 * params.kappa_c:
        raise PortExceedsTotal(
            f"kappa = {params.kappa} is below the two-port minimum "
            f"2*kappa_c = {2.0 * params.kappa_c}"
        )
    return params


def eigenstructure(params):
    """Closed-form eigenstructure of the lowest doublet.

    Uses cancellation-free forms for the hybridization amplitudes so the
    small coefficient stays accurate at large detuning: the weight on the
    far-detuned side is computed from ``2 g^2 / ((Omega + |delta|) Omega)``
    instead of the difference ``(1 - |delta|/Omega) / 2``.

    Requires ``g > 0`` (use :func:`jcspec.modes.bare_transmission` for a
    plain resonator); callers are expected to have validated ``params``.
    """
    delta = params.delta
    g = params.g
    omega_rabi = hypot(delta, 2.0 * g)
    half_sum = 0.5 * (params.omega_q + params.omega_r)
    omega_plus = half_sum + 0.5 * omega_rabi
    omega_minus = half_sum - 0.5 * omega_rabi
    if delta >= 0.0:
        s = omega_rabi + delta
        c_plus = sqrt(0.5 * s / omega_rabi)
        c_minus = g * sqrt(2.0 / (s * omega_rabi))
    else:
        d = omega_rabi - delta
        c_minus = sqrt(0.5 * d / omega_rabi)
        c_plus = g * sqrt(2.0 / (d * omega_rabi))
    phi = atan2(2.0 * g, delta)
    return EigenStructure(omega_rabi, omega_plus, omega_minus, c_plus, c_minus, phi)


def diagonalize_oracle(params):
    """Brute-force eigenstructure from numerical 2x2 diagonalization.

    Builds the one-excitation block of the Hamiltonian (diagonal omega_q,
    omega_r; off-diagonal g) and diagonalizes it numerically, never touching
    the closed forms.  Exists as an independent cross-check for tests.
    """
    h = np.array([[params.omega_q, params.g], [params.g, params.omega_r]])
    evals, evecs = np.linalg.eigh(h)
    upper = evecs[:, 1]
    if upper[0] < 0.0:
        upper = -upper
    c_plus, c_minus = float(upper[0]), float(upper[1])
    return EigenStructure(
        omega_rabi=float(evals[1] - evals[0]),
        omega_plus=float(evals[1]),
        omega_minus=float(evals[0]),
        c_plus=c_plus,
        c_minus=c_minus,
        phi=2.0 * atan2(c_minus, c_plus),
    )
