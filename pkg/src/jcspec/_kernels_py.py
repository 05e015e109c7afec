"""Pure-numpy grid kernels (fallback backend).

Same signatures and same arithmetic as the compiled module ``_kernels``;
used when the extension is not built or ``JCSPEC_PURE_PYTHON`` is set.
"""

import numpy as np

BACKEND_NAME = "python"


def amplitude_grid(omega_r, omega_q, kappa_c, kappa, g, gamma, omega):
    """Complex response amplitude on a frequency grid."""
    omega = np.asarray(omega, dtype=np.float64)
    num = 0.5 * gamma - 1j * (omega - omega_q)
    den = (0.5 * kappa - 1j * (omega - omega_r)) * num + g * g
    return num / den


def transmission_grid(omega_r, omega_q, kappa_c, kappa, g, gamma, omega):
    """Transmission kappa_c^2 |A|^2 on a frequency grid."""
    a = amplitude_grid(omega_r, omega_q, kappa_c, kappa, g, gamma, omega)
    return (kappa_c * kappa_c) * (a.real * a.real + a.imag * a.imag)


def lorentzian_grid(kappa_c_eff, kappa_eff, omega_0, omega):
    """Lorentzian kappa_c_eff^2 / ((kappa_eff/2)^2 + (omega - omega_0)^2)."""
    omega = np.asarray(omega, dtype=np.float64)
    x = omega - omega_0
    return (kappa_c_eff * kappa_c_eff) / (0.25 * kappa_eff * kappa_eff + x * x)


def chart_grid(omega_r, kappa_c, kappa, g, gamma, delta, omega):
    """Transmission chart T[i, j] over detunings delta[i] and drive omega[j]."""
    delta = np.asarray(delta, dtype=np.float64)
    omega = np.asarray(omega, dtype=np.float64)
    out = np.empty((delta.size, omega.size), dtype=np.float64)
    for i, d in enumerate(delta):
        out[i] = transmission_grid(omega_r, omega_r + d, kappa_c, kappa, g,
                                   gamma, omega)
    return out
