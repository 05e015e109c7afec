# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled grid kernels: the hot inner loops of spectrum and chart runs.

Arithmetic mirrors ``_kernels_py`` term by term so both backends agree to
rounding error.
"""

import numpy as np

BACKEND_NAME = "cython"


cdef inline double _t_point(double omega_r, double omega_q, double kc2,
                            double hk, double hg, double g2,
                            double w) noexcept nogil:
    cdef double complex num = hg - 1j * (w - omega_q)
    cdef double complex den = (hk - 1j * (w - omega_r)) * num + g2
    cdef double complex a = num / den
    return kc2 * (a.real * a.real + a.imag * a.imag)


def amplitude_grid(double omega_r, double omega_q, double kappa_c,
                   double kappa, double g, double gamma, omega):
    """Complex response amplitude on a frequency grid."""
    cdef double[::1] w = np.ascontiguousarray(omega, dtype=np.float64)
    out_arr = np.empty(w.shape[0], dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef double hk = 0.5 * kappa, hg = 0.5 * gamma, g2 = g * g
    cdef double complex num, den
    cdef Py_ssize_t i
    with nogil:
        for i in range(w.shape[0]):
            num = hg - 1j * (w[i] - omega_q)
            den = (hk - 1j * (w[i] - omega_r)) * num + g2
            out[i] = num / den
    return out_arr


def transmission_grid(double omega_r, double omega_q, double kappa_c,
                      double kappa, double g, double gamma, omega):
    """Transmission kappa_c^2 |A|^2 on a frequency grid."""
    cdef double[::1] w = np.ascontiguousarray(omega, dtype=np.float64)
    out_arr = np.empty(w.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double kc2 = kappa_c * kappa_c
    cdef double hk = 0.5 * kappa, hg = 0.5 * gamma, g2 = g * g
    cdef Py_ssize_t i
    with nogil:
        for i in range(w.shape[0]):
            out[i] = _t_point(omega_r, omega_q, kc2, hk, hg, g2, w[i])
    return out_arr


def lorentzian_grid(double kappa_c_eff, double kappa_eff, double omega_0,
                    omega):
    """Lorentzian kappa_c_eff^2 / ((kappa_eff/2)^2 + (omega - omega_0)^2)."""
    cdef double[::1] w = np.ascontiguousarray(omega, dtype=np.float64)
    out_arr = np.empty(w.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double kc2 = kappa_c_eff * kappa_c_eff
    cdef double q = 0.25 * kappa_eff * kappa_eff
    cdef double x
    cdef Py_ssize_t i
    with nogil:
        for i in range(w.shape[0]):
            x = w[i] - omega_0
            out[i] = kc2 / (q + x * x)
    return out_arr


def chart_grid(double omega_r, double kappa_c, double kappa, double g,
               double gamma, delta, omega):
    """Transmission chart T[i, j] over detunings delta[i] and drive omega[j]."""
    cdef double[::1] d = np.ascontiguousarray(delta, dtype=np.float64)
    cdef double[::1] w = np.ascontiguousarray(omega, dtype=np.float64)
    out_arr = np.empty((d.shape[0], w.shape[0]), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double kc2 = kappa_c * kappa_c
    cdef double hk = 0.5 * kappa, hg = 0.5 * gamma, g2 = g * g
    cdef double omega_q
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(d.shape[0]):
            omega_q = omega_r + d[i]
            for j in range(w.shape[0]):
                out[i, j] = _t_point(omega_r, omega_q, kc2, hk, hg, g2, w[j])
    return out_arr
