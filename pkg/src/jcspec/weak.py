"""Single-mode description of the resonator for a strongly dephased qubit.

When the qubit decoherence rate exceeds the coupling, the response keeps a
single mode near the bare resonator frequency.  The qubit enters only
through its susceptibility, whose real and imaginary parts evaluated near
the resonator frequency give an added loss rate and a dispersive frequency
pull.  The added loss carries the Purcell prefactor 1/(1 + (2 delta/gamma)^2).
"""

from dataclasses import dataclass

from .errors import NonPositiveRate

__all__ = [
    "WeakCouplingResponse",
    "susceptibility",
    "induced_loss",
    "dispersive_shift",
    "single_mode_amplitude",
    "single_mode_transmission",
    "weak_response",
]


@dataclass(frozen=True)
class WeakCouplingResponse:
    """Qubit-induced corrections to the resonator mode.

    ``chi_re``/``chi_im`` are the susceptibility components at the bare
    resonator frequency; ``kappa_q`` and ``delta_omega_q`` the induced loss
    and dispersive shift derived from them.  ``weak_regime`` is False when
    g >= gamma, outside the regime this description is built for.
    """

    chi_re: float
    chi_im: float
    kappa_q: float
    delta_omega_q: float
    weak_regime: bool = True


def _require_gamma(params):
    if params.gamma <= 0.0:
        raise NonPositiveRate("weak-coupling expressions need gamma > 0")


def susceptibility(params, omega):
    """Electronic susceptibility chi = g / (gamma/2 - i(omega - omega_q))."""
    _require_gamma(params)
    return params.g / (0.5 * params.gamma - 1j * (omega - params.omega_q))


def induced_loss(params):
    """Loss rate the qubit adds to the resonator mode.

    kappa_q = (4 g^2 / gamma) / (1 + (2 delta / gamma)^2), maximal at zero
    detuning and rolled off by the Purcell prefactor at finite detuning.
    """
    _require_gamma(params)
    t = 2.0 * params.delta / params.gamma
    return (4.0 * params.g ** 2 / params.gamma) / (1.0 + t * t)


def dispersive_shift(params):
    """Pull of the resonator frequency by the detuned qubit.

    delta_omega_q = -(2 g^2 / gamma) * (2 delta / gamma) / (1 + (2 delta /
    gamma)^2); zero on resonance, extremal (+-g^2/gamma) at delta = -+gamma/2,
    and always opposite in sign to the detuning.
    """
    _require_gamma(params)
    t = 2.0 * params.delta / params.gamma
    return -(2.0 * params.g ** 2 / params.gamma) * t / (1.0 + t * t)


def single_mode_amplitude(params, omega):
    """Shifted-Lorentzian amplitude of the dressed resonator mode.

    A = 1 / ((kappa + kappa_q)/2 - i(omega - omega_r - delta_omega_q)),
    the bare resonator response with added loss and shifted resonance.
    Meaningful for gamma > g; check :func:`weak_response` for the flag.
    """
    kq = induced_loss(params)
    dwq = dispersive_shift(params)
    return 1.0 / (0.5 * (params.kappa + kq)
                  - 1j * (omega - params.omega_r - dwq))


def single_mode_transmission(params, omega):
    """Transmission kappa_c^2 |A|^2 of the single-mode description."""
    a = single_mode_amplitude(params, omega)
    return params.kappa_c ** 2 * (a.real * a.real + a.imag * a.imag)


def weak_response(params):
    """Bundle chi (at the bare resonator frequency), kappa_q, delta_omega_q."""
    chi = susceptibility(params, params.omega_r)
    return WeakCouplingResponse(
        chi_re=chi.real,
        chi_im=chi.imag,
        kappa_q=induced_loss(params),
        delta_omega_q=dispersive_shift(params),
        weak_regime=params.gamma > params.g,
    )
