"""Effective photonic-mode description of the hybridized states.

In the strong-coupling regime each hybridized state responds like a bare
resonator mode: a Lorentzian whose port coupling is the bare coupling
scaled by the state's photonic weight, and whose linewidth is the weighted
sum of the photonic and electronic decoherence rates.  The routines here
build those descriptors, the Lorentzian response itself, the intermediate
(pre-Lorentzian) amplitude used to validate the approximation chain, and
the detuning at which photonic and electronic losses contribute equally.
"""

from dataclasses import dataclass
from math import sqrt

from .core import eigenstructure
from .errors import NonPositiveRate

__all__ = [
    "ModeDescriptor",
    "CrossoverDetuning",
    "mode_descriptors",
    "lorentzian_transmission",
    "peak_transmission",
    "intermediate_amplitude",
    "bare_transmission",
    "crossover_detuning",
]


@dataclass(frozen=True)
class ModeDescriptor:
    """One hybridized state viewed as an effective resonator mode.

    ``photonic_weight`` is the squared amplitude of the bare photonic
    excitation in the state, ``electronic_weight`` the electronic one;
    they sum to 1.  ``strong_coupling`` is False when g <= max(kappa,
    gamma), where the mode picture starts to lose meaning.
    """

    branch: str
    omega_mode: float
    kappa_c_eff: float
    kappa_eff: float
    photonic_weight: float
    electronic_weight: float
    strong_coupling: bool = True


@dataclass(frozen=True)
class CrossoverDetuning:
    """Detuning of equal photonic/electronic linewidth contributions.

    ``approx`` is the gamma << kappa form g*sqrt(kappa/gamma); ``exact``
    solves the equal-contribution condition without that assumption,
    g*(kappa - gamma)/sqrt(kappa*gamma).  ``degenerate`` marks kappa ==
    gamma, where the condition only holds at zero detuning;
    ``approx_valid`` is False when gamma is not small against kappa and
    the approximate form should not be trusted.
    """

    approx: float
    exact: float
    degenerate: bool
    approx_valid: bool


def mode_descriptors(params):
    """Effective-mode descriptors (plus, minus) for both hybridized states.

    Valid for any parameter set; the ``strong_coupling`` flag marks
    descriptors computed outside the regime they describe well.
    """
    eig = eigenstructure(params)
    wp2 = eig.c_plus ** 2   # electronic weight of the plus mode
    wm2 = eig.c_minus ** 2
    strong = params.g > max(params.kappa, params.gamma)
    plus = ModeDescriptor(
        branch="plus",
        omega_mode=eig.omega_plus,
        kappa_c_eff=params.kappa_c * wm2,
        kappa_eff=params.kappa * wm2 + params.gamma * wp2,
        photonic_weight=wm2,
        electronic_weight=wp2,
        strong_coupling=strong,
    )
    minus = ModeDescriptor(
        branch="minus",
        omega_mode=eig.omega_minus,
        kappa_c_eff=params.kappa_c * wp2,
        kappa_eff=params.kappa * wp2 + params.gamma * wm2,
        photonic_weight=wp2,
        electronic_weight=wm2,
        strong_coupling=strong,
    )
    return plus, minus


def lorentzian_transmission(mode, omega):
    """Effective-mode transmission kc_eff^2 / ((k_eff/2)^2 + (w - w_mode)^2)."""
    x = omega - mode.omega_mode
    return mode.kappa_c_eff ** 2 / (0.25 * mode.kappa_eff ** 2 + x * x)


def peak_transmission(mode):
    """On-resonance transmission (2 kc_eff / k_eff)^2 of an effective mode."""
    return (2.0 * mode.kappa_c_eff / mode.kappa_eff) ** 2


def intermediate_amplitude(params, omega, branch):
    """Pre-Lorentzian approximate amplitude near one hybridized mode.

    This is the form obtained by replacing the slowly varying numerator by
    its on-resonance value and dropping the kappa*gamma/4 term; squaring it
    against kappa_c^2 reproduces :func:`lorentzian_transmission` exactly
    (identical algebra), which the tests exploit to validate the chain from
    the exact response to the effective-mode Lorentzian.
    """
    eig = eigenstructure(params)
    if branch == "plus":
        w0, sign = eig.omega_plus, 1.0
    elif branch == "minus":
        w0, sign = eig.omega_minus, -1.0
    else:
        raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")
    num = w0 - params.omega_q
    den = (0.5 * params.kappa * (w0 - params.omega_q)
           + 0.5 * params.gamma * (w0 - params.omega_r)
           - sign * 1j * eig.omega_rabi * (omega - w0))
    return num / den


def bare_transmission(params, omega):
    """Transmission of the bare resonator alone (ignores g, gamma, omega_q)."""
    x = omega - params.omega_r
    return params.kappa_c ** 2 / (0.25 * params.kappa ** 2 + x * x)


def crossover_detuning(params):
    """Detuning where photonic and electronic losses contribute equally.

    At this point the effective linewidth doubles relative to its coupling
    and the peak transmission drops by a factor of 4 from the bare-photonic
    value.  Both the gamma << kappa approximation and the exact solution
    are returned; see :class:`CrossoverDetuning`.
    """
    if params.gamma <= 0.0:
        raise NonPositiveRate("crossover_detuning needs gamma > 0")
    kappa, gamma = params.kappa, params.gamma
    approx = params.g * sqrt(kappa / gamma)
    exact = params.g * (kappa - gamma) / sqrt(kappa * gamma)
    return CrossoverDetuning(
        approx=approx,
        exact=exact,
        degenerate=(kappa == gamma),
        approx_valid=(gamma <= 0.1 * kappa),
    )
