"""Transmission response of a resonator coupled to a two-level system.

Exact weak-drive transmission from input-output theory, an effective
photonic-mode (Lorentzian) description of the hybridized states with
weighted couplings and linewidths, the single-mode description for a
strongly dephased qubit, and the spectral-analysis tools to compare them.

All frequencies and rates are in units of the resonator frequency.
"""

from ._backend import BACKEND
from .analysis import (
    LorentzianFit,
    PeakReport,
    SweepRow,
    extract_fwhm,
    find_peaks,
    fit_lorentzian,
    mode_summary_sweep,
)
from .config import RunConfig, parse_config
from .core import (
    EigenStructure,
    SystemParams,
    diagonalize_oracle,
    eigenstructure,
    validate,
)
from .modes import (
    CrossoverDetuning,
    ModeDescriptor,
    bare_transmission,
    crossover_detuning,
    intermediate_amplitude,
    lorentzian_transmission,
    mode_descriptors,
    peak_transmission,
)
from .response import Spectrum, amplitude, sample_spectrum, transmission
from .weak import (
    WeakCouplingResponse,
    dispersive_shift,
    induced_loss,
    single_mode_amplitude,
    single_mode_transmission,
    susceptibility,
    weak_response,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CrossoverDetuning",
    "EigenStructure",
    "LorentzianFit",
    "ModeDescriptor",
    "PeakReport",
    "RunConfig",
    "Spectrum",
    "SweepRow",
    "SystemParams",
    "WeakCouplingResponse",
    "amplitude",
    "bare_transmission",
    "crossover_detuning",
    "diagonalize_oracle",
    "dispersive_shift",
    "eigenstructure",
    "extract_fwhm",
    "find_peaks",
    "fit_lorentzian",
    "induced_loss",
    "intermediate_amplitude",
    "lorentzian_transmission",
    "mode_descriptors",
    "mode_summary_sweep",
    "parse_config",
    "peak_transmission",
    "sample_spectrum",
    "single_mode_amplitude",
    "single_mode_transmission",
    "susceptibility",
    "transmission",
    "validate",
    "weak_response",
]
