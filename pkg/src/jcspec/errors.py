"""Exception hierarchy for jcspec.

Two broad families matter for the CLI exit codes: ``ConfigError`` subclasses
signal a bad run description (exit status 2), everything else derived from
``JcspecError`` is a domain error (exit status 1).
"""


class JcspecError(Exception):
    """Base class for all jcspec errors."""


# -- parameter validation -----------------------------------------------

class ParameterError(JcspecError):
    """A physical parameter set violates its invariants."""


class NonPositiveRate(ParameterError):
    """A rate or frequency that must be > 0 is zero or negative."""


class PortExceedsTotal(ParameterError):
    """Total photon loss is smaller than the two port couplings combined."""


class NegativeGamma(ParameterError):
    """Qubit decoherence rate is negative (zero is allowed)."""


# -- grids, spectra, extraction -----------------------------------------

class BadGrid(JcspecError):
    """Requested frequency grid is empty, reversed, or too short."""


class NoPeaks(JcspecError):
    """No interior local maximum above the noise floor."""


class HalfMaxOutsideWindow(JcspecError):
    """A half-maximum crossing falls outside the sampled window."""


class DegenerateWindow(JcspecError):
    """Fit window contains too few points to constrain the model."""


# -- configuration / CLI -------------------------------------------------

class ConfigError(JcspecError):
    """Base class for run-configuration problems (CLI exit status 2)."""


class ParseError(ConfigError):
    """Malformed or unknown content in a config file.

    Carries the 1-based line number when the problem is tied to a line.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MissingKey(ConfigError):
    """A key required by the selected run mode is absent."""


class ConflictingKeys(ConfigError):
    """Mutually exclusive keys were given with inconsistent values."""
