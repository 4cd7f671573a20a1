"""Exception hierarchy for fraccep."""


class FraccepError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidSignalError(FraccepError):
    """Signal samples, length or sample interval are not usable."""


class SingularOrderError(FraccepError):
    """The requested fractional order hits a singularity of cot/csc."""


class UnsupportedOrderError(FraccepError):
    """The operation is undefined at the requested order."""


class IncompatibleSignalsError(FraccepError):
    """Two signals that must share a grid do not."""


class DegenerateSpectrumError(FraccepError):
    """A spectrum is identically zero, so its logarithm is undefined."""


class AliasingError(FraccepError):
    """A requested frequency is at or above Nyquist."""


class InfeasibleConfigError(FraccepError):
    """Configuration parameters cannot be satisfied together."""


class ConfigError(FraccepError):
    """Malformed or inconsistent run configuration."""


class FormatError(FraccepError):
    """A serialized file does not match the expected layout."""
