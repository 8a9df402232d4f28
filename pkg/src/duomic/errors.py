"""Exception types shared across the package."""


class DuomicError(Exception):
    """Base class for all package errors."""


class ParameterError(DuomicError):
    """A tunable parameter is outside its legal range."""


class ConfigMismatchError(DuomicError):
    """Two objects that must agree in shape/config do not."""


class InputError(DuomicError):
    """Input signal is malformed (non-finite, too short, misaligned)."""


class FormatError(DuomicError):
    """File-level format problem (wrong sample rate, channel count, codec)."""
