"""Exception types shared across the toolkit."""


class TourcraftError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(TourcraftError):
    """Invalid configuration value (unknown kind, bad grid, bad flag)."""


class DegenerateInstanceError(TourcraftError):
    """Instance too small for the requested operation."""


class ValidationError(TourcraftError):
    """Structural invariant violated (asymmetric weights, bad tour, ...)."""


class ParseError(TourcraftError):
    """Malformed TSPLIB input; message names the offending line."""


class SizeLimitError(TourcraftError):
    """Instance exceeds a hard size limit (exact solver)."""
