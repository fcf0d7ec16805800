"""Error types shared across the library and surfaced by the CLI."""

from __future__ import annotations


class FolcalcError(Exception):
    """Base error; ``code`` is a stable machine-readable identifier."""

    code = "error"

    def __init__(self, message: str, location: str | None = None):
        super().__init__(message)
        self.message = message
        self.location = location


class ValidationError(FolcalcError):
    """Malformed or out-of-contract input."""

    code = "invalid-input"


class DegenerateConfigurationError(FolcalcError):
    """The pairing matrix of the configuration is singular."""

    code = "degenerate-configuration"


class NotPseudoeffectiveError(FolcalcError):
    """No decomposition with a nef positive part exists relative to the configuration."""

    code = "not-pseudoeffective"


class InconsistentSamplesError(FolcalcError):
    """Samples do not fit a quasi-polynomial of any admissible period."""

    code = "inconsistent-samples"


class NotGeneralTypeError(FolcalcError):
    """The extracted leading coefficient is not positive."""

    code = "not-general-type"


class InconsistentModelError(FolcalcError):
    """Model data is numerically inconsistent (non-integral Euler characteristic)."""

    code = "inconsistent-model"
