"""Exception types shared across the package."""


class VocabcatError(Exception):
    """Base class for package errors."""


class BankError(VocabcatError):
    """Malformed bank data: schema violation, bad stimulus field, bad file."""


class AdministrationError(VocabcatError):
    """Bank cannot support a test session; carries the deficiency list."""

    def __init__(self, deficiencies: list[str]):
        super().__init__("bank not eligible for administration: " + "; ".join(deficiencies))
        self.deficiencies = deficiencies


class StateError(VocabcatError):
    """Operation called in the wrong session state."""


class DuplicateAnswerError(StateError):
    """Answer re-submitted for an item that was already resolved."""


class AnswerError(VocabcatError):
    """Answer does not match the pending item or stage."""


class ConfigurationError(VocabcatError):
    """Required configuration is missing (e.g. conversion coefficients)."""


class CalibrationError(VocabcatError):
    """Calibration failed to converge; carries the last iterate when available."""

    def __init__(self, message: str, last_result=None):
        super().__init__(message)
        self.last_result = last_result


class FitError(VocabcatError):
    """Curve fit failed; carries diagnostics."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class ReplayError(VocabcatError):
    """Event log does not replay to a consistent session."""
