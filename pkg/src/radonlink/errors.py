"""Exception types shared across the package."""


class NotGeneralPositionError(ValueError):
    """Some n+1 of the points lie in a common hyperplane."""

    def __init__(self, violation, message=None):
        self.violation = tuple(violation)
        super().__init__(message or f"points {list(self.violation)} lie in a common hyperplane")


class ParityError(ValueError):
    """Operation called for the wrong parity of the dimension n."""


class InvalidWitnessError(ValueError):
    """Vector is zero or does not solve the configuration's system."""


class CertificateError(ValueError):
    """Certificate is structurally malformed (not merely false)."""


class GenerationError(RuntimeError):
    """Configuration generator gave up."""


class TheoremViolation(RuntimeError):
    """A guaranteed object was not found; always an implementation defect."""
