class BridgelabError(Exception):
    pass


class InvalidArgument(BridgelabError, ValueError):
    pass


class CapabilityError(BridgelabError):
    """Requested size exceeds a hard enumeration or recurrence cap."""


class InvalidCodeword(BridgelabError, ValueError):
    pass


class VerificationFailure(BridgelabError, AssertionError):
    """A theorem-level check failed; ``counterexample`` holds the offending graph text."""

    def __init__(self, message: str, counterexample: str | None = None):
        super().__init__(message)
        self.counterexample = counterexample
