class ResourceLimitError(RuntimeError):
    """A computation was refused because it would exceed a configured ceiling."""


class VerificationError(AssertionError):
    """A checked identity failed on a concrete instance."""
