"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded its configured budget.

    Carries whatever progress state the caller may want to report or
    checkpoint, e.g. the last prime scanned before giving up.
    """

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress


class MathViolationError(RuntimeError):
    """A mathematical assertion failed (e.g. a Goldbach violation).

    The CLI maps this to exit code 1, distinct from usage errors.
    """


class CheckpointError(RuntimeError):
    """Checkpoint file is corrupt, incomplete, or has an unsupported version."""
