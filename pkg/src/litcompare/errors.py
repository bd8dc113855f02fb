"""Exception hierarchy shared across the engine."""


class LitCompareError(Exception):
    """Base class for all engine errors."""


class ValidationError(LitCompareError):
    """Input violates a declared precondition (empty label, bad DOI, ...)."""


class NotFoundError(LitCompareError):
    """A referenced id does not exist."""


class StateError(LitCompareError):
    """Operation invoked before required setup (e.g. provider not loaded)."""


class ResolutionError(LitCompareError):
    """DOI metadata could not be resolved (offline miss or network failure)."""

    def __init__(self, doi: str, message: str | None = None):
        super().__init__(message or f"could not resolve metadata for DOI {doi}")
        self.doi = doi


class RetractedError(LitCompareError):
    """Snapshot data payload was deleted; metadata is still available."""

    def __init__(self, snapshot_id: str, metadata):
        super().__init__(f"data for snapshot {snapshot_id} has been retracted")
        self.snapshot_id = snapshot_id
        self.metadata = metadata
