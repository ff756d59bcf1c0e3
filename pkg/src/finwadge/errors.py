"""Exception types shared across the package."""


class FinWadgeError(Exception):
    """Base class for all library errors."""


class DuplicateLabelError(FinWadgeError):
    pass


class UnknownElement(FinWadgeError):
    pass


class CycleError(FinWadgeError):
    """The given relation is not antisymmetric (its closure has a cycle)."""


class SpaceMismatch(FinWadgeError):
    """An object was used with a space it does not belong to."""


class EmptySubspace(FinWadgeError):
    pass


class NotOpen(FinWadgeError):
    pass


class NotIncreasing(FinWadgeError):
    pass


class ColorCountMismatch(FinWadgeError):
    pass


class CapExceeded(FinWadgeError):
    """A size cap guarding an exponential computation was exceeded."""


class DocumentError(FinWadgeError):
    """Malformed input document; message carries field context."""
