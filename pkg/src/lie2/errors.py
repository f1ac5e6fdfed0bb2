"""Exception types shared across the package."""


class Lie2Error(Exception):
    """Base class for all package errors."""


class MalformedInput(Lie2Error):
    """Structurally inconsistent input (shape mismatch, bad document, ...)."""


class MissingRestrictedData(Lie2Error):
    """An operation needed a 2-map but the algebra does not carry one."""


class IncompatibleInputs(Lie2Error):
    """Two inputs that must share a base algebra or field do not."""


class LimitExceeded(Lie2Error):
    """A hard enumeration or degree cap was exceeded."""


class NotACocycle(Lie2Error):
    """A cochain that was required to be closed is not."""


class DivisionByZero(Lie2Error):
    """Inversion of zero in a finite field."""
