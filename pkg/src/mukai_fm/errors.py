"""Exception hierarchy.

Every domain error derives from :class:`MukaiError` (itself a ``ValueError``)
so callers can catch the whole family at once; the CLI maps it to exit code 1.
"""


class MukaiError(ValueError):
    """Base class for domain errors raised by this package."""


class HypothesisViolation(MukaiError):
    """A lattice-visible hypothesis of a theorem or construction failed.

    ``check`` names the failed hypothesis, ``value`` carries the offending
    computed quantity when there is one.
    """

    def __init__(self, check, message, value=None):
        super().__init__(message)
        self.check = check
        self.value = value


class InvalidSetup(MukaiError):
    pass


class UnsupportedKind(MukaiError):
    pass


class DegenerateSlope(MukaiError):
    pass


class InvalidModuliVector(MukaiError):
    pass


class NonSphericalMirror(MukaiError):
    pass


class InvalidFamilyParameters(MukaiError):
    pass


class ResourceLimit(MukaiError):
    pass
