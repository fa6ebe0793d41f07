"""Exception types shared across the package."""


class PresentationError(ValueError):
    """A matroid presentation (or other input payload) is malformed."""


class ExactnessError(ValueError):
    """An exact-arithmetic identity failed: non-integral division, a negative
    coefficient where none is allowed, or an inconsistent deck/invariant.

    Raising this instead of rounding is deliberate; it is how the library
    reports that an input vector is not the invariant of any matroid.
    """
