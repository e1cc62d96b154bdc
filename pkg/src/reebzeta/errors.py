"""Exception types shared across the library.

Everything raised on bad input or a violated mathematical precondition
derives from ReebZetaError, so callers (in particular the CLI) can tell
library failures apart from genuine bugs.
"""


class ReebZetaError(Exception):
    """Base class for all errors raised by this library."""


# --- Novikov series ---

class NotAUnit(ReebZetaError, ArithmeticError):
    """Inversion of a series that is zero modulo its cutoff."""


class NotPositivelySupported(ReebZetaError, ValueError):
    """Exponential of a series with an exponent <= 0."""


class BadLeadingTerm(ReebZetaError, ValueError):
    """Logarithm of a series whose constant term is not 1, or with a
    negative exponent."""


# --- Orbit data ---

class NonPositiveAction(ReebZetaError, ValueError):
    """An action (orbit period, cutoff, evaluation level) that must be
    positive is not."""


class DuplicateLabel(ReebZetaError, ValueError):
    """Two records in one collection share a label."""


class NotThreeDimensional(ReebZetaError, ValueError):
    """Orbit with Lefschetz parities (1, 0) passed to a 3D-only
    operation; no 3-dimensional orbit type realizes that pair."""


class DegenerateOrbit(ReebZetaError, ValueError):
    """Return-map trace of absolute value 2: eigenvalue 1 or -1, so the
    elliptic/hyperbolic classification does not apply."""


# --- Filtered complexes ---

class NotSquareZero(ReebZetaError, ValueError):
    """The differential does not square to zero."""


class FiltrationViolation(ReebZetaError, ValueError):
    """A differential entry does not strictly decrease the filtration."""


class GradingViolation(ReebZetaError, ValueError):
    """A differential entry does not change the Z/2 grading."""


# --- Moebius product transform ---

class NonIntegerCoefficients(ReebZetaError, ValueError):
    """The transform input must have integer coefficients."""


class NonPositiveSupport(ReebZetaError, ValueError):
    """The transform input must be supported on strictly positive
    exponents."""


# --- Closed-form domains ---

class OnSpectrum(ReebZetaError, ValueError):
    """Evaluation level lies on the action spectrum, where the counting
    function jumps and is not defined."""


class BadMorseCounts(ReebZetaError, ValueError):
    """Critical point indices incompatible with a Morse function on the
    2-sphere."""


class NotCoprime(ReebZetaError, ValueError):
    """Normal vector components are not relatively prime."""
