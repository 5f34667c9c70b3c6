"""Exception hierarchy shared by the library and the CLI."""


class PGCurveError(Exception):
    """Base class for all library errors."""


class OutOfDomain(PGCurveError, ValueError):
    """A parameter lies outside the curve's domain."""


class NumericallyUnstable(PGCurveError):
    """A finite-difference stencil would leave the domain."""


class AdmissibilityError(PGCurveError):
    """The curve is not admissible at the requested parameter."""


class DegenerateCurvature(AdmissibilityError):
    """Curvature vanishes (below threshold); the frame is undefined."""


class LightlikeNormal(AdmissibilityError):
    """``|y''| == |z''|``: the normal projection is lightlike and no sign epsilon exists."""


class NonPositiveCurvature(AdmissibilityError):
    """Prescribed curvature is not strictly positive at some node."""


class ToleranceNotReached(PGCurveError):
    """Quadrature refinement budget exhausted before meeting the tolerance."""


class InvalidFamilyParameter(PGCurveError, ValueError):
    """A special-curve family was given parameters outside its valid range."""


class ZeroNormCombination(PGCurveError):
    """A combination of frame vectors has zero pseudo-Galilean norm."""
