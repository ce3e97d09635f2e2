"""Exception hierarchy.

``InputError`` subclasses map to CLI exit code 1, ``PreconditionError``
subclasses to exit code 2 and ``InvariantBreach`` to exit code 3.
"""


class BallOpsError(Exception):
    pass


class InputError(BallOpsError, ValueError):
    pass


class PreconditionError(BallOpsError, ValueError):
    pass


class InvariantBreach(BallOpsError, AssertionError):
    pass


class UnboundedRegion(PreconditionError):
    pass


class NotAPolygon(InputError):
    pass


class OriginNotInterior(InputError):
    pass


class NotSymmetric(InputError):
    pass


class NegativeRadius(PreconditionError):
    pass


class PointNotOnSphere(PreconditionError):
    pass


class PointNotOnBoundary(PreconditionError):
    pass


class Infeasible(PreconditionError):
    pass


class Unbounded(PreconditionError):
    pass


class EmptyInput(InputError):
    pass


class RadiusTooSmall(PreconditionError):
    pass


class PointsTooFar(PreconditionError):
    pass


class CoincidentPoints(PreconditionError):
    pass


class NotAChebyshevCenter(PreconditionError):
    pass


class NotCentrable(PreconditionError):
    pass
