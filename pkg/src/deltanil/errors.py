"""Exception types raised across the package."""


class DeltaNilError(Exception):
    pass


class InvalidGroupType(DeltaNilError, ValueError):
    pass


class NonIncreasingExponents(InvalidGroupType):
    pass


class NonPositiveRank(InvalidGroupType):
    pass


class NotPrime(InvalidGroupType):
    pass


class CaseNotApplicable(DeltaNilError, ValueError):
    pass


class NotContainedInRadical(DeltaNilError, ValueError):
    pass


class StepOutOfRange(DeltaNilError, IndexError):
    pass


class InternalMismatch(DeltaNilError, AssertionError):
    """Two independent computations of the same object disagree."""


class ShapeViolation(DeltaNilError, ValueError):
    pass


class NotInDelta(DeltaNilError, ValueError):
    pass


class OrderExceedsGuard(DeltaNilError, ValueError):
    def __init__(self, required: int, allowed: int):
        super().__init__(f"|Delta(G)| = {required} exceeds the enumeration guard {allowed}")
        self.required = required
        self.allowed = allowed


class NotExponentShaped(DeltaNilError, AssertionError):
    pass
