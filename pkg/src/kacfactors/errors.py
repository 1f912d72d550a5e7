"""Exception hierarchy shared by all modules."""


class KacError(Exception):
    """Base class for every error raised by kacfactors."""


class ParseError(KacError, ValueError):
    pass


class NonRegular(KacError, ValueError):
    """A weight has a repeated entry inside its even or its odd part."""


class NotDominant(KacError, ValueError):
    pass


class IndexOutOfRange(KacError, IndexError):
    pass


class NotAtypicalPair(KacError, ValueError):
    pass


class DegreeMismatch(KacError, ValueError):
    pass


class DimensionMismatch(KacError, ValueError):
    pass


class ThetaOutOfRange(KacError, ValueError):
    pass


class ThetaNotInThetaLambda(KacError, ValueError):
    pass


class MalformedCode(KacError, ValueError):
    pass


class InvalidCode(KacError, ValueError):
    pass


class StripInvariantViolation(KacError, RuntimeError):
    """Raised when a removed region is not a rim strip. Indicates a bug."""


class VerificationFailure(KacError, RuntimeError):
    pass
