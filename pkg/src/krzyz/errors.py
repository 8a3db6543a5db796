"""Exception hierarchy shared by every module."""


class KrzyzError(Exception):
    """Base class for all library errors."""


class ModeMismatch(KrzyzError, TypeError):
    """Operands live in different scalar modes (exact vs float)."""


class DivisionByNonunit(KrzyzError, ZeroDivisionError):
    pass


class BadConstantTerm(KrzyzError, ValueError):
    pass


class CompositionAtNonzero(KrzyzError, ValueError):
    pass


class InsufficientOrder(KrzyzError, ValueError):
    pass


class NonpositiveParameter(KrzyzError, ValueError):
    pass


class NonrationalRotationInExactMode(KrzyzError, ValueError):
    pass


class BadNormalization(KrzyzError, ValueError):
    pass


class FloatModeRefused(KrzyzError, TypeError):
    pass


class EmptySegment(KrzyzError, ValueError):
    pass


class NotInOmega(KrzyzError, ValueError):
    """The input is not bounded by 1 in the disk (a Schur parameter exceeds 1)."""


class InvalidParameters(KrzyzError, ValueError):
    pass


class SingularSystem(KrzyzError, ValueError):
    pass


class RankDeficient(KrzyzError, ValueError):
    pass


class ZeroOutsideDisk(KrzyzError, ValueError):
    pass


class BeyondHorizon(KrzyzError, ValueError):
    pass


class UnsupportedPayloadForCsv(KrzyzError, ValueError):
    pass
