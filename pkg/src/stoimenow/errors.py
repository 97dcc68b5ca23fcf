"""Exception hierarchy shared by every module of the package."""


class StoimenowError(ValueError):
    """Base class for domain errors raised by the package."""


class DuplicatePosition(StoimenowError):
    pass


class NotPerfect(StoimenowError):
    pass


class OpenerAfterCloser(StoimenowError):
    pass


class TooLarge(StoimenowError):
    pass


class BadFamilyIndex(StoimenowError):
    pass


class Not22Free(StoimenowError):
    pass


class NotRGF(StoimenowError):
    pass


class NotNonnesting(StoimenowError):
    pass


class PatternViolation(StoimenowError):
    """An input lies outside the pattern-avoiding class a map is defined on."""


class IterationCapExceeded(StoimenowError):
    pass


class NoIsolatedElement(StoimenowError):
    pass


class NonUnitConstantTerm(StoimenowError):
    pass


class NotDyck(StoimenowError):
    pass
