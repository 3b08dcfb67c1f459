"""Exception hierarchy.

Every error raised by the library derives from :class:`DyckPermError`, which
is itself a :class:`ValueError` so callers that only care about bad input can
catch the builtin.
"""


class DyckPermError(ValueError):
    pass


class NonAlphabet(DyckPermError):
    pass


class OddLength(DyckPermError):
    pass


class Unbalanced(DyckPermError):
    pass


class PrefixViolation(DyckPermError):
    pass


class InvalidPairing(DyckPermError):
    pass


class InvalidPerm(DyckPermError):
    pass


class CrossingPairing(DyckPermError):
    pass


class SizeMismatch(DyckPermError):
    pass


class IndexOutOfRange(DyckPermError):
    pass


class CapExceeded(DyckPermError):
    pass


class NotCcp(DyckPermError):
    pass


class HypothesisViolated(DyckPermError):
    pass


class SizeTooSmall(DyckPermError):
    pass


class TooLarge(DyckPermError):
    pass
