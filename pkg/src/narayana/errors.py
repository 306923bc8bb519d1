"""Exception types raised by the codec and analysis code."""


class NarayanaError(Exception):
    """Base class for every error raised by this package."""


class CapacityExceeded(NarayanaError, OverflowError):
    """A value or sequence term falls outside the supported integer range."""


class NonConvergence(NarayanaError, ArithmeticError):
    """An iterative root finder ran out of steps."""


class SearchBudgetExceeded(NarayanaError):
    """Exhaustive decomposition search visited more nodes than allowed."""


class MalformedCodeword(NarayanaError, ValueError):
    """Bits that do not form a valid codeword."""


class TrailingGarbage(MalformedCodeword):
    """A stream ends with bits that are neither codewords nor zero padding."""
