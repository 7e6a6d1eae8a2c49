"""Exception hierarchy shared by all modules."""


class ReturnWordsError(Exception):
    """Base class for every error raised by the package."""


class DomainError(ReturnWordsError, ValueError):
    """A letter outside the alphabet, or a malformed word."""


class ConstructionError(ReturnWordsError, ValueError):
    """A substitution or word source cannot be built as requested."""


class ParameterError(ReturnWordsError, ValueError):
    pass


class RangeError(ReturnWordsError, ValueError):
    """A length outside the certified range of a factor table."""


class NotAFactorError(ReturnWordsError, ValueError):
    pass


class CertificationError(ReturnWordsError):
    """The finite prefix could not be certified for the requested analysis."""


class SaturationError(CertificationError):
    pass


class StabilizationError(CertificationError):
    pass


class TrieCapError(ReturnWordsError):
    """Return-word trie grew past its depth cap."""


class ReductionNotApplicable(ReturnWordsError, ValueError):
    pass


class PreconditionError(ReturnWordsError, ValueError):
    pass


class NumericPrecisionError(ReturnWordsError, ArithmeticError):
    pass


class ConsistencyError(ReturnWordsError, AssertionError):
    """An identity that must always hold was violated; this is a bug."""
