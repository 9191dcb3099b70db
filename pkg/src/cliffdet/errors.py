"""Exception hierarchy shared by every cliffdet module."""


class CliffordError(Exception):
    """Base class for all errors raised by cliffdet."""


class InputError(CliffordError):
    """Bad user input: wrong signature, field, grade or expression."""


class NumericalError(CliffordError):
    """A numerical procedure failed on valid input."""


class InternalInconsistency(CliffordError):
    """A quantity that must hold by construction did not (an implementation bug)."""


class UnsupportedDimension(InputError):
    pass


class UnsupportedSignature(InputError):
    pass


class SignatureMismatch(InputError):
    pass


class FieldViolation(InputError):
    pass


class GradeOutOfRange(InputError):
    pass


class NotInvertible(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, position=None, expected=None):
        super().__init__(message)
        self.position = position
        self.expected = expected


class BladeOutOfRange(ParseError):
    pass


class NonCanonicalBlade(ParseError):
    pass


class NotInImage(NumericalError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NonConvergence(NumericalError):
    pass
