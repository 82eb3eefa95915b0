"""Exception hierarchy shared by every layer of the package."""


class BFSSError(Exception):
    """Base class for all errors raised by this package."""


class GradeRangeError(BFSSError, ValueError):
    """A degree or bipolar grade lies outside its allowed interval."""


class UniverseMismatch(BFSSError):
    """Two operands are defined over different universes."""


class EmptyParameterIntersection(BFSSError):
    """A restricted operation was given operands with no shared parameter."""


class EmptyFamily(BFSSError):
    """A family operation received no members."""


class UnknownParameter(BFSSError, KeyError):
    """A requested parameter is not part of the soft set."""

    def __str__(self):
        return Exception.__str__(self)


class EmptyChoice(BFSSError):
    """A decision was requested over an empty set of parameters."""


class ParseError(BFSSError):
    """Dataset text is not well-formed."""


class ValidationError(BFSSError):
    """Dataset content violates a structural or range rule.

    ``path`` locates the offending element, e.g. ``values.e1.c3.pos``.
    """

    def __init__(self, message, path=None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)
