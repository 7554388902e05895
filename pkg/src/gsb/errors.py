"""Exception types shared across the engine."""


class GsbError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(GsbError, ZeroDivisionError):
    """Division or inversion by the zero scalar."""


class FieldMismatch(GsbError):
    """Operands do not belong to the same coefficient field."""


class AlphabetMismatch(GsbError):
    """Words from different alphabets were combined."""


class UniverseMismatch(GsbError):
    """Polynomials or monomials from different universes/orders were combined."""


class OrderMismatch(GsbError):
    """A monomial order is incompatible with the requested universe."""


class NotMonic(GsbError):
    """An operation requires monic input polynomials."""


class ZeroPolynomial(GsbError):
    """The zero polynomial has no leading term."""


class ParamNotApplicable(GsbError):
    """A composition family was instantiated with an inadmissible parameter."""


class ZeroInput(GsbError):
    """Completion input contained the zero polynomial."""


class DegreeOutOfBound(GsbError):
    """A query exceeds the verified degree bound."""


class BudgetExceeded(GsbError):
    """Completion hit its step budget; carries the partial state for resumption."""

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class NotMinimal(GsbError):
    """A basis fails the minimality requirement (leading-word containment)."""


class NotGroebner(GsbError):
    """A basis fails the Groebner-Shirshov closure check."""


class UnknownGenerator(GsbError):
    """A presentation refers to an undeclared generator."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class PresentationError(GsbError):
    """Syntax or consistency error in a presentation file."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        base = super().__str__()
        if self.line is not None:
            loc = f"line {self.line}"
            if self.column is not None:
                loc += f", column {self.column}"
            return f"{loc}: {base}"
        return base
