"""Exception types shared across the package."""


class IndigraphError(Exception):
    """Base class for all package errors."""


class MalformedTable(IndigraphError):
    """Multiplication table is not a well-formed n x n index table."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoIdentity(MalformedTable):
    """No two-sided identity element exists."""


class NoInverse(MalformedTable):
    """Some element has no two-sided inverse; witness names the element."""


class NotAssociative(MalformedTable):
    """Associativity fails; witness is an offending triple (a, b, c)."""


class NotNormal(IndigraphError):
    """Quotient requested by a non-normal subgroup; witness (g, h, g h g^-1)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownRecipe(IndigraphError):
    """Recipe string does not parse or names an unsupported construction."""


class OrderTooLarge(IndigraphError):
    """Requested construction exceeds the configured order cap."""


class BudgetExceeded(IndigraphError):
    """A bounded search ran out of budget.  Partial results, when meaningful,
    are attached as .partial (flagged incomplete by the caller)."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class PreconditionViolated(IndigraphError):
    """An operation was called outside its documented precondition."""


class ClassDegreeMismatch(IndigraphError):
    """Degrees are not constant on a supplied vertex partition; witness is
    (class_index, vertex_a, degree_a, vertex_b, degree_b)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CatalogError(IndigraphError):
    """Catalog file is malformed (duplicate names, bad recipe, missing path)."""
