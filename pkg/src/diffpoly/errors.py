"""Exception hierarchy. Every library error carries a stable ``code`` string."""


class DiffPolyError(Exception):
    code = "domain-error"


class InvalidInputError(DiffPolyError):
    """Malformed input document (the CLI maps this to exit status 2)."""

    code = "invalid-input"


class DescriptorMismatchError(DiffPolyError):
    code = "descriptor-mismatch"


class RealRankElementError(DiffPolyError):
    code = "real-rank-element"


class SearchBoundExceededError(DiffPolyError):
    """Semigroup membership could not be decided within the search bound."""

    code = "search-bound-exceeded"


class NotAPolynomialError(DiffPolyError):
    code = "not-a-polynomial"


class NoDecompositionError(DiffPolyError):
    code = "no-decomposition-available"


class MembershipError(DiffPolyError):
    code = "membership-violation"


class DecompositionMismatchError(DiffPolyError):
    code = "decomposition-mismatch"


class NotHomogeneousError(DiffPolyError):
    code = "not-homogeneous-degree-2"


class DegenerateInputError(DiffPolyError):
    code = "degenerate-input"


class DegreeViolationError(DiffPolyError):
    code = "degree-violation"


class PointNotInTableError(DiffPolyError):
    code = "point-not-in-table"


class IdentityFailure(DiffPolyError):
    """An identity that must hold exactly did not; indicates a bug or bad input."""

    code = "identity-failure"
