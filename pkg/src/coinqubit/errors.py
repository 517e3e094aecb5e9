"""Exception hierarchy for coinqubit.

Every error carries a short machine-readable ``code`` so the CLI can emit
structured error objects without inspecting exception types.
"""


class CoinQubitError(Exception):
    code = "error"


class DomainError(CoinQubitError):
    """Input is outside the mathematical domain of an operation."""

    code = "domain"


class ClassicalStateError(DomainError):
    """A quantum-only operation was given a triple outside the correlation ball."""

    code = "classical-state"


class NotPureError(DomainError):
    """A pure-state-only operation was given a non-pure triple."""

    code = "not-pure"


class NotOrthogonalError(DomainError):
    """The two input states are not orthogonal (their overlap is nonzero)."""

    code = "not-orthogonal"


class DegenerateSuperpositionError(DomainError):
    """Exact destructive interference: the superposed vector has zero norm."""

    code = "degenerate-superposition"


class DegeneratePhaseStateError(DomainError):
    """The phase-defining projector is orthogonal to one of the input states."""

    code = "degenerate-phase-state"


class InsufficientDataError(DomainError):
    """A measurement record is missing outcomes for at least one axis."""

    code = "insufficient-data"
