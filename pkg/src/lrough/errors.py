"""Exception hierarchy.

Every error raised on purpose by the library derives from ``LRoughError``.
``DomainError`` covers inputs that are well formed but mathematically
invalid; the CLI maps those to exit code 3.
"""


class LRoughError(Exception):
    pass


class ParseError(LRoughError):
    """Malformed input file, descriptor or flag."""


class DomainError(LRoughError):
    pass


class TableNotResiduated(DomainError):
    pass


class BadCarrier(DomainError):
    pass


class ForeignValue(DomainError):
    pass


class Undecidable(DomainError):
    pass


class UnknownLabel(DomainError):
    pass


class UniverseMismatch(DomainError):
    pass


class LatticeMismatch(DomainError):
    pass


class BetaZero(DomainError):
    def __init__(self, msg="beta must lie strictly above the lattice bottom"):
        super().__init__(msg)


class NotACovering(DomainError):
    def __init__(self, point, value=None, beta=None):
        self.point = point
        self.value = value
        self.beta = beta
        super().__init__(f"covering condition fails at {point}: join {value} is not >= beta {beta}")


class DimensionMismatch(DomainError):
    pass


class UnknownMember(DomainError):
    pass


class ContextMismatch(DomainError):
    pass


class UnknownAxiom(DomainError):
    pass


class UnknownCounterexample(DomainError):
    pass


class TableTooLarge(DomainError):
    pass


class AxiomsNotSatisfied(DomainError):
    def __init__(self, failing):
        self.failing = tuple(failing)
        super().__init__("operator fails axioms: " + ", ".join(self.failing))


class LatticePreconditionUnmet(DomainError):
    pass


class InvariantViolation(LRoughError):
    """Two code paths that must agree did not (CLI exit code 4)."""
