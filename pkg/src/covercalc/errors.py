"""Exception types raised across the library."""


class CoverCalcError(Exception):
    """Base class for all library errors."""


class ZeroIdealError(CoverCalcError):
    """A nonzero ideal was required but the zero ideal was supplied."""


class UnsupportedLiteralError(CoverCalcError):
    """The element literal cannot be interpreted for this ring kind."""


class UnknownIdealError(CoverCalcError):
    """The maximal ideal does not belong to the ring."""


class NotApplicableError(CoverCalcError):
    """The operation is undefined for this ring or descriptor."""


class NotEnumerableError(CoverCalcError):
    """The ring does not support enumeration of its maximal ideals."""


class HasDivisiblePartError(CoverCalcError):
    """Classification requires a reduced descriptor."""


class DimensionTooSmallError(CoverCalcError):
    """Vector-space covering needs dimension at least two."""


class NotCoverableError(CoverCalcError):
    """No cover by proper submodules exists."""


class NonEnumerableResidueError(CoverCalcError):
    """A concrete witness needs an enumerable finite residue field."""


class InfiniteResidueError(CoverCalcError):
    """Coset-covering counts require finite residue fields."""


class TrivialGroupError(CoverCalcError):
    """The trivial group has no punctured coset cover."""


class NotMaterializableError(CoverCalcError):
    """The descriptor cannot be realized as a concrete finite module."""


class TooLargeError(CoverCalcError):
    """The materialized module exceeds the configured size bound."""


class UnsupportedRingError(CoverCalcError):
    """The oracle only materializes modules over concrete rings."""


class ShapeMismatchError(CoverCalcError):
    """The witness does not fit the supplied module."""


class EmptyDescriptorError(CoverCalcError):
    """A monoid descriptor needs at least one summand."""


class SpecSyntaxError(CoverCalcError):
    """Input text does not conform to the descriptor grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SpecSemanticError(CoverCalcError):
    """Input parses but violates a descriptor invariant."""
