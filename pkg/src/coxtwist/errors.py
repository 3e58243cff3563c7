"""Exception types shared across the package."""


class CoxeterError(Exception):
    """Base class for all library errors."""


class MalformedMatrix(CoxeterError):
    """The bond matrix is not a valid Coxeter matrix."""


class OutOfEnumeratedRegion(CoxeterError):
    """A product left the cap-bounded enumerated ball."""


class InfiniteParabolic(CoxeterError):
    """A standard parabolic subgroup did not close within the enumerated region."""


class CapExceeded(CoxeterError):
    """An enumeration grew past its element cap."""


class AutomorphismError(CoxeterError):
    """Base class for diagram automorphism validation failures."""


class NotInvolutive(AutomorphismError):
    """The map composed with itself is not the identity on L."""


class BondMismatch(AutomorphismError):
    """The map does not preserve bond orders on L."""


class OutOfL(AutomorphismError):
    """The map touches generators outside the declared subset L."""


class NotInWL(CoxeterError):
    """The element does not lie in the standard parabolic subgroup on L."""


class NotFixed(CoxeterError):
    """The element is not a member of the fixed subgroup."""


class NotSameCoset(CoxeterError):
    """The two elements lie in different cosets of the fixed subgroup."""


class NotMinimal(CoxeterError):
    """The element is not of minimal length in its coset."""


class TheoremViolation(CoxeterError):
    """A structural guarantee failed on concrete data; report the witness."""


class DescriptionError(CoxeterError):
    """A group description document failed to parse or validate."""


class BadElementWord(CoxeterError):
    """An element word string failed to parse."""
