"""Exception hierarchy for the tmcv package.

Every error raised deliberately by this package derives from TmcvError, so
callers can catch one type at CLI boundaries while library code stays
specific about what went wrong.
"""

from __future__ import annotations


class TmcvError(Exception):
    """Base class for all package errors."""


class WrongSystem(TmcvError):
    """Unknown root system name, or a weight of the wrong rank."""


class NotARoot(TmcvError):
    """A tuple that was expected to be a root of the ambient system."""


class NotDominant(TmcvError):
    """A weight that was required to be dominant."""


class NotRestricted(TmcvError):
    """A weight outside the restricted range for the given prime."""


class OnWall(TmcvError):
    """A weight sitting on a reflecting hyperplane where the operation is undefined."""


class OnBoxWall(OnWall):
    """A weight on the boundary of its simple-root box, so no box label exists."""


class UnlabeledAlcove(TmcvError):
    """An alcove with no entry in the bundled label table."""


class NegativeResidue(TmcvError):
    """A digit expansion produced a negative residue."""


class MissingKey(TmcvError):
    """A table lookup for a key the bundled data does not contain."""


class MissingData(TmcvError):
    """A bundled data file is absent from the data directory."""


class SchemaError(TmcvError):
    """A bundled data file fails structural validation."""


class OracleMismatch(TmcvError):
    """An exact cross-check between two independent computations failed."""


class ParityViolation(TmcvError):
    """A layer index with the wrong parity for its distance; breaks q-power extraction."""


class UnknownCohomology(TmcvError):
    """The induced-module cohomology fragment cannot decide this weight."""


class UnresolvedCase(TmcvError):
    """A filtration case analysis ended without a conclusive pattern."""


class CounterexampleFound(TmcvError):
    """A scan that was expected to be empty produced a witness."""


class SearchExhausted(TmcvError):
    """A bounded search ended without finding the required witness."""


class UnsupportedCase(TmcvError):
    """Input outside the intentionally supported range of a check."""


class CharacterMismatch(TmcvError):
    """Two characters that were required to agree exactly differ."""


class NegativityDetected(TmcvError):
    """A character that must be a genuine module character has a negative
    coefficient; signals corrupted decomposition data."""
