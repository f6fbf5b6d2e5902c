"""Derived induction from a Borel subgroup, on its decidable fragment.

Covers the three situations where the answer follows from standard
vanishing rules alone: dominant weights (degree zero induction), weights
with a pairing of minus one against a simple coroot (all degrees vanish),
and weights fixable by a single dot-reflection (degree one is a costandard
module or zero).  Everything else is reported as Unknown rather than
guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .rootsystems import Weight, root_system, wscale, wsub


class CohomologyKind(Enum):
    ZERO = "zero"
    COSTANDARD = "costandard"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CohomologyResult:
    """Value of one derived-induction functor in one degree."""

    degree: int
    kind: CohomologyKind
    weight: Weight | None = None

    def __post_init__(self) -> None:
        if self.kind is CohomologyKind.COSTANDARD:
            if self.weight is None or any(c < 0 for c in self.weight):
                raise ValueError("costandard value requires a dominant weight")
        elif self.weight is not None:
            raise ValueError("only costandard values carry a weight")

    @property
    def is_zero(self) -> bool:
        return self.kind is CohomologyKind.ZERO

    @property
    def is_costandard(self) -> bool:
        return self.kind is CohomologyKind.COSTANDARD

    @property
    def is_unknown(self) -> bool:
        return self.kind is CohomologyKind.UNKNOWN


def _zero(degree: int) -> CohomologyResult:
    return CohomologyResult(degree, CohomologyKind.ZERO)


def dot_reflect_simple(name: str, i: int, wt: Weight) -> Weight:
    """Dot-action of the i-th simple reflection: rho-shift, reflect, unshift."""
    rs = root_system(name)
    return wsub(wt, wscale(wt[i] + 1, rs.simple_roots[i]))


def r_ind(name: str, sigma: Weight, degree: int) -> CohomologyResult:
    """Derived induction of the line k_sigma in one cohomological degree.

    Decision rules, in order:
      dominant sigma        -> costandard module in degree 0, zero above;
      some pairing == -1    -> zero in every degree;
      exactly one pairing <= -2, with the dot-reflected weight dominant
                            -> costandard in degree 1, zero in 0 and 2;
      same, but the reflected weight has a -1 pairing
                            -> zero in degrees 0..2;
      anything else         -> Unknown (never a silent guess).
    """
    if degree not in (0, 1, 2):
        raise ValueError(f"degree must be 0, 1 or 2, got {degree}")
    root_system(name)  # validates the system name
    if all(c >= 0 for c in sigma):
        if degree == 0:
            return CohomologyResult(0, CohomologyKind.COSTANDARD, sigma)
        return _zero(degree)
    if any(c == -1 for c in sigma):
        return _zero(degree)
    low = [i for i, c in enumerate(sigma) if c <= -2]
    if len(low) == 1:
        reflected = dot_reflect_simple(name, low[0], sigma)
        if all(c >= 0 for c in reflected):
            if degree == 1:
                return CohomologyResult(1, CohomologyKind.COSTANDARD, reflected)
            return _zero(degree)
        if any(c == -1 for c in reflected):
            return _zero(degree)
    return CohomologyResult(degree, CohomologyKind.UNKNOWN)


def r1_nonvanishing_possible(name: str, sigma: Weight) -> bool:
    """Pairing test: can degree-one induction of k_sigma be nonzero?

    False guarantees vanishing; true only flags a candidate.
    """
    root_system(name)
    if any(c == -1 for c in sigma):
        return False
    return any(c <= -2 for c in sigma)
