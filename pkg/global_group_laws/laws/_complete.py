"""
Global Group Laws: Complete Laws Module

The global law attached to a formal group law F: X(T^r) = k[[x_1..x_r]],
restriction along a character V sends the coordinate to the F-linear
combination Σ_F V_i·x_i, and X(T^r / [V_1; ...]) is the power series ring
modulo the Euler series of the kernel characters. Everything is truncated
at total degree N + 1 for F of degree bound N.
"""

# Standard library imports
import logging
from typing import Optional, Tuple

# Local application/library specific imports
from ..exceptions import InvalidFGL
from ..groups import Character, GroupSpec
from ..kernel import (
    CoefficientRing,
    LaurentPoly,
    TruncatedFGL,
    associativity_residual,
    commutativity_defects,
    ring_map,
)
from ._base import GlobalLaw
from ._presentations import Presentation, TruncatedPresentation

logger = logging.getLogger(__name__)


class CompleteLaw(GlobalLaw):
    """Global law of a truncated formal group law."""

    def __init__(self, fgl: TruncatedFGL):
        super().__init__(fgl.ring)
        self.fgl = fgl

    @property
    def trunc(self) -> int:
        return self.fgl.trunc

    @property
    def law_id(self) -> str:
        return f"fgl/{self.ring.label}/N={self.fgl.N}"

    def _presentation(self, rank: int, relation_chars: Tuple[Character, ...]) -> Presentation:
        relations = [self.fgl.fgl_sum(V.entries, rank).poly for V in relation_chars]
        return TruncatedPresentation(self.ring, rank, self.trunc, relations)

    def generator_image(self, source: GroupSpec, V: Character) -> LaurentPoly:
        return self.fgl.fgl_sum(V.entries, source.rank).poly

    def coordinate_payload(self) -> LaurentPoly:
        return LaurentPoly.variable(self.ring, 1, 0)

    def over(self, ring: CoefficientRing) -> 'CompleteLaw':
        return CompleteLaw(self.fgl.over(ring, ring_map(self.ring, ring)))


def from_fgl(fgl: TruncatedFGL, truncation: Optional[int] = None) -> CompleteLaw:
    """The complete global law of F.

    Parameters
    ----------
    fgl : TruncatedFGL
        Must satisfy the commutativity and associativity axioms through its
        degree bound.
    truncation : int, optional
        Lower total-degree bound for the values; F is cut down to degree
        truncation - 1.

    Raises
    ------
    InvalidFGL
        When F violates an axiom.
    """
    if truncation is not None and truncation - 1 < fgl.N:
        fgl = fgl.truncate(truncation - 1)
    series = fgl.series()
    defects = commutativity_defects(series)
    if defects:
        raise InvalidFGL(f"laws:from_fgl:commutativity fails at {defects[0]}")
    residual = associativity_residual(series)
    if not residual.is_zero():
        raise InvalidFGL(f"laws:from_fgl:associativity residual {residual} does not vanish")
    logger.debug(f"laws:from_fgl:accepted F of degree bound {fgl.N} over {fgl.ring.label}")
    return CompleteLaw(fgl)
