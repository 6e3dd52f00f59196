"""
Global Group Laws: Multiplicative Law Module

X(A) = k[A^*], the group ring of the character group, with coordinate
t - 1. At T^r this is the Laurent ring k[t_1^±, ..., t_r^±]; at a quotient
presentation the exponents live in Z^r modulo the kernel lattice.
"""

# Standard library imports
import logging
from typing import Tuple

# Local application/library specific imports
from ..groups import Character, GroupHom, GroupSpec
from ..kernel import CoefficientRing, LaurentPoly
from ._base import GlobalLaw
from ._presentations import LaurentPresentation, Presentation

logger = logging.getLogger(__name__)


class MultiplicativeLaw(GlobalLaw):
    """The multiplicative global group law over k."""

    @property
    def law_id(self) -> str:
        return f"mult/{self.ring.label}"

    def _presentation(self, rank: int, relation_chars: Tuple[Character, ...]) -> Presentation:
        return LaurentPresentation(self.ring, rank, [V.entries for V in relation_chars])

    def generator_image(self, source: GroupSpec, V: Character) -> LaurentPoly:
        return LaurentPoly.monomial(self.ring, source.rank, V.entries)

    def restrict_payload(self, alpha: GroupHom, payload: LaurentPoly) -> LaurentPoly:
        # restriction is a monomial substitution along the character matrix
        self.check_family(alpha.source)
        self.check_family(alpha.target)
        image = payload.substitute(alpha.monomial_images(), alpha.source.rank)
        return self.value(alpha.source).reduce(image)

    def coordinate_payload(self) -> LaurentPoly:
        return LaurentPoly(self.ring, 1, {(1,): 1, (0,): -1})

    def over(self, ring: CoefficientRing) -> 'MultiplicativeLaw':
        return MultiplicativeLaw(ring)


def multiplicative_law(ring: CoefficientRing) -> MultiplicativeLaw:
    return MultiplicativeLaw(ring)
