"""
Global Group Laws: Additive Laws Module

The additive law: X(A) = k[e_V] / (e_{V+W} - e_V - e_W), realised as the
polynomial ring on the Euler classes of a character basis. The Euler class
of V is the linear form Σ V_i e_i.

The additive 2-torsion law is the same construction on elementary abelian
2-groups over F2, where e_V + e_W + e_{V+W} = 0.
"""

# Standard library imports
import logging
from typing import Tuple

# Local application/library specific imports
from ..exceptions import NotARingMap
from ..groups import Character, Family, GroupSpec
from ..kernel import CoefficientRing, LaurentPoly
from ._base import GlobalLaw
from ._presentations import PolynomialPresentation, Presentation

logger = logging.getLogger(__name__)


def _linear_form(ring: CoefficientRing, nvars: int, V: Character) -> LaurentPoly:
    terms = {}
    for i, v in enumerate(V.entries):
        if v:
            exp = [0] * nvars
            exp[i] = 1
            terms[tuple(exp)] = v
    return LaurentPoly(ring, nvars, terms)


class AdditiveLaw(GlobalLaw):
    """The additive global group law G_a over k."""

    @property
    def law_id(self) -> str:
        return f"add/{self.ring.label}"

    def _presentation(self, rank: int, relation_chars: Tuple[Character, ...]) -> Presentation:
        return PolynomialPresentation(self.ring, rank, [V.entries for V in relation_chars])

    def generator_image(self, source: GroupSpec, V: Character) -> LaurentPoly:
        return _linear_form(self.ring, source.rank, V)

    def coordinate_payload(self) -> LaurentPoly:
        return LaurentPoly.variable(self.ring, 1, 0)

    def over(self, ring: CoefficientRing) -> 'AdditiveLaw':
        return AdditiveLaw(ring)


class TwoTorsionAdditiveLaw(GlobalLaw):
    """The additive 2-torsion law on elementary abelian 2-groups over F2."""

    family = Family.ELEM2

    def __init__(self):
        super().__init__(CoefficientRing.prime_field(2))

    @property
    def law_id(self) -> str:
        return "2tor-add/F2"

    def _presentation(self, rank: int, relation_chars: Tuple[Character, ...]) -> Presentation:
        return PolynomialPresentation(self.ring, rank, [[v % 2 for v in V.entries] for V in relation_chars])

    def generator_image(self, source: GroupSpec, V: Character) -> LaurentPoly:
        return _linear_form(self.ring, source.rank, V)

    def coordinate_payload(self) -> LaurentPoly:
        return LaurentPoly.variable(self.ring, 1, 0)

    def over(self, ring: CoefficientRing) -> 'TwoTorsionAdditiveLaw':
        if ring != self.ring:
            raise NotARingMap(f"laws:TwoTorsionAdditiveLaw.over:the 2-torsion law lives over F2, not {ring.label}")
        return self


def additive_law(ring: CoefficientRing) -> AdditiveLaw:
    return AdditiveLaw(ring)


def two_torsion_additive_law() -> TwoTorsionAdditiveLaw:
    return TwoTorsionAdditiveLaw()
