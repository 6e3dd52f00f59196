"""
Global Group Laws: Coordinate Change and Base Change Module

- CoordinateChangedLaw: the same functor with coordinate λ·e.
- base_change: push every value along the canonical ring map k → k'.
"""

# Standard library imports
import logging
from typing import Tuple, Union

# Local application/library specific imports
from ..exceptions import FamilyMismatch
from ..groups import Character, GroupHom, GroupSpec
from ..kernel import CoefficientRing, LaurentPoly, ring_map
from ._base import GlobalLaw, LawElement
from ._presentations import Presentation

logger = logging.getLogger(__name__)


class CoordinateChangedLaw(GlobalLaw):
    """`base` with the coordinate replaced by λ·e."""

    def __init__(self, base: GlobalLaw, unit: LawElement):
        if unit.group != base.circle():
            raise FamilyMismatch(f"laws:CoordinateChangedLaw:λ must live at {base.circle()}, not {unit.group}")
        super().__init__(base.ring)
        self.family = base.family
        self.base = base
        self.unit = unit

    @property
    def law_id(self) -> str:
        return f"{self.base.law_id}*({self.unit})"

    def _presentation(self, rank: int, relation_chars: Tuple[Character, ...]) -> Presentation:
        # relations are Euler classes of the new coordinate; they differ from the
        # old ones by units, so they generate the same ideal
        return self.base._presentation(rank, relation_chars)

    def generator_image(self, source: GroupSpec, V: Character) -> LaurentPoly:
        return self.base.generator_image(source, V)

    def restrict_payload(self, alpha: GroupHom, payload: LaurentPoly) -> LaurentPoly:
        return self.base.restrict_payload(alpha, payload)

    def coordinate_payload(self) -> LaurentPoly:
        return self.unit.payload * self.base.coordinate_payload()

    def over(self, ring: CoefficientRing) -> 'CoordinateChangedLaw':
        base = self.base.over(ring)
        fn = ring_map(self.ring, ring)
        unit = base.element(self.unit.group, self.unit.payload.map_coefficients(ring, fn))
        return CoordinateChangedLaw(base, unit)


def base_change(law: GlobalLaw, target: Union[CoefficientRing, str]) -> GlobalLaw:
    """X ⊗ k' along the canonical map k → k'.

    Raises
    ------
    NotARingMap
        When there is no ring map from the law's ring to `target`.
    """
    if isinstance(target, str):
        target = CoefficientRing.parse(target)
    ring_map(law.ring, target)
    logger.debug(f"laws:base_change:{law.law_id} -> {target.label}")
    return law.over(target)
