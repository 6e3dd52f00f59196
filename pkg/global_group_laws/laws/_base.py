"""
Global Group Laws: Global Law Interface Module

The abstract global law: a ring-valued functor on a family of groups
(tori and their quotient presentations, or elementary abelian 2-groups)
with a coordinate. Values are `Presentation` objects; elements are
`LawElement` wrappers around reduced Laurent payloads.

Restriction along α: B → A sends the generator of X(A) attached to the
i-th basis character to `generator_image(B, α^*(basis_i))`, so a law only
has to say what a single generator becomes. Values at quotient groups are
the left Kan extension X(T_A) / (e_V | V ∈ kernel characters), which is
the same recipe as quotienting by extra Euler classes.
"""

# Standard library imports
import logging
import threading
from abc import ABC, abstractmethod
from typing import Dict, Sequence, Tuple, Union

# Local application/library specific imports
from ..exceptions import FamilyMismatch, RingMismatch
from ..groups import (
    Character,
    Family,
    GroupHom,
    GroupSpec,
    character_hom,
    elem2,
    torus,
    trivial_group,
)
from ..kernel import CoefficientRing, LaurentPoly, parse_element
from ._presentations import Presentation

logger = logging.getLogger(__name__)


class GlobalLaw(ABC):
    """A global group law over a coefficient ring.

    Subclasses provide the presentation of a value, the image of one
    generator under restriction, and the coordinate.
    """

    family: Family = Family.TORI

    def __init__(self, ring: CoefficientRing):
        self.ring = ring
        self._values: Dict[Tuple, Presentation] = {}
        self._lock = threading.Lock()

    # region interface
    @property
    @abstractmethod
    def law_id(self) -> str:
        """Short identifier such as 'mult/Z'."""

    @abstractmethod
    def _presentation(self, rank: int, relation_chars: Tuple[Character, ...]) -> Presentation:
        """X(T^rank) modulo the Euler classes of relation_chars."""

    @abstractmethod
    def generator_image(self, source: GroupSpec, V: Character) -> LaurentPoly:
        """Image, in the variables of X(source), of the generator attached to a
        character that pulls back to V."""

    @abstractmethod
    def coordinate_payload(self) -> LaurentPoly:
        """The coordinate as an element of X(T) (or X(C2))."""

    @abstractmethod
    def over(self, ring: CoefficientRing) -> 'GlobalLaw':
        """The same law with coefficients pushed to `ring`."""
    # endregion

    def __str__(self):
        return self.law_id

    def __repr__(self):
        return f"{type(self).__name__}({self.law_id})"

    def circle(self) -> GroupSpec:
        return elem2(1) if self.family is Family.ELEM2 else torus(1)

    def trivial_group(self) -> GroupSpec:
        return trivial_group(self.family)

    def check_family(self, group: GroupSpec):
        if group.family is not self.family:
            raise FamilyMismatch(
                f"laws:GlobalLaw:{self.law_id} is defined on the {self.family.value} family, not on {group}")

    # region values
    def _cached(self, rank: int, chars: Tuple[Character, ...]) -> Presentation:
        key = (rank, tuple(V.entries for V in chars))
        with self._lock:
            if key not in self._values:
                self._values[key] = self._presentation(rank, chars)
                logger.debug(f"laws:value:{self.law_id} at rank {rank} with {len(chars)} relations")
            return self._values[key]

    def value(self, group: GroupSpec) -> Presentation:
        """X(group)."""
        self.check_family(group)
        return self._cached(group.rank, group.kernel_chars)

    def value_modulo(self, group: GroupSpec, chars: Sequence[Character]) -> Presentation:
        """X(group) / (e_V for V in chars)."""
        self.check_family(group)
        extra = tuple(Character(V.entries) if self.family is Family.TORI else V for V in chars)
        return self._cached(group.rank, tuple(group.kernel_chars) + extra)
    # endregion

    # region elements
    def element(self, group: GroupSpec, payload: Union[LaurentPoly, str, int]) -> 'LawElement':
        presentation = self.value(group)
        if isinstance(payload, str):
            payload = parse_element(payload, self.ring, presentation.names)
        elif isinstance(payload, int):
            payload = LaurentPoly.constant(self.ring, group.rank, payload)
        return LawElement(self, group, presentation.reduce(payload))

    def zero(self, group: GroupSpec) -> 'LawElement':
        return self.element(group, 0)

    def one(self, group: GroupSpec) -> 'LawElement':
        return self.element(group, 1)

    def restrict_payload(self, alpha: GroupHom, payload: LaurentPoly) -> LaurentPoly:
        self.check_family(alpha.source)
        self.check_family(alpha.target)
        images = []
        for i in range(alpha.target.rank):
            V = alpha.pullback(Character.basis(alpha.target.rank, i, alpha.target.modulus))
            images.append(self.generator_image(alpha.source, V))
        if not images:
            image = LaurentPoly.constant(self.ring, alpha.source.rank, payload.constant_term())
        else:
            image = payload.evaluate(images)
        return self.value(alpha.source).reduce(image)

    def restrict(self, alpha: GroupHom, x: 'LawElement') -> 'LawElement':
        """α^*(x) for α: B → A and x ∈ X(A)."""
        if x.law is not self and x.law.law_id != self.law_id:
            raise RingMismatch(f"laws:GlobalLaw.restrict:element of {x.law} restricted in {self}")
        if x.group != alpha.target:
            raise FamilyMismatch(f"laws:GlobalLaw.restrict:element lives at {x.group}, map targets {alpha.target}")
        return LawElement(self, alpha.source, self.restrict_payload(alpha, x.payload))

    def coordinate(self) -> 'LawElement':
        circle = self.circle()
        return LawElement(self, circle, self.value(circle).reduce(self.coordinate_payload()))

    def euler_payload(self, group: GroupSpec, V: Character) -> LaurentPoly:
        return self.restrict_payload(character_hom(group, V), self.coordinate().payload)

    def euler_class(self, group: GroupSpec, V: Character) -> 'LawElement':
        """e_V = V^*(e)."""
        self.check_family(group)
        return LawElement(self, group, self.euler_payload(group, V))
    # endregion


class LawElement:
    """x ∈ X(group), stored as a reduced payload."""

    __slots__ = ('law', 'group', 'payload')

    def __init__(self, law: GlobalLaw, group: GroupSpec, payload: LaurentPoly):
        self.law = law
        self.group = group
        self.payload = payload

    @property
    def presentation(self) -> Presentation:
        return self.law.value(self.group)

    def _other(self, other) -> LaurentPoly:
        if isinstance(other, LawElement):
            if other.group != self.group or other.law.law_id != self.law.law_id:
                raise RingMismatch(f"laws:LawElement:cannot combine elements of {self.group} and {other.group}")
            return other.payload
        return LaurentPoly.constant(self.law.ring, self.group.rank, other)

    def _wrap(self, payload: LaurentPoly) -> 'LawElement':
        return LawElement(self.law, self.group, self.presentation.reduce(payload))

    def __add__(self, other) -> 'LawElement':
        return self._wrap(self.payload + self._other(other))

    __radd__ = __add__

    def __sub__(self, other) -> 'LawElement':
        return self._wrap(self.payload - self._other(other))

    def __rsub__(self, other) -> 'LawElement':
        return self._wrap(self._other(other) - self.payload)

    def __neg__(self) -> 'LawElement':
        return LawElement(self.law, self.group, -self.payload)

    def __mul__(self, other) -> 'LawElement':
        return self._wrap(self.payload * self._other(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'LawElement':
        result = self.law.one(self.group)
        for _ in range(int(k)):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (LawElement, int)):
            return self.presentation.reduce(self.payload - self._other(other)).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.law.law_id, self.group, self.payload))

    def is_zero(self) -> bool:
        return self.payload.is_zero()

    def is_unit(self) -> bool:
        return self.presentation.is_unit(self.payload)

    def divide(self, den: 'LawElement') -> 'LawElement':
        return LawElement(self.law, self.group, self.presentation.divide(self.payload, self._other(den)))

    def restrict(self, alpha: GroupHom) -> 'LawElement':
        return self.law.restrict(alpha, self)

    def __str__(self):
        return self.presentation.to_string(self.payload)

    def __repr__(self):
        return f"LawElement({self.law.law_id}, {self.group}, '{self}')"

    def to_json_dict(self) -> dict:
        return {'law': self.law.law_id, 'group': self.group.label, 'names': list(self.presentation.names),
                'element': self.payload.to_json_dict()}
