"""
Global Group Laws: Localized Elements Module

Elements of Φ^A(X) = X(A)[e_V^{-1} | V ≠ 0] kept as a numerator and a
multiset of denominator characters. Nothing is normalised; equality is
decided by cross-multiplication when X(A) is a domain, or by reduction
modulo ψ_n for the multiplicative law at a cyclic group.
"""

# Standard library imports
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

# Local application/library specific imports
from ..exceptions import DimensionMismatch, UndecidablePresentation, ZeroCharacter
from ..groups import Character, GroupKind, GroupSpec
from ..kernel import RingKind
from ..laws import GlobalLaw, LawElement, MultiplicativeLaw
from ._cyclic import CyclicFixedPoints, cyclic_fixed_points_mult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalizedElement:
    """numerator / ∏ e_V over the denominator characters."""

    numerator: LawElement
    denominators: Tuple[Character, ...] = ()

    def __post_init__(self):
        group = self.numerator.group
        chars = tuple(V if isinstance(V, Character) else group.character(tuple(V)) for V in self.denominators)
        for V in chars:
            if V.rank != group.rank:
                raise DimensionMismatch(f"fixed_points:LocalizedElement:{V} is not a character of {group}")
            if group.is_zero_character(V):
                raise ZeroCharacter(f"fixed_points:LocalizedElement:e_{V} is not inverted in Φ^{group}")
        object.__setattr__(self, 'denominators', chars)

    @property
    def group(self) -> GroupSpec:
        return self.numerator.group

    @property
    def law(self) -> GlobalLaw:
        return self.numerator.law

    def denominator(self) -> LawElement:
        product = self.law.one(self.group)
        for V in self.denominators:
            product = product * self.law.euler_class(self.group, V)
        return product

    def __mul__(self, other: 'LocalizedElement') -> 'LocalizedElement':
        return LocalizedElement(self.numerator * other.numerator, self.denominators + other.denominators)

    def __str__(self):
        if not self.denominators:
            return str(self.numerator)
        den = '*'.join(f"e_{V}" for V in self.denominators)
        return f"({self.numerator}) / ({den})"


def _cyclic_order(group: GroupSpec) -> Optional[int]:
    if group.kind is GroupKind.QUOTIENT and group.rank == 1 and len(group.kernel_chars) == 1:
        n = abs(group.kernel_chars[0].entries[0])
        return n if n >= 2 else None
    return None


def _cyclic_model(law: GlobalLaw, group: GroupSpec) -> Optional[CyclicFixedPoints]:
    n = _cyclic_order(group)
    if n is None or not isinstance(law, MultiplicativeLaw):
        return None
    if law.ring.kind not in (RingKind.INTEGERS, RingKind.RATIONALS):
        return None
    return cyclic_fixed_points_mult(n, law.ring)


def loc_eq(law: GlobalLaw, a: LocalizedElement, b: LocalizedElement) -> bool:
    """a = b in Φ^A(X).

    Raises
    ------
    UndecidablePresentation
        When X(A) is not a domain and no cyclic model applies.
    """
    if a.group != b.group:
        raise DimensionMismatch(f"fixed_points:loc_eq:{a.group} and {b.group} differ")
    group = a.group
    law.check_family(group)
    lhs = a.numerator * b.denominator()
    rhs = b.numerator * a.denominator()
    if law.value(group).is_domain():
        return lhs == rhs
    model = _cyclic_model(law, group)
    if model is not None:
        return model.is_zero((lhs - rhs).payload)
    raise UndecidablePresentation(
        f"fixed_points:loc_eq:{law.value(group).describe()} is not a domain; cannot compare fractions")


def loc_is_zero(law: GlobalLaw, a: LocalizedElement) -> bool:
    return loc_eq(law, a, LocalizedElement(law.zero(a.group)))
