"""
Global Group Laws: Coefficient Ring Module

Coefficient rings are thin, hashable descriptors around sympy domains.
Three ground rings are supported: the integers, the rationals and prime
fields. The Lazard desk additionally needs polynomial rings over those
in named unknowns; these are described by the same class with kind
POLYNOMIAL.

Functions Overview
------------------
- CoefficientRing.parse(label): "Z", "Q", "F2", "F<p>".
- ring_map(source, target): the canonical ring map between two ground
  rings, or NotARingMap when none exists.

Usage
-----
>>> k = CoefficientRing.parse("F5")
>>> k.convert(7)
2 mod 5
"""

# Standard library imports
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Callable, Tuple

# Third-party library imports
from sympy import Integer, Rational, isprime
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import ring as sparse_ring

# Local application/library specific imports
from ..exceptions import GroupSyntaxError, NotAUnit, NotARingMap


class RingKind(Enum):
    INTEGERS = 'Z'
    RATIONALS = 'Q'
    PRIME_FIELD = 'F'
    POLYNOMIAL = 'P'


@dataclass(frozen=True)
class CoefficientRing:
    """Hashable descriptor of a coefficient ring.

    Parameters
    ----------
    kind : RingKind
        Which ring family this is.
    p : int, optional
        The characteristic for prime fields, 0 otherwise.
    names : tuple of str, optional
        Unknowns of a polynomial ring (kind POLYNOMIAL only).
    base : CoefficientRing, optional
        Ground ring of a polynomial ring (kind POLYNOMIAL only).
    """

    kind: RingKind
    p: int = 0
    names: Tuple[str, ...] = ()
    base: Any = None

    def __post_init__(self):
        if self.kind is RingKind.PRIME_FIELD and not (self.p >= 2 and isprime(self.p)):
            raise GroupSyntaxError(f"kernel:CoefficientRing:F{self.p} is not a prime field")
        if self.kind is RingKind.POLYNOMIAL and (self.base is None or not self.names):
            raise GroupSyntaxError("kernel:CoefficientRing:polynomial rings need a base ring and unknowns")

    # region constructors
    @classmethod
    def integers(cls) -> 'CoefficientRing':
        return cls(RingKind.INTEGERS)

    @classmethod
    def rationals(cls) -> 'CoefficientRing':
        return cls(RingKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> 'CoefficientRing':
        return cls(RingKind.PRIME_FIELD, p=int(p))

    @classmethod
    def polynomial(cls, base: 'CoefficientRing', names) -> 'CoefficientRing':
        return cls(RingKind.POLYNOMIAL, p=base.p, names=tuple(names), base=base)

    @classmethod
    def parse(cls, label: str) -> 'CoefficientRing':
        """Parse a ring label ("Z", "Q", "F2", "F<p>")."""
        text = label.strip()
        if text == 'Z':
            return cls.integers()
        if text == 'Q':
            return cls.rationals()
        if text.startswith('F') and text[1:].isdigit():
            return cls.prime_field(int(text[1:]))
        raise GroupSyntaxError(f"kernel:CoefficientRing.parse:unknown ring '{label}' (expected Z, Q or F<p>)")
    # endregion

    @cached_property
    def domain(self):
        """The sympy domain backing this ring."""
        if self.kind is RingKind.INTEGERS:
            return ZZ
        if self.kind is RingKind.RATIONALS:
            return QQ
        if self.kind is RingKind.PRIME_FIELD:
            return GF(self.p, symmetric=False)
        poly_ring = sparse_ring(','.join(self.names), self.base.domain, grlex)[0]
        return poly_ring.to_domain()

    @property
    def label(self) -> str:
        if self.kind is RingKind.PRIME_FIELD:
            return f"F{self.p}"
        if self.kind is RingKind.POLYNOMIAL:
            return f"{self.base.label}[{','.join(self.names)}]"
        return self.kind.value

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_field(self) -> bool:
        return self.kind in (RingKind.RATIONALS, RingKind.PRIME_FIELD)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def __str__(self):
        return self.label

    def convert(self, value):
        """Convert an int, a rational string, a sympy number or a domain
        element into an element of this ring."""
        domain = self.domain
        if isinstance(value, str):
            value = Rational(value.strip())
        try:
            if isinstance(value, (Integer, Rational)):
                return domain.from_sympy(value)
            if isinstance(value, int):
                return domain(value)
            return domain.convert(value)
        except (CoercionFailed, TypeError, ValueError) as err:
            raise GroupSyntaxError(f"kernel:CoefficientRing.convert:{value!r} is not an element of {self.label}") from err

    def to_sympy(self, c):
        return self.domain.to_sympy(c)

    def to_string(self, c) -> str:
        return str(self.domain.to_sympy(c))

    def is_unit(self, c) -> bool:
        if not c:
            return False
        if self.kind is RingKind.INTEGERS:
            return c in (1, -1)
        if self.is_field:
            return True
        # polynomial ring: only nonzero constants that are units of the base
        if c.is_ground:
            return self.base.is_unit(self.base.domain.convert(c.LC))
        return False

    def inverse(self, c):
        if not self.is_unit(c):
            raise NotAUnit(f"kernel:CoefficientRing.inverse:{self.to_string(c)} is not a unit of {self.label}")
        if self.kind is RingKind.POLYNOMIAL:
            return self.domain.convert(self.base.inverse(self.base.domain.convert(c.LC)))
        return self.domain.quo(self.one, c)

    def exact_quotient(self, a, b):
        """Return a/b when b divides a in this ring, otherwise None."""
        if not b:
            return None
        q, r = self.domain.div(a, b)
        if r:
            return None
        return q

    def residue(self, c, modulus: int):
        """Canonical representative of an integer coefficient modulo `modulus`."""
        return self.domain(int(c) % modulus)


def ring_map(source: CoefficientRing, target: CoefficientRing) -> Callable:
    """Canonical ring map source → target.

    Parameters
    ----------
    source, target : CoefficientRing
        Ground rings (not polynomial rings).

    Returns
    -------
    Callable
        Maps elements of `source` to elements of `target`.

    Raises
    ------
    NotARingMap
        When no unital ring map exists (e.g. Q → F_p, F_p → Z, F_p → F_q).
    """
    ok = (
        source == target
        or source.kind is RingKind.INTEGERS and target.kind in (RingKind.RATIONALS, RingKind.PRIME_FIELD)
    )
    if not ok:
        raise NotARingMap(f"kernel:ring_map:there is no ring map {source.label} -> {target.label}")

    def _apply(c):
        return target.convert(source.to_sympy(c))

    return _apply
