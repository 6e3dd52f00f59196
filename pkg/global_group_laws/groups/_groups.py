"""
Global Group Laws: Groups Module

Abelian compact Lie groups presented by character-lattice data.

Three shapes occur:

- TORUS(r): characters are integer row vectors of length r.
- ELEM2(r): the elementary abelian group C2^r; characters are F2 vectors.
- QUOTIENT(r, K): the closed subgroup of T^r cut out by the characters in
  K. Its character group is Z^r modulo the lattice spanned by K, so every
  character is carried by an ambient lift.

Functions Overview
------------------
- Character: immutable character vector with arithmetic.
- GroupSpec: group descriptor with product, labels and lattice helpers.
- torus, elem2, quotient, trivial_group: constructors.
- primitive_and_split(V): V = d·W with W primitive.
- enumerate_characters(G, bound): nonzero characters with entries in range.
"""

# Standard library imports
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from math import gcd
from typing import Iterator, List, Sequence, Tuple

# Third-party library imports
import numpy as np

# Local application/library specific imports
from ..exceptions import DimensionMismatch, GroupSyntaxError, ZeroCharacter
from ..kernel import hermite_rows, reduce_by_hermite, smith_diagonal

logger = logging.getLogger(__name__)


class GroupKind(Enum):
    TORUS = 'torus'
    ELEM2 = 'elem2'
    QUOTIENT = 'quotient'


class Family(Enum):
    """Families a global law can be defined on."""
    TORI = 'tori'
    ELEM2 = 'elem2'


@dataclass(frozen=True)
class Character:
    """A character as a row vector; modulus 2 marks F2 entries."""

    entries: Tuple[int, ...]
    modulus: int = 0

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if self.modulus:
            entries = tuple(v % self.modulus for v in entries)
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def zero(cls, rank: int, modulus: int = 0) -> 'Character':
        return cls((0,) * rank, modulus)

    @classmethod
    def basis(cls, rank: int, index: int, modulus: int = 0) -> 'Character':
        entries = [0] * rank
        entries[index] = 1
        return cls(tuple(entries), modulus)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object)

    def _same_shape(self, other: 'Character'):
        if other.rank != self.rank or other.modulus != self.modulus:
            raise DimensionMismatch(f"groups:Character:cannot combine {self} and {other}")

    def __add__(self, other: 'Character') -> 'Character':
        self._same_shape(other)
        return Character(tuple(a + b for a, b in zip(self.entries, other.entries)), self.modulus)

    def __neg__(self) -> 'Character':
        return Character(tuple(-a for a in self.entries), self.modulus)

    def __sub__(self, other: 'Character') -> 'Character':
        return self + (-other)

    def scale(self, n: int) -> 'Character':
        return Character(tuple(n * a for a in self.entries), self.modulus)

    def extend(self, *tail: int) -> 'Character':
        """The character (V, tail) of a product group."""
        return Character(self.entries + tuple(tail), self.modulus)

    def __str__(self):
        return '(' + ','.join(str(v) for v in self.entries) + ')'

    def to_json(self) -> List[int]:
        return list(self.entries)


@dataclass(frozen=True)
class GroupSpec:
    """Group descriptor.

    Parameters
    ----------
    kind : GroupKind
    rank : int
        Torus rank, F2 rank, or rank of the ambient torus for quotients.
    kernel_chars : tuple of Character
        Characters of the ambient torus cutting out a QUOTIENT group.
    """

    kind: GroupKind
    rank: int
    kernel_chars: Tuple[Character, ...] = field(default=())

    def __post_init__(self):
        if self.rank < 0:
            raise GroupSyntaxError(f"groups:GroupSpec:negative rank {self.rank}")
        for V in self.kernel_chars:
            if V.rank != self.rank or V.modulus:
                raise DimensionMismatch(f"groups:GroupSpec:kernel character {V} does not fit T^{self.rank}")

    @property
    def family(self) -> Family:
        return Family.ELEM2 if self.kind is GroupKind.ELEM2 else Family.TORI

    @property
    def modulus(self) -> int:
        return 2 if self.kind is GroupKind.ELEM2 else 0

    @property
    def ambient(self) -> 'GroupSpec':
        if self.kind is GroupKind.QUOTIENT:
            return torus(self.rank)
        return self

    def is_torus(self) -> bool:
        return self.kind is GroupKind.TORUS

    def is_trivial(self) -> bool:
        return self.rank == 0

    @cached_property
    def kernel_hnf(self) -> List[List[int]]:
        return hermite_rows([V.entries for V in self.kernel_chars], self.rank)

    def character(self, entries: Sequence[int]) -> Character:
        if len(entries) != self.rank:
            raise DimensionMismatch(
                f"groups:GroupSpec.character:{tuple(entries)} has length {len(entries)}, {self} has rank {self.rank}")
        return Character(tuple(entries), self.modulus)

    def reduce_character(self, V: Character) -> Character:
        """Canonical lift of V (reduced modulo the kernel lattice for quotients)."""
        if self.kind is GroupKind.QUOTIENT:
            return Character(reduce_by_hermite(V.entries, self.kernel_hnf))
        return V

    def is_zero_character(self, V: Character) -> bool:
        return self.reduce_character(V).is_zero()

    def invariant_factors(self) -> List[int]:
        """Torsion of the character group of a quotient (1's dropped)."""
        return [d for d in smith_diagonal([V.entries for V in self.kernel_chars], self.rank) if d > 1]

    def times_circle(self) -> 'GroupSpec':
        """A × T (or A × C2 in the F2 family); the new factor comes last."""
        if self.kind is GroupKind.ELEM2:
            return elem2(self.rank + 1)
        if self.kind is GroupKind.TORUS:
            return torus(self.rank + 1)
        return quotient(self.rank + 1, [V.extend(0) for V in self.kernel_chars])

    def times_circles(self, k: int) -> 'GroupSpec':
        group = self
        for _ in range(k):
            group = group.times_circle()
        return group

    @property
    def label(self) -> str:
        if self.rank == 0 and not self.kernel_chars:
            return '1'
        if self.kind is GroupKind.TORUS:
            return 'T' if self.rank == 1 else f"T^{self.rank}"
        if self.kind is GroupKind.ELEM2:
            return 'C2' if self.rank == 1 else f"C2^{self.rank}"
        if self.rank == 1 and len(self.kernel_chars) == 1:
            return f"C{abs(self.kernel_chars[0].entries[0])}"
        chars = '; '.join(','.join(str(v) for v in V.entries) for V in self.kernel_chars)
        return f"T^{self.rank} / [{chars}]"

    def __str__(self):
        return self.label


# region constructors
def torus(rank: int) -> GroupSpec:
    return GroupSpec(GroupKind.TORUS, int(rank))


def elem2(rank: int) -> GroupSpec:
    return GroupSpec(GroupKind.ELEM2, int(rank))


def quotient(rank: int, kernel_chars: Sequence[Character]) -> GroupSpec:
    """Closed subgroup of T^rank cut out by kernel_chars; zero characters are dropped."""
    chars = tuple(Character(tuple(V.entries)) for V in kernel_chars if not V.is_zero())
    if not chars:
        return torus(rank)
    return GroupSpec(GroupKind.QUOTIENT, int(rank), chars)


def cyclic(n: int) -> GroupSpec:
    """C_n presented as the kernel of z ↦ z^n on T."""
    if n < 1:
        raise GroupSyntaxError(f"groups:cyclic:C{n} is not a cyclic group")
    return quotient(1, [Character((n,))])


def trivial_group(family: Family = Family.TORI) -> GroupSpec:
    return elem2(0) if family is Family.ELEM2 else torus(0)
# endregion


def primitive_and_split(V: Character) -> Tuple[int, Character]:
    """Write V = d·W with W primitive.

    Returns
    -------
    (d, W) : d is the gcd of the entries; V is split exactly when d == 1.

    Raises
    ------
    ZeroCharacter
        When V = 0.
    """
    if V.is_zero():
        raise ZeroCharacter("groups:primitive_and_split:the zero character has no primitive part")
    d = 0
    for v in V.entries:
        d = gcd(d, v)
    return d, Character(tuple(v // d for v in V.entries), V.modulus)


def is_split(V: Character) -> bool:
    if V.modulus == 2:
        return not V.is_zero()
    return primitive_and_split(V)[0] == 1


def enumerate_characters(group: GroupSpec, bound: int = 1, split_only: bool = False) -> Iterator[Character]:
    """Nonzero characters with entries in [-bound, bound] (all nonzero F2 vectors for C2^r)."""
    values = range(2) if group.modulus == 2 else range(-bound, bound + 1)
    for entries in itertools.product(values, repeat=group.rank):
        V = Character(entries, group.modulus)
        if V.is_zero():
            continue
        if split_only and not is_split(V):
            continue
        yield V
