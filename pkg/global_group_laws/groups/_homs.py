"""
Global Group Laws: Group Homomorphisms Module

A homomorphism α: B → A is stored as an integer matrix M with one row
per character generator of A and one column per character generator of
B. Characters are row vectors and pull back as V ↦ V·M. Quotient groups
are handled through lifts to their ambient tori.

Functions Overview
------------------
- GroupHom: matrix-backed homomorphism with descent check and composition.
- char_pullback(V, α): V·M.
- kernel_subgroup(G, V): the kernel of V with an explicit splitting when
  V is split.
- identity, graph, projection, multiplication,
  diagonal: the structure maps used by the completion machinery.
"""

# Standard library imports
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

# Third-party library imports
import numpy as np

# Local application/library specific imports
from ..exceptions import DimensionMismatch, GroupSyntaxError, ZeroCharacter
from ..kernel import in_lattice, smith_with_transforms, unimodular_inverse
from ._groups import Character, GroupKind, GroupSpec, elem2, quotient, torus

logger = logging.getLogger(__name__)


class GroupHom:
    """Homomorphism source → target given on characters by V ↦ V·matrix."""

    __slots__ = ('source', 'target', 'matrix')

    def __init__(self, source: GroupSpec, target: GroupSpec, matrix):
        matrix = np.array(matrix, dtype=object).reshape(target.rank, source.rank)
        if source.family is not target.family:
            raise DimensionMismatch(f"groups:GroupHom:{source} and {target} live in different families")
        if target.modulus:
            matrix = matrix % target.modulus
        self.source = source
        self.target = target
        self.matrix = matrix
        self._check_descent()

    def _check_descent(self):
        # kernel characters of the target must pull back into the source kernel lattice
        for K in self.target.kernel_chars:
            pulled = tuple(int(v) for v in K.as_array().dot(self.matrix)) if self.source.rank else ()
            if not any(pulled):
                continue
            if self.source.kind is not GroupKind.QUOTIENT or not in_lattice(pulled, self.source.kernel_hnf):
                raise GroupSyntaxError(
                    f"groups:GroupHom:matrix {self.matrix.tolist()} does not descend to {self.source} -> {self.target}")

    def pullback(self, V: Character) -> Character:
        if V.rank != self.target.rank:
            raise DimensionMismatch(f"groups:GroupHom.pullback:{V} is not a character of {self.target}")
        if not self.source.rank:
            return Character((), self.source.modulus)
        entries = V.as_array().dot(self.matrix) if self.target.rank else np.zeros(self.source.rank, dtype=object)
        return Character(tuple(int(v) for v in entries), self.source.modulus)

    def monomial_images(self):
        """Exponent vectors of the pulled back generator characters."""
        return [[int(v) for v in row] for row in self.matrix]

    def compose(self, inner: 'GroupHom') -> 'GroupHom':
        """self ∘ inner."""
        if inner.target.rank != self.source.rank or inner.target.family is not self.source.family:
            raise DimensionMismatch(f"groups:GroupHom.compose:cannot compose {self} with {inner}")
        return GroupHom(inner.source, self.target, self.matrix.dot(inner.matrix))

    def __eq__(self, other):
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.matrix.tolist() == other.matrix.tolist())

    def __hash__(self):
        return hash((self.source, self.target, tuple(map(tuple, self.matrix.tolist()))))

    def __repr__(self):
        return f"GroupHom({self.source} -> {self.target}, {self.matrix.tolist()})"


def char_pullback(V: Character, alpha: GroupHom) -> Character:
    return alpha.pullback(V)


# region structure maps
def identity(group: GroupSpec) -> GroupHom:
    return GroupHom(group, group, np.identity(group.rank, dtype=object))


def character_hom(group: GroupSpec, V: Character) -> GroupHom:
    """V viewed as a homomorphism group → T (or → C2)."""
    return GroupHom(group, _circle_like(group), np.array([list(V.entries)], dtype=object))


def _circle_like(group: GroupSpec) -> GroupSpec:
    return elem2(1) if group.kind is GroupKind.ELEM2 else torus(1)


def graph(group: GroupSpec, W: Character) -> GroupHom:
    """(id, W): A → A × T; the character (V, k) pulls back to V + k·W."""
    r = group.rank
    matrix = np.vstack([np.identity(r, dtype=object), np.array([list(W.entries)], dtype=object)])
    return GroupHom(group, group.times_circle(), matrix)


def projection(group: GroupSpec) -> GroupHom:
    """A × T → A."""
    r = group.rank
    matrix = np.hstack([np.identity(r, dtype=object), np.zeros((r, 1), dtype=object)])
    return GroupHom(group.times_circle(), group, matrix)


def multiplication(group: GroupSpec) -> GroupHom:
    """id × m: A × T × T → A × T."""
    r = group.rank
    matrix = np.zeros((r + 1, r + 2), dtype=object)
    matrix[:r, :r] = np.identity(r, dtype=object)
    matrix[r, r] = 1
    matrix[r, r + 1] = 1
    return GroupHom(group.times_circles(2), group.times_circle(), matrix)


def diagonal(group: GroupSpec) -> GroupHom:
    """Δ: T → T^r (or C2 → C2^r)."""
    return GroupHom(_circle_like(group), group, np.ones((group.rank, 1), dtype=object))


def hom_from_rows(source: GroupSpec, target: GroupSpec, rows: Sequence[Sequence[int]]) -> GroupHom:
    return GroupHom(source, target, np.array([list(r) for r in rows], dtype=object).reshape(target.rank, source.rank))
# endregion


@dataclass(frozen=True)
class KernelSplitting:
    """ker(V) ⊆ G with its inclusion; split kernels also carry the
    retraction G → ker(V) and a section s with V∘s = id."""

    group: GroupSpec
    inclusion: GroupHom
    retraction: Optional[GroupHom] = None
    section: Optional[GroupHom] = None

    @property
    def split(self) -> bool:
        return self.section is not None


def kernel_subgroup(group: GroupSpec, V: Character) -> KernelSplitting:
    """Kernel of a nonzero character.

    For a torus (or C2^r) and a split V the kernel is identified with a
    torus of rank r − 1 through the Smith form V·W = u·(1, 0, …, 0).
    Otherwise the kernel is returned as a quotient presentation of the
    ambient torus, included by the identity lift.

    Raises
    ------
    ZeroCharacter
        When V is zero on the group.
    """
    if V.rank != group.rank:
        raise DimensionMismatch(f"groups:kernel_subgroup:{V} is not a character of {group}")
    if group.is_zero_character(V):
        raise ZeroCharacter(f"groups:kernel_subgroup:{V} is zero on {group}; its kernel is the whole group")
    r = group.rank
    if group.kind is not GroupKind.QUOTIENT:
        U, D, W = smith_with_transforms([list(V.entries)], r)
        if D[0][0] == 1:
            u = U[0][0]
            W_inv = unimodular_inverse(W)
            kernel = elem2(r - 1) if group.kind is GroupKind.ELEM2 else torus(r - 1)
            W_arr = np.array(W, dtype=object)
            inclusion = GroupHom(kernel, group, W_arr[:, 1:])
            retraction = GroupHom(group, kernel, np.array(W_inv, dtype=object)[1:, :])
            section = GroupHom(_circle_like(group), group, (u * W_arr[:, :1]))
            logger.debug(f"groups:kernel_subgroup:split kernel of {V} on {group}")
            return KernelSplitting(kernel, inclusion, retraction, section)
        if group.kind is GroupKind.ELEM2:
            raise ZeroCharacter(f"groups:kernel_subgroup:{V} is zero on {group}")
    kernel = quotient(r, list(group.kernel_chars) + [Character(V.entries)])
    return KernelSplitting(kernel, GroupHom(kernel, group, np.identity(r, dtype=object)))
