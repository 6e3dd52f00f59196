"""
Global Group Laws: Groups

Abelian compact Lie groups and their homomorphisms, presented by
character-lattice data.
"""

from ._groups import (
    Character,
    Family,
    GroupKind,
    GroupSpec,
    cyclic,
    elem2,
    enumerate_characters,
    is_split,
    primitive_and_split,
    quotient,
    torus,
    trivial_group,
)
from ._homs import (
    GroupHom,
    KernelSplitting,
    char_pullback,
    character_hom,
    diagonal,
    graph,
    hom_from_rows,
    identity,
    kernel_subgroup,
    multiplication,
    projection,
)
from ._parse import parse_character, parse_characters, parse_group
