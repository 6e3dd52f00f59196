"""
Global Group Laws: Lazard Desk

Truncated universal formal group law relations, indecomposable counts,
validation of truncated formal group laws and classifying maps.
"""

from ._relations import (
    DEFAULT_DEGREE,
    MODES,
    PLAIN,
    TWO_TORSION,
    LatticeSummary,
    Relation,
    RelationSystem,
    indecomposable_ranks,
    smith_invariants,
    universal_fgl,
    universal_relations,
    universal_unknowns,
)
from ._validate import ASSOCIATIVITY, COMMUTATIVITY, UNIT, Violation, classify, validate_fgl
